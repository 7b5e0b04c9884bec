import pytest

from shymaps import (
    CUAdjacency,
    DigitalFunction,
    DigitalImage,
    ExplicitAdjacency,
    NormalProductAdjacency,
    RootedTree,
    adjacent,
    interval,
    is_connected,
    is_continuous,
    is_shy,
    is_surjective,
    neighbors,
    product_image,
    product_map,
    projections,
    rooted_tree,
    simple_closed_curve,
    subimage,
    three_branch_tree,
    wedge_image,
    wedge_map,
)


# ---------------------------------------------------------------------------
# intervals and cycles


def test_interval_shape():
    i = interval(-2, 1)
    assert sorted(i.points) == [(-2,), (-1,), (0,), (1,)]
    assert i.adjacency == CUAdjacency(1)
    assert is_connected(i)
    assert interval(3, 3).points == frozenset({(3,)})


def test_interval_rejects_reversed_bounds():
    with pytest.raises(ValueError):
        interval(1, 0)


def test_simple_closed_curve_every_point_has_two_neighbors():
    for m in (4, 5, 8):
        c = simple_closed_curve(m)
        assert len(c.points) == m
        for p in c.points:
            assert len(neighbors(c, p)) == 2
        assert is_connected(c)


def test_simple_closed_curve_minimum_size():
    for m in (0, 3):
        with pytest.raises(ValueError):
            simple_closed_curve(m)


def test_simple_closed_curve_wraps_around():
    c = simple_closed_curve(6)
    assert adjacent(c.adjacency, (0,), (5,))
    assert not adjacent(c.adjacency, (0,), (3,))


# ---------------------------------------------------------------------------
# rooted trees


def test_rooted_tree_star():
    t = rooted_tree([(0, 1), (0, 2), (0, 3)], 0)
    assert t.root == (0,)
    assert set(t.branches) == {
        frozenset({(0,), (1,)}),
        frozenset({(0,), (2,)}),
        frozenset({(0,), (3,)}),
    }


def test_rooted_tree_branches_meet_only_at_root():
    t = rooted_tree([(0, 1), (1, 2), (0, 3)], 0)
    assert set(t.branches) == {
        frozenset({(0,), (1,), (2,)}),
        frozenset({(0,), (3,)}),
    }


def test_rooted_tree_rejects_cycles_and_forests():
    with pytest.raises(ValueError):
        rooted_tree([(0, 1), (1, 2), (0, 2)], 0)
    with pytest.raises(ValueError):
        rooted_tree([(0, 1), (2, 3)], 0)
    with pytest.raises(ValueError):
        rooted_tree([(0, 1)], 5)


def test_rooted_tree_single_point():
    t = rooted_tree([], 0)
    assert t.image.points == frozenset({(0,)})
    assert t.branches == ()


def test_rooted_tree_validation_direct():
    img = DigitalImage(
        frozenset({(0,), (1,)}), ExplicitAdjacency(frozenset({((0,), (1,))}))
    )
    with pytest.raises(ValueError):
        RootedTree(img, (0,), (frozenset({(1,)}),))  # branch misses the root


def test_three_branch_tree_frozen_shape():
    t = three_branch_tree()
    assert len(t.image.points) == 11
    assert t.root == (0,)
    assert set(t.branches) == {
        frozenset({(0,), (1,)}),
        frozenset({(0,), (2,), (4,), (6,), (7,)}),
        frozenset({(0,), (3,), (5,), (8,), (9,), (10,)}),
    }


# ---------------------------------------------------------------------------
# products


def test_product_image_points_and_adjacency():
    p = product_image(interval(0, 1), interval(0, 2))
    assert len(p.points) == 6
    assert p.dimension == 2
    assert isinstance(p.adjacency, NormalProductAdjacency)
    # diagonal moves are product-adjacent
    assert adjacent(p.adjacency, (0, 0), (1, 1))
    assert not adjacent(p.adjacency, (0, 0), (0, 2))


def test_product_of_explicit_images():
    gap = DigitalImage(frozenset({(0,), (2,)}), CUAdjacency(1))
    p = product_image(gap, interval(0, 1))
    assert not adjacent(p.adjacency, (0, 0), (2, 0))
    assert adjacent(p.adjacency, (0, 0), (0, 1))
    assert not is_connected(p)


def test_product_map_values():
    f = DigitalFunction(interval(0, 1), interval(0, 1), {(0,): (1,), (1,): (0,)})
    g = DigitalFunction(interval(0, 2), interval(0, 0), {(i,): (0,) for i in range(3)})
    h = product_map(f, g)
    assert h((0, 2)) == (1, 0)
    assert h((1, 0)) == (0, 0)
    assert is_continuous(h)
    assert is_shy(h)


def test_projections_are_shy_surjections():
    p = product_image(interval(0, 1), interval(0, 2))
    left, right = projections(p)
    for proj in (left, right):
        assert is_continuous(proj)
        assert is_surjective(proj)
        assert is_shy(proj)
    assert left((1, 2)) == (1,)
    assert right((1, 2)) == (2,)


def test_projections_reject_non_product_images():
    with pytest.raises(ValueError):
        projections(interval(0, 2))
    # a proper subset of a product grid is not a full product either
    p = product_image(interval(0, 1), interval(0, 1))
    with pytest.raises(ValueError):
        projections(subimage(p, {(0, 0), (1, 1)}))


# ---------------------------------------------------------------------------
# wedges


def test_wedge_of_two_intervals():
    w = wedge_image(interval(-2, 0), interval(0, 2), (0,))
    assert len(w.whole.points) == 5
    assert w.junction == (0,)
    assert w.left == frozenset({(-2,), (-1,), (0,)})
    assert w.right == frozenset({(0,), (1,), (2,)})
    assert is_connected(w.whole)


def test_wedge_junction_must_be_shared():
    with pytest.raises(ValueError):
        wedge_image(interval(-2, -1), interval(0, 2), (0,))


def test_wedge_rejects_extra_overlap():
    with pytest.raises(ValueError):
        wedge_image(interval(-1, 1), interval(0, 2), (0,))


def test_wedge_rejects_cross_adjacency():
    left = DigitalImage(frozenset({(0, 0), (1, 1)}), CUAdjacency(2))
    right = DigitalImage(frozenset({(0, 0), (1, 0)}), CUAdjacency(2))
    with pytest.raises(ValueError):
        wedge_image(left, right, (0, 0))


def test_wedge_rejects_incompatible_adjacencies():
    left = interval(-1, 0)
    right = DigitalImage(
        frozenset({(0,), (1,)}), ExplicitAdjacency(frozenset({((0,), (1,))}))
    )
    with pytest.raises(ValueError):
        wedge_image(left, right, (0,))


def test_wedge_of_explicit_images_unions_edges():
    left = DigitalImage(
        frozenset({(0,), (1,)}), ExplicitAdjacency(frozenset({((0,), (1,))}))
    )
    right = DigitalImage(
        frozenset({(0,), (2,)}), ExplicitAdjacency(frozenset({((0,), (2,))}))
    )
    w = wedge_image(left, right, (0,))
    assert adjacent(w.whole.adjacency, (0,), (1,))
    assert adjacent(w.whole.adjacency, (0,), (2,))
    assert not adjacent(w.whole.adjacency, (1,), (2,))


def test_wedge_map_glues_halves():
    dom = wedge_image(interval(-1, 0), interval(0, 1), (0,))
    cod = wedge_image(interval(-1, 0), interval(0, 1), (0,))
    a = subimage(dom.whole, dom.left)
    b = subimage(dom.whole, dom.right)
    c = subimage(cod.whole, cod.left)
    d = subimage(cod.whole, cod.right)
    f = DigitalFunction(a, c, {(-1,): (-1,), (0,): (0,)})
    g = DigitalFunction(b, d, {(0,): (0,), (1,): (1,)})
    glued = wedge_map(f, g, dom, cod)
    assert glued.domain == dom.whole
    assert glued((-1,)) == (-1,)
    assert glued((1,)) == (1,)
    assert is_shy(glued)


def test_wedge_map_rejects_junction_disagreement():
    dom = wedge_image(interval(-1, 0), interval(0, 1), (0,))
    cod = wedge_image(interval(-1, 0), interval(0, 1), (0,))
    a = subimage(dom.whole, dom.left)
    b = subimage(dom.whole, dom.right)
    c = subimage(cod.whole, cod.left)
    d = subimage(cod.whole, cod.right)
    f = DigitalFunction(a, c, {(-1,): (0,), (0,): (-1,)})
    g = DigitalFunction(b, d, {(0,): (0,), (1,): (1,)})
    with pytest.raises(ValueError, match="junction"):
        wedge_map(f, g, dom, cod)


def test_wedge_map_rejects_wrong_halves():
    dom = wedge_image(interval(-1, 0), interval(0, 1), (0,))
    cod = wedge_image(interval(-1, 0), interval(0, 1), (0,))
    c = subimage(cod.whole, cod.left)
    d = subimage(cod.whole, cod.right)
    # f is defined on a longer arm than the decomposition's left half
    f = DigitalFunction(interval(-2, 0), c, {(-2,): (-1,), (-1,): (-1,), (0,): (0,)})
    g = DigitalFunction(interval(0, 1), d, {(0,): (0,), (1,): (1,)})
    with pytest.raises(ValueError):
        wedge_map(f, g, dom, cod)
