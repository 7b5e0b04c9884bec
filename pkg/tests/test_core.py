import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shymaps import (
    BoundExceeded,
    CUAdjacency,
    DigitalImage,
    ExplicitAdjacency,
    NormalProductAdjacency,
    adjacent,
    adjacent_pairs,
    connected_components,
    connected_subsets,
    cu_adjacent,
    interval,
    is_connected,
    is_connected_subset,
    neighbors,
    sets_adjacent,
    simple_closed_curve,
    subimage,
)
from shymaps.core import as_point

from helpers import brute_connected_subsets, labels


# ---------------------------------------------------------------------------
# c_u adjacency


def test_cu_adjacent_plane():
    # c_1 in the plane is 4-adjacency, c_2 is 8-adjacency
    assert cu_adjacent((0, 0), (0, 1), 1)
    assert cu_adjacent((0, 0), (1, 0), 1)
    assert not cu_adjacent((0, 0), (1, 1), 1)
    assert cu_adjacent((0, 0), (1, 1), 2)
    assert not cu_adjacent((0, 0), (2, 0), 2)
    assert not cu_adjacent((0, 0), (0, 0), 2)


@pytest.mark.parametrize("u,expected", [(1, 6), (2, 18), (3, 26)])
def test_cu_neighbor_counts_in_z3(u, expected):
    box = DigitalImage(
        frozenset(itertools.product((-1, 0, 1), repeat=3)), CUAdjacency(u)
    )
    assert len(neighbors(box, (0, 0, 0))) == expected


def test_cu_adjacent_is_symmetric_and_irreflexive():
    pts = list(itertools.product((-1, 0, 1), repeat=2))
    for u in (1, 2):
        for x in pts:
            assert not cu_adjacent(x, x, u)
            for y in pts:
                assert cu_adjacent(x, y, u) == cu_adjacent(y, x, u)


def test_as_point_normalisation():
    assert as_point(3) == (3,)
    assert as_point((1, 2)) == (1, 2)
    with pytest.raises(ValueError):
        as_point(True)
    with pytest.raises(ValueError):
        as_point("x")
    with pytest.raises(ValueError):
        as_point((1, 2.0))


# ---------------------------------------------------------------------------
# adjacency structures


def test_cu_adjacency_validates_range():
    CUAdjacency(1).validate(2)
    with pytest.raises(ValueError):
        CUAdjacency(0).validate(2)
    with pytest.raises(ValueError):
        CUAdjacency(3).validate(2)


def test_explicit_adjacency_normalises_edge_order():
    a = ExplicitAdjacency(frozenset({((0,), (1,))}))
    b = ExplicitAdjacency(frozenset({((1,), (0,))}))
    assert a == b
    assert adjacent(a, (0,), (1,))
    assert adjacent(a, (1,), (0,))
    assert not adjacent(a, (0,), (2,))


def test_explicit_adjacency_rejects_self_loops_and_mixed_dims():
    with pytest.raises(ValueError):
        ExplicitAdjacency(frozenset({((0,), (0,))}))
    with pytest.raises(ValueError):
        ExplicitAdjacency(frozenset({((0,), (1, 2))}))


def test_normal_product_adjacency_matches_definition():
    adj = NormalProductAdjacency(CUAdjacency(1), 1, CUAdjacency(1), 1)
    # each factor equal or adjacent, not both equal
    assert adjacent(adj, (0, 0), (1, 1))
    assert adjacent(adj, (0, 0), (0, 1))
    assert adjacent(adj, (0, 0), (1, 0))
    assert not adjacent(adj, (0, 0), (0, 0))
    assert not adjacent(adj, (0, 0), (2, 0))
    assert not adjacent(adj, (0, 0), (2, 1))


# ---------------------------------------------------------------------------
# images


def test_image_infers_dimension_and_coerces_ints():
    img = DigitalImage(frozenset({0, 1, 2}), CUAdjacency(1))
    assert img.dimension == 1
    assert (1,) in img.points


def test_empty_image_requires_dimension():
    with pytest.raises(ValueError):
        DigitalImage(frozenset(), CUAdjacency(1))
    img = DigitalImage(frozenset(), CUAdjacency(1), dimension=1)
    assert is_connected(img)
    assert connected_components(img) == ()


def test_image_rejects_mixed_dimensions():
    with pytest.raises(ValueError):
        DigitalImage(frozenset({(0,), (0, 1)}), CUAdjacency(1))


def test_image_rejects_edges_outside_points():
    adj = ExplicitAdjacency(frozenset({((0,), (5,))}))
    with pytest.raises(ValueError):
        DigitalImage(frozenset({(0,), (1,)}), adj)


def test_neighbors_and_adjacent_pairs():
    path = interval(0, 3)
    assert neighbors(path, (1,)) == frozenset({(0,), (2,)})
    assert neighbors(path, 1) == frozenset({(0,), (2,)})
    with pytest.raises(ValueError):
        neighbors(path, (9,))
    pairs = list(adjacent_pairs(path))
    assert pairs == [((0,), (1,)), ((1,), (2,)), ((2,), (3,))]


# ---------------------------------------------------------------------------
# connectivity


def test_connected_components_partition_and_order():
    img = DigitalImage(frozenset({(0,), (1,), (3,), (7,), (8,)}), CUAdjacency(1))
    comps = connected_components(img)
    assert [sorted(c) for c in comps] == [
        [(0,), (1,)],
        [(3,)],
        [(7,), (8,)],
    ]
    assert frozenset().union(*comps) == img.points
    assert not is_connected(img)


def test_is_connected_subset():
    path = interval(0, 2)
    assert is_connected_subset(path, {(0,), (1,)})
    assert not is_connected_subset(path, {(0,), (2,)})
    assert is_connected_subset(path, frozenset())
    with pytest.raises(ValueError):
        is_connected_subset(path, {(9,)})


def test_sets_adjacent():
    path = interval(0, 3)
    assert sets_adjacent(path, {(0,)}, {(1,)})
    assert not sets_adjacent(path, {(0,)}, {(2,)})
    # sharing a point counts
    assert sets_adjacent(path, {(0,), (1,)}, {(1,), (3,)})


def test_connected_subsets_of_small_interval():
    subs = list(connected_subsets(interval(0, 2)))
    assert len(subs) == len(set(subs)) == 6
    expected = {
        frozenset({(0,)}),
        frozenset({(1,)}),
        frozenset({(2,)}),
        frozenset({(0,), (1,)}),
        frozenset({(1,), (2,)}),
        frozenset({(0,), (1,), (2,)}),
    }
    assert set(subs) == expected


def test_connected_subsets_of_cycle():
    subs = set(connected_subsets(simple_closed_curve(4)))
    # 4 singletons + 4 edges + 4 paths of three + the whole cycle
    assert len(subs) == 13


def test_connected_subsets_respects_max_size():
    subs = list(connected_subsets(simple_closed_curve(4), 2))
    assert all(len(s) <= 2 for s in subs)
    assert len(subs) == 8
    with pytest.raises(ValueError):
        list(connected_subsets(interval(0, 1), 0))


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_connected_subsets_match_powerset_filter(data):
    n = data.draw(st.integers(min_value=1, max_value=5), label="n")
    possible = list(itertools.combinations(range(n), 2))
    edges = (
        data.draw(st.sets(st.sampled_from(possible)), label="edges")
        if possible
        else set()
    )
    img = labels(n, edges)
    fast = list(connected_subsets(img))
    assert len(fast) == len(set(fast))
    assert set(fast) == brute_connected_subsets(img)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_components_partition_points(data):
    n = data.draw(st.integers(min_value=1, max_value=6), label="n")
    possible = list(itertools.combinations(range(n), 2))
    edges = (
        data.draw(st.sets(st.sampled_from(possible)), label="edges")
        if possible
        else set()
    )
    img = labels(n, edges)
    comps = connected_components(img)
    seen = [p for c in comps for p in c]
    assert len(seen) == len(img.points)
    assert frozenset(seen) == img.points
    for c in comps:
        assert is_connected_subset(img, c)


# ---------------------------------------------------------------------------
# subimages


def test_subimage_filters_explicit_edges():
    img = labels(4, [(0, 1), (1, 2), (2, 3)])
    sub = subimage(img, {(0,), (1,), (3,)})
    assert adjacent(sub.adjacency, (0,), (1,))
    assert not adjacent(sub.adjacency, (2,), (3,))
    assert not is_connected(sub)


def test_subimage_keeps_lattice_adjacency():
    box = DigitalImage(
        frozenset(itertools.product((0, 1), repeat=2)), CUAdjacency(2)
    )
    sub = subimage(box, {(0, 0), (1, 1)})
    assert is_connected(sub)
    with pytest.raises(ValueError):
        subimage(box, {(9, 9)})


def test_bound_exceeded_is_runtime_error():
    assert issubclass(BoundExceeded, RuntimeError)
