"""Brute-force oracles and fixed corpora shared across the test suite.

Everything here recomputes properties from first principles with the
dumbest algorithm that could possibly work, so package code is checked
against an independent implementation rather than against itself.
"""

import itertools

from shymaps import (
    DigitalFunction,
    DigitalImage,
    ExplicitAdjacency,
    adjacent,
    rooted_tree,
)


def labels(n, edges):
    """An explicit-adjacency image on the 1-D points (0,), ..., (n-1,)."""
    return DigitalImage(
        frozenset((i,) for i in range(n)),
        ExplicitAdjacency(frozenset(((a,), (b,)) for a, b in edges)),
    )


def brute_connected(img, subset):
    """Connectivity by repeated neighbourhood expansion within the subset."""
    subset = set(subset)
    if len(subset) <= 1:
        return True
    reached = {min(subset)}
    while True:
        grown = {
            y
            for y in subset - reached
            if any(adjacent(img.adjacency, x, y) for x in reached)
        }
        if not grown:
            break
        reached |= grown
    return reached == subset


def brute_connected_subsets(img):
    """Nonempty connected subsets by filtering the whole powerset."""
    pts = sorted(img.points)
    out = set()
    for r in range(1, len(pts) + 1):
        for combo in itertools.combinations(pts, r):
            if brute_connected(img, combo):
                out.add(frozenset(combo))
    return out


def brute_articulation_points(img):
    """Cut points by deleting one point at a time and re-testing."""
    if len(img.points) <= 2:
        return frozenset()
    return frozenset(
        p for p in img.points if not brute_connected(img, img.points - {p})
    )


def brute_maps(dom, cod):
    """Every function between two images, by raw cartesian product."""
    pts = sorted(dom.points)
    for combo in itertools.product(sorted(cod.points), repeat=len(pts)):
        yield DigitalFunction(dom, cod, dict(zip(pts, combo)))


def brute_monotone_surjection_count(x_len, y_len):
    """Monotone continuous surjections [0, x_len] -> [0, y_len], counted
    directly on integer tuples without any package predicates."""
    count = 0
    for vals in itertools.product(range(y_len + 1), repeat=x_len + 1):
        if set(vals) != set(range(y_len + 1)):
            continue
        steps = [b - a for a, b in zip(vals, vals[1:])]
        if any(abs(s) > 1 for s in steps):
            continue
        if all(s >= 0 for s in steps) or all(s <= 0 for s in steps):
            count += 1
    return count


def tree_corpus():
    """Twenty fixed rooted trees with 3 to 9 vertices: paths, stars,
    spiders, a complete binary shape and a double star."""

    def path(n):
        return [(i, i + 1) for i in range(n - 1)]

    def star(legs):
        return [(0, i) for i in range(1, legs + 1)]

    def spider(*arms):
        edges = []
        nxt = 1
        for arm in arms:
            prev = 0
            for _ in range(arm):
                edges.append((prev, nxt))
                prev = nxt
                nxt += 1
        return edges

    shapes = [
        ("path-3", path(3)),
        ("path-4", path(4)),
        ("path-5", path(5)),
        ("path-6", path(6)),
        ("path-7", path(7)),
        ("path-8", path(8)),
        ("path-9", path(9)),
        ("star-3", star(3)),
        ("star-4", star(4)),
        ("star-5", star(5)),
        ("star-6", star(6)),
        ("star-7", star(7)),
        ("star-8", star(8)),
        ("spider-1-1-2", spider(1, 1, 2)),
        ("spider-1-2-2", spider(1, 2, 2)),
        ("spider-2-2-2", spider(2, 2, 2)),
        ("spider-1-1-4", spider(1, 1, 4)),
        ("spider-2-3-3", spider(2, 3, 3)),
        ("binary-depth-2", [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)]),
        ("double-star-2-3", [(0, 1), (0, 2), (0, 3), (3, 4), (3, 5), (3, 6)]),
    ]
    return {name: rooted_tree(edges, 0) for name, edges in shapes}
