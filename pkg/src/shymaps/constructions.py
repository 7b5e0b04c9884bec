"""Builders for the stock digital images and the maps between them.

Intervals live on the integer line with c_1 adjacency.  Simple closed
curves and trees are abstract graphs carried by explicit edge sets on 1-D
integer labels.  Products concatenate coordinates and carry the normal
product adjacency; wedges glue two images at a single shared point.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .core import (
    Adjacency,
    CUAdjacency,
    DigitalImage,
    ExplicitAdjacency,
    NormalProductAdjacency,
    Point,
    adjacent,
    as_point,
    connected_components,
    is_connected,
    subimage,
)
from .maps import DigitalFunction


def interval(u: int, v: int) -> DigitalImage:
    """The digital interval [u, v] on the integer line with c_1 adjacency."""
    if not isinstance(u, int) or not isinstance(v, int):
        raise ValueError("interval endpoints must be integers")
    if u > v:
        raise ValueError(f"interval needs u <= v, got [{u}, {v}]")
    return DigitalImage(frozenset((z,) for z in range(u, v + 1)), CUAdjacency(1))


def simple_closed_curve(m: int) -> DigitalImage:
    """An abstract cycle on m points labelled 0..m-1.

    Every point has exactly two neighbours.  Cycles shorter than 4 are
    refused: with fewer points some pair of non-consecutive labels would
    coincide or touch.
    """
    if m < 4:
        raise ValueError(f"a simple closed curve needs at least 4 points, got {m}")
    edges = frozenset(((i,), ((i + 1) % m,)) for i in range(m))
    return DigitalImage(frozenset((i,) for i in range(m)), ExplicitAdjacency(edges))


@dataclass(frozen=True)
class RootedTree:
    """A tree image with a distinguished root and its branch decomposition.

    Branch i consists of the root, the i-th neighbour of the root (in
    lexicographic order), and everything reachable from that neighbour
    without passing through the root.  Branches pairwise intersect in
    exactly the root and jointly cover the tree.
    """

    image: DigitalImage
    root: Point
    branches: tuple[frozenset[Point], ...]

    def __post_init__(self):
        object.__setattr__(self, "root", as_point(self.root))
        img = self.image
        if not isinstance(img.adjacency, ExplicitAdjacency):
            raise ValueError("a rooted tree needs an explicit edge set")
        if self.root not in img.points:
            raise ValueError(f"root {self.root} is not a point of the tree")
        if not is_connected(img):
            raise ValueError("a tree must be connected")
        if len(img.adjacency.edges) != len(img.points) - 1:
            raise ValueError("a tree must have exactly n-1 edges")
        branches = tuple(frozenset(b) for b in self.branches)
        object.__setattr__(self, "branches", branches)
        union: set[Point] = set()
        for i, bi in enumerate(branches):
            if self.root not in bi:
                raise ValueError("every branch must contain the root")
            for bj in branches[i + 1:]:
                if bi & bj != {self.root}:
                    raise ValueError("branches may only share the root")
            union |= bi
        if branches and union != img.points:
            raise ValueError("branches must cover the tree")
        if not branches and len(img.points) != 1:
            raise ValueError("branches must cover the tree")


def rooted_tree(edges: Iterable[tuple], root) -> RootedTree:
    """Build a rooted tree from an edge list.

    Edge endpoints may be bare integers or points.  The edges must form a
    tree containing the root; an empty edge list yields the one-point tree.
    """
    root = as_point(root)
    norm = []
    pts = {root}
    for a, b in edges:
        a, b = as_point(a), as_point(b)
        norm.append((a, b))
        pts.add(a)
        pts.add(b)
    img = DigitalImage(frozenset(pts), ExplicitAdjacency(frozenset(norm)))
    if not is_connected(img):
        raise ValueError("edges do not form a connected tree")
    if len(img.adjacency.edges) != len(img.points) - 1:
        raise ValueError("edges contain a cycle")
    nbr = {p: set() for p in img.points}
    for a, b in img.adjacency.edges:
        nbr[a].add(b)
        nbr[b].add(a)
    branches = []
    for child in sorted(nbr[root]):
        reached = {child}
        stack = [child]
        while stack:
            x = stack.pop()
            for y in nbr[x]:
                if y != root and y not in reached:
                    reached.add(y)
                    stack.append(y)
        branches.append(frozenset({root} | reached))
    return RootedTree(img, root, tuple(branches))


def three_branch_tree() -> RootedTree:
    """A small tree whose root has three branches of sizes 2, 5 and 6.

    Labels: root 0; branch children 1, 2, 3; the deeper branches continue
    through 4 and 5.  Used as the default input of the cut-vertex audit.
    """
    edges = [
        (0, 1),
        (0, 2), (2, 4), (4, 6), (4, 7),
        (0, 3), (3, 5), (5, 8), (5, 9), (5, 10),
    ]
    return rooted_tree(edges, 0)


@lru_cache(maxsize=None)
def product_image(left: DigitalImage, right: DigitalImage) -> DigitalImage:
    """Cartesian product of the point sets under the normal product
    adjacency.  Product points are coordinate concatenations."""
    pts = frozenset(
        a + b for a in left.points for b in right.points
    )
    adj = NormalProductAdjacency(
        left.adjacency, left.dimension, right.adjacency, right.dimension
    )
    return DigitalImage(pts, adj, left.dimension + right.dimension)


def product_map(f: DigitalFunction, g: DigitalFunction) -> DigitalFunction:
    """The map acting as f on the left coordinates and g on the right."""
    dom = product_image(f.domain, g.domain)
    cod = product_image(f.codomain, g.codomain)
    ld = f.domain.dimension
    mapping = {p: f.mapping[p[:ld]] + g.mapping[p[ld:]] for p in dom.points}
    return DigitalFunction(dom, cod, mapping)


def projections(p: DigitalImage) -> tuple[DigitalFunction, DigitalFunction]:
    """The two coordinate projections of a product image.

    The input must carry a normal product adjacency and its point set must
    be the full cartesian product of its coordinate shadows.
    """
    adj = p.adjacency
    if not isinstance(adj, NormalProductAdjacency):
        raise ValueError("projections need an image built as a product")
    ld = adj.left_dim
    left_pts = frozenset(q[:ld] for q in p.points)
    right_pts = frozenset(q[ld:] for q in p.points)
    if p.points != frozenset(a + b for a in left_pts for b in right_pts):
        raise ValueError("point set is not a full cartesian product")
    left = DigitalImage(left_pts, adj.left, ld)
    right = DigitalImage(right_pts, adj.right, adj.right_dim)
    p1 = DigitalFunction(p, left, {q: q[:ld] for q in p.points})
    p2 = DigitalFunction(p, right, {q: q[ld:] for q in p.points})
    return p1, p2


@dataclass(frozen=True)
class WedgeDecomposition:
    """Two images glued at a single junction point.

    The halves cover the whole, intersect in exactly the junction, and all
    adjacency between the halves passes through the junction.
    """

    whole: DigitalImage
    left: frozenset[Point]
    right: frozenset[Point]
    junction: Point

    def __post_init__(self):
        object.__setattr__(self, "left", frozenset(as_point(p) for p in self.left))
        object.__setattr__(self, "right", frozenset(as_point(p) for p in self.right))
        object.__setattr__(self, "junction", as_point(self.junction))
        if self.left | self.right != self.whole.points:
            raise ValueError("halves must cover the whole image")
        if self.left & self.right != {self.junction}:
            raise ValueError("halves must intersect in exactly the junction")
        adj = self.whole.adjacency
        for x in sorted(self.left - {self.junction}):
            for y in sorted(self.right - {self.junction}):
                if adjacent(adj, x, y):
                    raise ValueError(
                        f"cross adjacency {x} ~ {y} does not pass the junction"
                    )


def wedge_image(
    left: DigitalImage, right: DigitalImage, junction
) -> WedgeDecomposition:
    """Validate and assemble the wedge of two images meeting at a point.

    The point sets must intersect in exactly the junction and no point of
    one side may be adjacent to a point of the other, junction aside.  Both
    sides must carry the same adjacency kind; explicit edge sets are
    unioned, lattice and product adjacencies must agree outright.
    """
    junction = as_point(junction)
    if left.dimension != right.dimension:
        raise ValueError("wedge halves must have the same dimension")
    shared = left.points & right.points
    if junction not in shared:
        raise ValueError(f"junction {junction} is not shared by both halves")
    extra = shared - {junction}
    if extra:
        raise ValueError(
            f"halves overlap beyond the junction, e.g. at {min(extra)}"
        )
    la, ra = left.adjacency, right.adjacency
    if isinstance(la, ExplicitAdjacency) and isinstance(ra, ExplicitAdjacency):
        adj: Adjacency = ExplicitAdjacency(la.edges | ra.edges)
    elif la == ra:
        adj = la
    else:
        raise ValueError("wedge halves carry incompatible adjacencies")
    whole = DigitalImage(left.points | right.points, adj, left.dimension)
    for x in sorted(left.points - {junction}):
        for y in sorted(right.points - {junction}):
            if adjacent(adj, x, y):
                raise ValueError(
                    f"cross adjacency {x} ~ {y} does not pass the junction"
                )
    return WedgeDecomposition(whole, left.points, right.points, junction)


def wedge_map(
    f: DigitalFunction,
    g: DigitalFunction,
    dom: WedgeDecomposition,
    cod: WedgeDecomposition,
) -> DigitalFunction:
    """Paste two maps along the junctions of two wedges.

    f must map the left half of dom into the left half of cod, g the right
    halves likewise, and both must send dom's junction to cod's junction.
    """
    if f.domain != subimage(dom.whole, dom.left):
        raise ValueError("f must be defined on the left half of the domain wedge")
    if g.domain != subimage(dom.whole, dom.right):
        raise ValueError("g must be defined on the right half of the domain wedge")
    if f.codomain != subimage(cod.whole, cod.left):
        raise ValueError("f must map into the left half of the codomain wedge")
    if g.codomain != subimage(cod.whole, cod.right):
        raise ValueError("g must map into the right half of the codomain wedge")
    fj = f.mapping[dom.junction]
    gj = g.mapping[dom.junction]
    if fj != cod.junction or gj != cod.junction:
        raise ValueError(
            f"maps disagree at the junction: f sends it to {fj}, g to {gj}, "
            f"expected {cod.junction}"
        )
    mapping = dict(g.mapping)
    mapping.update(f.mapping)
    return DigitalFunction(dom.whole, cod.whole, mapping)
