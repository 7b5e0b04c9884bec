"""Finite digital images and their adjacency structure.

A digital image is a finite set of integer lattice points together with an
adjacency relation, which makes it an undirected graph.  Three adjacency
kinds are supported: the lattice adjacencies ``c_u`` (at most ``u``
coordinates change, each by exactly 1), an explicit unordered edge set (for
abstract graphs such as trees and cycles, whose points are 1-D integer
labels), and the normal product of two adjacencies, which is the adjacency
carried by cartesian products of images.

Everything in this module is immutable and pure, so values can be shared
freely between threads and used as dictionary keys.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Union

Point = tuple[int, ...]


class BoundExceeded(RuntimeError):
    """Raised when a size guard is hit before the requested work starts."""


def as_point(value) -> Point:
    """Coerce an int or an iterable of ints to a Point tuple."""
    if isinstance(value, int) and not isinstance(value, bool):
        return (value,)
    try:
        pt = tuple(value)
    except TypeError:
        raise ValueError(f"not a lattice point: {value!r}") from None
    if not pt or not all(isinstance(c, int) and not isinstance(c, bool) for c in pt):
        raise ValueError(f"not a lattice point: {value!r}")
    return pt


@dataclass(frozen=True)
class CUAdjacency:
    """The lattice adjacency c_u: points differ by at most 1 in every
    coordinate and in at most u coordinates overall."""

    u: int

    def validate(self, dimension: int) -> None:
        if not isinstance(self.u, int) or not 1 <= self.u <= dimension:
            raise ValueError(
                f"c_u parameter must satisfy 1 <= u <= {dimension}, got {self.u!r}"
            )


@dataclass(frozen=True)
class ExplicitAdjacency:
    """An explicit set of unordered edges between points.

    Edges are normalised to (min, max) pairs, so two instances built from
    the same edges in any order or orientation compare equal.
    """

    edges: frozenset[tuple[Point, Point]]

    def __post_init__(self):
        norm = set()
        for edge in self.edges:
            a, b = edge
            a, b = as_point(a), as_point(b)
            if a == b:
                raise ValueError(f"self-loop edge at {a}")
            if len(a) != len(b):
                raise ValueError(f"edge ({a}, {b}) mixes dimensions")
            norm.add((a, b) if a <= b else (b, a))
        object.__setattr__(self, "edges", frozenset(norm))

    def validate(self, dimension: int) -> None:
        for a, b in self.edges:
            if len(a) != dimension:
                raise ValueError(
                    f"edge ({a}, {b}) has dimension {len(a)}, expected {dimension}"
                )


@dataclass(frozen=True)
class NormalProductAdjacency:
    """Normal product of two adjacencies over a coordinate split.

    A point of the product is the concatenation of a left part of length
    ``left_dim`` and a right part of length ``right_dim``.  Two points are
    adjacent when each part is equal or adjacent in its factor and the
    points are not identical.
    """

    left: "Adjacency"
    left_dim: int
    right: "Adjacency"
    right_dim: int

    def validate(self, dimension: int) -> None:
        if self.left_dim < 1 or self.right_dim < 1:
            raise ValueError("normal product factors need dimension >= 1")
        if self.left_dim + self.right_dim != dimension:
            raise ValueError(
                f"factor dimensions {self.left_dim}+{self.right_dim} "
                f"do not sum to {dimension}"
            )
        self.left.validate(self.left_dim)
        self.right.validate(self.right_dim)


Adjacency = Union[CUAdjacency, ExplicitAdjacency, NormalProductAdjacency]


def cu_adjacent(x: Point, y: Point, u: int) -> bool:
    """Decide whether x and y are c_u-adjacent."""
    if len(x) != len(y):
        raise ValueError(f"points {x} and {y} have different dimensions")
    if not 1 <= u <= len(x):
        raise ValueError(f"c_u parameter must satisfy 1 <= u <= {len(x)}, got {u}")
    if x == y:
        return False
    changed = 0
    for a, b in zip(x, y):
        d = abs(a - b)
        if d > 1:
            return False
        changed += d
    return changed <= u


def adjacent(adjacency: Adjacency, x: Point, y: Point) -> bool:
    """Decide whether x and y are adjacent under the given relation."""
    if len(x) != len(y):
        raise ValueError(f"points {x} and {y} have different dimensions")
    if isinstance(adjacency, CUAdjacency):
        return cu_adjacent(x, y, adjacency.u)
    if isinstance(adjacency, ExplicitAdjacency):
        if x == y:
            return False
        return ((x, y) if x <= y else (y, x)) in adjacency.edges
    ld = adjacency.left_dim
    if len(x) != ld + adjacency.right_dim:
        raise ValueError(
            f"point {x} does not match the {ld}+{adjacency.right_dim} split"
        )
    xl, yl = x[:ld], y[:ld]
    xr, yr = x[ld:], y[ld:]
    left_eq = xl == yl
    right_eq = xr == yr
    if left_eq and right_eq:
        return False
    if not left_eq and not adjacent(adjacency.left, xl, yl):
        return False
    if not right_eq and not adjacent(adjacency.right, xr, yr):
        return False
    return True


@dataclass(frozen=True)
class DigitalImage:
    """A finite point set with an adjacency relation.

    ``dimension`` may be omitted for nonempty images, in which case it is
    inferred from the points.  Explicit edges must stay inside the point
    set.  Instances are hashable and safe to share.
    """

    points: frozenset[Point]
    adjacency: Adjacency
    dimension: int = None  # type: ignore[assignment]

    def __post_init__(self):
        pts = frozenset(as_point(p) for p in self.points)
        object.__setattr__(self, "points", pts)
        dim = self.dimension
        if dim is None:
            if not pts:
                raise ValueError("an empty image needs an explicit dimension")
            dim = len(next(iter(pts)))
            object.__setattr__(self, "dimension", dim)
        if not isinstance(dim, int) or dim < 1:
            raise ValueError(f"dimension must be a positive integer, got {dim!r}")
        for p in pts:
            if len(p) != dim:
                raise ValueError(f"point {p} has dimension {len(p)}, expected {dim}")
        self.adjacency.validate(dim)
        if isinstance(self.adjacency, ExplicitAdjacency):
            for a, b in sorted(self.adjacency.edges):
                if a not in pts or b not in pts:
                    raise ValueError(f"edge ({a}, {b}) leaves the point set")


@lru_cache(maxsize=None)
def _neighbor_map(img: DigitalImage) -> dict[Point, tuple[Point, ...]]:
    pts = sorted(img.points)
    if isinstance(img.adjacency, ExplicitAdjacency):
        out: dict[Point, list[Point]] = {p: [] for p in pts}
        for a, b in sorted(img.adjacency.edges):
            out[a].append(b)
            out[b].append(a)
        return {p: tuple(sorted(v)) for p, v in out.items()}
    return {
        p: tuple(q for q in pts if adjacent(img.adjacency, p, q)) for p in pts
    }


@lru_cache(maxsize=None)
def _neighbor_sets(img: DigitalImage) -> dict[Point, frozenset[Point]]:
    return {p: frozenset(v) for p, v in _neighbor_map(img).items()}


def neighbors(img: DigitalImage, x) -> frozenset[Point]:
    """All points of the image adjacent to x."""
    x = as_point(x)
    if x not in img.points:
        raise ValueError(f"{x} is not a point of the image")
    return _neighbor_sets(img)[x]


def adjacent_pairs(img: DigitalImage) -> Iterator[tuple[Point, Point]]:
    """Yield every unordered adjacent pair once, in lexicographic order."""
    nbr = _neighbor_map(img)
    for x in sorted(img.points):
        for y in nbr[x]:
            if x < y:
                yield x, y


def connected_components(img: DigitalImage) -> tuple[frozenset[Point], ...]:
    """Partition the points into connected components.

    Components are ordered by their lexicographically smallest point, so the
    result is deterministic.
    """
    nbr = _neighbor_map(img)
    seen: set[Point] = set()
    comps: list[frozenset[Point]] = []
    for p in sorted(img.points):
        if p in seen:
            continue
        comp = {p}
        stack = [p]
        while stack:
            x = stack.pop()
            for y in nbr[x]:
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        comps.append(frozenset(comp))
    return tuple(comps)


def is_connected(img: DigitalImage) -> bool:
    """True when the image has at most one component.  Empty images count
    as connected."""
    return len(connected_components(img)) <= 1


def is_connected_subset(img: DigitalImage, subset: Iterable[Point]) -> bool:
    """Decide whether a subset of the points is connected under the
    image's adjacency.  The empty subset and singletons are connected."""
    ss = frozenset(as_point(p) for p in subset)
    if not ss <= img.points:
        raise ValueError("subset must be drawn from the image's points")
    return _connected_subset(img, ss)


@lru_cache(maxsize=None)
def _connected_subset(img: DigitalImage, ss: frozenset[Point]) -> bool:
    if len(ss) <= 1:
        return True
    nbr = _neighbor_map(img)
    start = min(ss)
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in nbr[x]:
            if y in ss and y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(ss)


def sets_adjacent(img: DigitalImage, a: Iterable[Point], b: Iterable[Point]) -> bool:
    """Decide whether two subsets share a point or contain an adjacent pair."""
    sa = frozenset(as_point(p) for p in a)
    sb = frozenset(as_point(p) for p in b)
    if not sa <= img.points or not sb <= img.points:
        raise ValueError("both subsets must be drawn from the image's points")
    if sa & sb:
        return True
    nbs = _neighbor_sets(img)
    return any(nbs[p] & sb for p in sa)


def connected_subsets(
    img: DigitalImage, max_size: int | None = None
) -> Iterator[frozenset[Point]]:
    """Yield every nonempty connected subset with at most max_size points.

    Each subset is produced exactly once.  Subsets are grown from their
    lexicographically smallest point, adding only candidates that are new
    neighbours of the current subset, so no deduplication pass is needed
    and the output order is deterministic.  With max_size None all sizes
    are produced.
    """
    if max_size is None:
        max_size = max(1, len(img.points))
    if max_size < 1:
        raise ValueError(f"max_size must be at least 1, got {max_size}")
    order = sorted(img.points)
    idx = {p: i for i, p in enumerate(order)}
    nbr = _neighbor_map(img)

    def extend(sub: tuple[Point, ...], ext: tuple[Point, ...], seen: frozenset[Point]):
        yield frozenset(sub)
        if len(sub) >= max_size:
            return
        root_i = idx[sub[0]]
        for k, w in enumerate(ext):
            fresh = tuple(
                u for u in nbr[w] if idx[u] > root_i and u not in seen
            )
            yield from extend(sub + (w,), ext[k + 1:] + fresh, seen | frozenset(fresh))

    for i, root in enumerate(order):
        ext0 = tuple(u for u in nbr[root] if idx[u] > i)
        yield from extend((root,), ext0, frozenset((root,)) | frozenset(ext0))


@lru_cache(maxsize=None)
def _all_connected_subsets(img: DigitalImage) -> tuple[frozenset[Point], ...]:
    if not img.points:
        return ()
    return tuple(connected_subsets(img, len(img.points)))


def subimage(img: DigitalImage, points: Iterable[Point]) -> DigitalImage:
    """The induced image on a subset of the points."""
    sub = frozenset(as_point(p) for p in points)
    if not sub <= img.points:
        raise ValueError("subimage points must come from the image")
    adj = img.adjacency
    if isinstance(adj, ExplicitAdjacency):
        adj = ExplicitAdjacency(
            frozenset(e for e in adj.edges if e[0] in sub and e[1] in sub)
        )
    return DigitalImage(sub, adj, img.dimension)
