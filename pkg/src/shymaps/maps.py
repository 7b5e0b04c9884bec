"""Functions between digital images and their decision procedures.

Continuity and shyness each come in two computational flavours: a
polynomial check straight off the pointwise definition, and an exponential
oracle that quantifies over connected subsets.  The oracles exist so the
cheap checks can be audited against them; they carry explicit size guards.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .core import (
    BoundExceeded,
    DigitalImage,
    Point,
    _all_connected_subsets,
    _neighbor_sets,
    adjacent_pairs,
    as_point,
    is_connected_subset,
    sets_adjacent,
)


@dataclass(frozen=True)
class DigitalFunction:
    """A total function between two digital images.

    The mapping must assign a codomain point to every domain point,
    nothing more and nothing less.
    """

    domain: DigitalImage
    codomain: DigitalImage
    mapping: dict[Point, Point] = field(hash=False)

    def __post_init__(self):
        m = {}
        for k, v in self.mapping.items():
            if type(k) is not tuple:
                k = as_point(k)
            if type(v) is not tuple:
                v = as_point(v)
            m[k] = v
        if m.keys() != self.domain.points:
            raise ValueError("mapping must assign exactly the domain points")
        cod = self.codomain.points
        for v in m.values():
            if v not in cod:
                raise ValueError(f"value {v} is outside the codomain")
        object.__setattr__(self, "mapping", m)

    def __call__(self, x) -> Point:
        return self.mapping[as_point(x)]


@dataclass(frozen=True)
class MultiFunction:
    """A multivalued function: every source point gets a nonempty set of
    target points."""

    source: DigitalImage
    target: DigitalImage
    mapping: dict[Point, frozenset[Point]] = field(hash=False)

    def __post_init__(self):
        m = {}
        for k, vs in self.mapping.items():
            if type(k) is not tuple:
                k = as_point(k)
            m[k] = frozenset(as_point(v) for v in vs)
        if m.keys() != self.source.points:
            raise ValueError("mapping must assign exactly the source points")
        tgt = self.target.points
        for k, vs in m.items():
            if not vs:
                raise ValueError(f"value set at {k} is empty")
            if not vs <= tgt:
                raise ValueError(f"value set at {k} leaves the target")
        object.__setattr__(self, "mapping", m)


@dataclass(frozen=True)
class MapClassification:
    """The five classification flags of a map, with their implications
    enforced."""

    continuous: bool
    surjective: bool
    injective: bool
    shy: bool
    isomorphism: bool

    def __post_init__(self):
        if self.isomorphism and not (
            self.continuous and self.surjective and self.injective
        ):
            raise ValueError("an isomorphism must be a continuous bijection")
        if self.shy and not (self.continuous and self.surjective):
            raise ValueError("a shy map must be a continuous surjection")


@dataclass(frozen=True)
class ShyFailure:
    """Why a map is not shy: a reason code plus the first witness in
    canonical order."""

    reason: str
    witness: tuple = ()


def identity(img: DigitalImage) -> DigitalFunction:
    return DigitalFunction(img, img, {p: p for p in img.points})


def continuity_failure(f: DigitalFunction) -> Optional[tuple[Point, Point]]:
    """First adjacent domain pair mapped to distinct non-adjacent points,
    or None when the map is continuous."""
    cod_nbrs = _neighbor_sets(f.codomain)
    for x, y in adjacent_pairs(f.domain):
        fx, fy = f.mapping[x], f.mapping[y]
        if fx != fy and fx not in cod_nbrs[fy]:
            return x, y
    return None


def is_continuous(f: DigitalFunction) -> bool:
    """Adjacent points must land on equal or adjacent points."""
    return continuity_failure(f) is None


def continuity_oracle(f: DigitalFunction, max_points: int = 15) -> bool:
    """Continuity by the definition: every connected subset of the domain
    has a connected image.

    Exponential in the domain size; refuses domains larger than
    ``max_points``.
    """
    if len(f.domain.points) > max_points:
        raise BoundExceeded(
            f"domain has {len(f.domain.points)} points, oracle guard is {max_points}"
        )
    mp = f.mapping
    for sub in _all_connected_subsets(f.domain):
        image = frozenset(mp[p] for p in sub)
        if not is_connected_subset(f.codomain, image):
            return False
    return True


def is_surjective(f: DigitalFunction) -> bool:
    return frozenset(f.mapping.values()) == f.codomain.points


def is_injective(f: DigitalFunction) -> bool:
    return len(set(f.mapping.values())) == len(f.mapping)


def is_isomorphism(f: DigitalFunction) -> bool:
    """A continuous bijection whose inverse is continuous."""
    if not (is_injective(f) and is_surjective(f) and is_continuous(f)):
        return False
    inverse = DigitalFunction(
        f.codomain, f.domain, {v: k for k, v in f.mapping.items()}
    )
    return is_continuous(inverse)


def _preimages(f: DigitalFunction) -> dict[Point, frozenset[Point]]:
    pre: dict[Point, set[Point]] = {y: set() for y in f.codomain.points}
    for x, y in f.mapping.items():
        pre[y].add(x)
    return {y: frozenset(xs) for y, xs in pre.items()}


def shy_failure(f: DigitalFunction) -> Optional[ShyFailure]:
    """Why f is not shy, or None when it is.

    Checks run in a fixed order (continuity, surjectivity, point
    preimages, adjacent-pair preimages) and report the first failure in
    canonical point order, so results are reproducible.
    """
    bad_pair = continuity_failure(f)
    if bad_pair is not None:
        return ShyFailure("not_continuous", bad_pair)
    hit = frozenset(f.mapping.values())
    if hit != f.codomain.points:
        missing = min(f.codomain.points - hit)
        return ShyFailure("not_surjective", (missing,))
    pre = _preimages(f)
    for y in sorted(f.codomain.points):
        if not is_connected_subset(f.domain, pre[y]):
            return ShyFailure("point_preimage_disconnected", (y,))
    for y0, y1 in adjacent_pairs(f.codomain):
        if not is_connected_subset(f.domain, pre[y0] | pre[y1]):
            return ShyFailure("pair_preimage_disconnected", (y0, y1))
    return None


def is_shy(f: DigitalFunction) -> bool:
    """A continuous surjection whose point preimages and adjacent-pair
    preimages are all connected.  Non-surjective input yields False rather
    than an error."""
    return shy_failure(f) is None


def shyness_oracle(f: DigitalFunction, max_points: int = 15) -> bool:
    """Shyness by the subset characterisation: the preimage of every
    connected codomain subset is connected.

    Requires a continuous surjection and refuses codomains larger than
    ``max_points``; exponential in the codomain size.
    """
    if not is_continuous(f):
        raise ValueError("shyness oracle needs a continuous map")
    if not is_surjective(f):
        raise ValueError("shyness oracle needs a surjective map")
    if len(f.codomain.points) > max_points:
        raise BoundExceeded(
            f"codomain has {len(f.codomain.points)} points, "
            f"oracle guard is {max_points}"
        )
    pre = _preimages(f)
    for sub in _all_connected_subsets(f.codomain):
        union = frozenset().union(*(pre[y] for y in sub))
        if not is_connected_subset(f.domain, union):
            return False
    return True


def compose(g: DigitalFunction, f: DigitalFunction) -> DigitalFunction:
    """g after f.  The middle images must agree exactly, points and
    adjacency both."""
    if f.codomain != g.domain:
        raise ValueError("codomain of f must equal domain of g")
    return DigitalFunction(
        f.domain, g.codomain, {x: g.mapping[y] for x, y in f.mapping.items()}
    )


def inverse_multifunction(f: DigitalFunction) -> MultiFunction:
    """The preimage multifunction of a surjection."""
    if not is_surjective(f):
        raise ValueError("only surjections have a total inverse multifunction")
    return MultiFunction(f.codomain, f.domain, _preimages(f))


def has_weak_continuity(m: MultiFunction) -> bool:
    """Adjacent source points must have adjacent value sets (sets sharing
    a point count as adjacent)."""
    for x, y in adjacent_pairs(m.source):
        if not sets_adjacent(m.target, m.mapping[x], m.mapping[y]):
            return False
    return True


def is_connectivity_preserving(m: MultiFunction) -> bool:
    """Weak continuity plus a connected value set at every point."""
    if not has_weak_continuity(m):
        return False
    return all(
        is_connected_subset(m.target, vs) for vs in m.mapping.values()
    )


def connectivity_preserving_oracle(m: MultiFunction, max_points: int = 15) -> bool:
    """Connectivity preservation by the definition: every connected source
    subset has a connected image.  Exponential in the source size."""
    if len(m.source.points) > max_points:
        raise BoundExceeded(
            f"source has {len(m.source.points)} points, oracle guard is {max_points}"
        )
    for sub in _all_connected_subsets(m.source):
        image = frozenset().union(*(m.mapping[p] for p in sub))
        if not is_connected_subset(m.target, image):
            return False
    return True


def classify(f: DigitalFunction) -> MapClassification:
    """Compute all five classification flags of a map."""
    return MapClassification(
        continuous=is_continuous(f),
        surjective=is_surjective(f),
        injective=is_injective(f),
        shy=is_shy(f),
        isomorphism=is_isomorphism(f),
    )
