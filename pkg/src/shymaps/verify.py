"""Exhaustive audit suites.

Every suite enumerates a finite space of maps (or point pairs), checks a
stated property on each instance, and returns a ``VerificationReport``.
Enumeration order is the lexicographic order of value vectors over the
sorted domain points, counterexamples are collected in that order, and no
suite uses randomness, so reports are reproducible apart from wall time.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .core import (
    BoundExceeded,
    CUAdjacency,
    DigitalImage,
    ExplicitAdjacency,
    NormalProductAdjacency,
    Point,
    _neighbor_map,
    _neighbor_sets,
    adjacent,
    connected_components,
    cu_adjacent,
    is_connected,
    subimage,
)
from .maps import (
    DigitalFunction,
    connectivity_preserving_oracle,
    continuity_oracle,
    compose,
    inverse_multifunction,
    is_connectivity_preserving,
    is_continuous,
    is_injective,
    is_isomorphism,
    is_shy,
    shyness_oracle,
)
from .constructions import (
    RootedTree,
    interval,
    product_map,
    simple_closed_curve,
    three_branch_tree,
    wedge_image,
    wedge_map,
)

DEFAULT_ENUMERATION_BOUND = 10**7

_FILTERS = ("all", "continuous", "continuous_surjections", "shy")


@dataclass(frozen=True)
class EnumerationSpec:
    """What to enumerate: all maps between two images, or only those
    passing a filter.  Without a ``limit`` the raw candidate count
    |codomain| ** |domain| must stay within ``bound``."""

    domain: DigitalImage
    codomain: DigitalImage
    filter: str = "all"
    limit: int | None = None
    bound: int = DEFAULT_ENUMERATION_BOUND

    def __post_init__(self):
        if self.filter not in _FILTERS:
            raise ValueError(
                f"filter must be one of {_FILTERS}, got {self.filter!r}"
            )
        if self.limit is not None and self.limit < 0:
            raise ValueError("limit must be nonnegative")


def enumerate_maps(spec: EnumerationSpec) -> Iterator[DigitalFunction]:
    """Stream the maps selected by the spec in lexicographic order.

    The continuity filters walk a DFS over partial assignments and prune
    as soon as an adjacent pair is sent to distinct non-adjacent values,
    which keeps the stream identical to brute-force filtering while
    visiting far fewer candidates.  Surjection filters additionally prune
    branches that can no longer attain every codomain value.
    """
    order = sorted(spec.domain.points)
    values = sorted(spec.codomain.points)
    total = len(values) ** len(order)
    if spec.limit is None and total > spec.bound:
        raise BoundExceeded(
            f"{len(values)}^{len(order)} = {total} candidate maps "
            f"exceeds bound {spec.bound}"
        )
    if spec.filter == "all":
        gen = _stream_all(spec.domain, spec.codomain, order, values)
    else:
        gen = _stream_pruned(spec, order, values)
    if spec.limit is not None:
        return itertools.islice(gen, spec.limit)
    return gen


def _stream_all(dom, cod, order, values):
    for assignment in itertools.product(values, repeat=len(order)):
        yield DigitalFunction(dom, cod, dict(zip(order, assignment)))


def _stream_pruned(spec, order, values):
    dom, cod = spec.domain, spec.codomain
    n, m = len(order), len(values)
    dom_nb = _neighbor_sets(dom)
    earlier = [
        tuple(j for j in range(k) if order[j] in dom_nb[order[k]])
        for k in range(n)
    ]
    cod_nb = _neighbor_sets(cod)
    need_surj = spec.filter in ("continuous_surjections", "shy")
    check_shy = spec.filter == "shy"
    assigned: list[Point] = [None] * n  # type: ignore[list-item]
    used = {v: 0 for v in values}
    distinct = 0

    def rec(k: int):
        nonlocal distinct
        if k == n:
            if need_surj and distinct != m:
                return
            f = DigitalFunction(dom, cod, dict(zip(order, assigned)))
            if check_shy and not is_shy(f):
                return
            yield f
            return
        rem = n - k - 1
        for v in values:
            ok = True
            for j in earlier[k]:
                w = assigned[j]
                if w != v and v not in cod_nb[w]:
                    ok = False
                    break
            if not ok:
                continue
            first_use = used[v] == 0
            if need_surj and m - distinct - first_use > rem:
                continue
            assigned[k] = v
            used[v] += 1
            distinct += first_use
            yield from rec(k + 1)
            used[v] -= 1
            distinct -= first_use

    return rec(0)


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one audit suite.  ``passed`` is true exactly when no
    counterexample was found."""

    theorem_id: str
    instances_checked: int
    passed: bool
    counterexamples: tuple = ()
    wall_time: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "counterexamples", tuple(self.counterexamples))
        if self.passed != (len(self.counterexamples) == 0):
            raise ValueError("passed must mean exactly: no counterexamples")

    def to_json(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "instances_checked": self.instances_checked,
            "passed": self.passed,
            "counterexamples": list(self.counterexamples),
            "wall_time": self.wall_time,
        }


def _report(theorem_id, instances, counterexamples, started) -> VerificationReport:
    return VerificationReport(
        theorem_id=theorem_id,
        instances_checked=instances,
        passed=not counterexamples,
        counterexamples=tuple(counterexamples),
        wall_time=time.perf_counter() - started,
    )


def _merge(theorem_id, reports, started) -> VerificationReport:
    cex = [c for r in reports for c in r.counterexamples]
    return VerificationReport(
        theorem_id=theorem_id,
        instances_checked=sum(r.instances_checked for r in reports),
        passed=not cex,
        counterexamples=tuple(cex),
        wall_time=time.perf_counter() - started,
    )


def _pairs(f: DigitalFunction) -> list:
    return [[list(x), list(y)] for x, y in sorted(f.mapping.items())]


def find_articulation_points(img: DigitalImage) -> frozenset[Point]:
    """All points whose removal disconnects the image.

    The image must be connected.  Uses an iterative lowlink DFS, so large
    path-like images do not hit the recursion limit.
    """
    if not is_connected(img):
        raise ValueError("articulation points are defined for connected images")
    pts = sorted(img.points)
    if len(pts) <= 2:
        return frozenset()
    nbr = _neighbor_map(img)
    root = pts[0]
    disc: dict[Point, int] = {root: 0}
    low: dict[Point, int] = {root: 0}
    parent: dict[Point, Point | None] = {root: None}
    arts: set[Point] = set()
    clock = 1
    root_children = 0
    stack: list[tuple[Point, Iterator[Point]]] = [(root, iter(nbr[root]))]
    while stack:
        x, it = stack[-1]
        advanced = False
        for y in it:
            if y not in disc:
                parent[y] = x
                disc[y] = low[y] = clock
                clock += 1
                stack.append((y, iter(nbr[y])))
                advanced = True
                break
            if y != parent[x] and disc[y] < low[x]:
                low[x] = disc[y]
        if advanced:
            continue
        stack.pop()
        p = parent[x]
        if p is None:
            continue
        if low[x] < low[p]:
            low[p] = low[x]
        if p == root:
            root_children += 1
        elif low[x] >= disc[p]:
            arts.add(p)
    if root_children > 1:
        arts.add(root)
    return frozenset(arts)


def _labels(n: int, edges: Iterable[tuple[int, int]]) -> DigitalImage:
    return DigitalImage(
        frozenset((i,) for i in range(n)),
        ExplicitAdjacency(frozenset(((a,), (b,)) for a, b in edges)),
    )


def default_corpus(max_points: int = 6) -> dict[str, DigitalImage]:
    """A fixed mixed bag of small images: intervals, lattice squares under
    both planar adjacencies, abstract cycles and stars, and a couple of
    disconnected shapes.  Filtered down to ``max_points`` points."""

    def box(w, h, u):
        return DigitalImage(
            frozenset((x, y) for x in range(w) for y in range(h)), CUAdjacency(u)
        )

    corpus = {
        "single-point": interval(0, 0),
        "interval-2": interval(0, 1),
        "gap-pair": DigitalImage(frozenset({(0,), (2,)}), CUAdjacency(1)),
        "interval-3": interval(0, 2),
        "cycle-3": _labels(3, [(0, 1), (1, 2), (0, 2)]),
        "edge-plus-point": _labels(3, [(0, 1)]),
        "interval-4": interval(0, 3),
        "square-thin": box(2, 2, 1),
        "square-full": box(2, 2, 2),
        "cycle-4": simple_closed_curve(4),
        "star-3": _labels(4, [(0, 1), (0, 2), (0, 3)]),
        "interval-5": interval(0, 4),
        "interval-6": interval(0, 5),
        "grid-2x3": box(2, 3, 1),
    }
    return {k: v for k, v in corpus.items() if len(v.points) <= max_points}


def small_image_family(max_points: int = 4) -> dict[str, DigitalImage]:
    """Every unlabelled graph shape with at most ``max_points`` points
    (up to 4), realised as explicit-adjacency images on integer labels."""
    if not 1 <= max_points <= 4:
        raise ValueError("small_image_family covers 1 to 4 points")
    family = {
        "point": _labels(1, []),
        "two-points": _labels(2, []),
        "edge": _labels(2, [(0, 1)]),
        "three-points": _labels(3, []),
        "edge-plus-point": _labels(3, [(0, 1)]),
        "path-3": _labels(3, [(0, 1), (1, 2)]),
        "cycle-3": _labels(3, [(0, 1), (1, 2), (0, 2)]),
        "four-points": _labels(4, []),
        "edge-plus-2": _labels(4, [(0, 1)]),
        "two-edges": _labels(4, [(0, 1), (2, 3)]),
        "path-3-plus-point": _labels(4, [(0, 1), (1, 2)]),
        "cycle-3-plus-point": _labels(4, [(0, 1), (1, 2), (0, 2)]),
        "path-4": _labels(4, [(0, 1), (1, 2), (2, 3)]),
        "star-4": _labels(4, [(0, 1), (0, 2), (0, 3)]),
        "cycle-4": _labels(4, [(0, 1), (1, 2), (2, 3), (0, 3)]),
        "pan-4": _labels(4, [(0, 1), (1, 2), (0, 2), (2, 3)]),
        "diamond": _labels(4, [(0, 1), (1, 2), (0, 2), (0, 3), (2, 3)]),
        "complete-4": _labels(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
    }
    return {k: v for k, v in family.items() if len(v.points) <= max_points}


def verify_cu_product_identity(
    m: int, n: int, radius: int, bound: int = DEFAULT_ENUMERATION_BOUND
) -> VerificationReport:
    """The normal product of c_m and c_n acts as c_{m+n}: checked on every
    ordered point pair of the centred box of the given radius."""
    started = time.perf_counter()
    dim = m + n
    side = 2 * radius + 1
    pair_count = (side**dim) ** 2
    if pair_count > bound:
        raise BoundExceeded(f"{pair_count} point pairs exceeds bound {bound}")
    box = list(itertools.product(range(-radius, radius + 1), repeat=dim))
    product_adj = NormalProductAdjacency(CUAdjacency(m), m, CUAdjacency(n), n)
    instances = 0
    cex = []
    for x in box:
        for y in box:
            instances += 1
            if adjacent(product_adj, x, y) != cu_adjacent(x, y, dim):
                cex.append({"m": m, "n": n, "x": list(x), "y": list(y)})
    return _report("cu_product_identity", instances, cex, started)


def verify_continuity_oracle_agreement(
    corpus: Mapping[str, DigitalImage], bound: int = DEFAULT_ENUMERATION_BOUND
) -> VerificationReport:
    """The pointwise continuity check agrees with the connected-subset
    oracle on every function between every ordered pair of corpus images."""
    started = time.perf_counter()
    total = sum(
        len(cod.points) ** len(dom.points)
        for dom in corpus.values()
        for cod in corpus.values()
    )
    if total > bound:
        raise BoundExceeded(f"{total} functions exceeds bound {bound}")
    instances = 0
    cex = []
    for dname, dom in corpus.items():
        for cname, cod in corpus.items():
            for f in enumerate_maps(EnumerationSpec(dom, cod)):
                instances += 1
                fast = is_continuous(f)
                slow = continuity_oracle(f)
                if fast != slow:
                    cex.append(
                        {
                            "domain": dname,
                            "codomain": cname,
                            "map": _pairs(f),
                            "pointwise": fast,
                            "oracle": slow,
                        }
                    )
    return _report("continuity_oracle_agreement", instances, cex, started)


def verify_shyness_oracle_agreement(
    corpus: Mapping[str, DigitalImage], bound: int = DEFAULT_ENUMERATION_BOUND
) -> VerificationReport:
    """The preimage-based shyness check agrees with the connected-subset
    oracle on every continuous surjection between corpus images."""
    started = time.perf_counter()
    instances = 0
    cex = []
    for dname, dom in corpus.items():
        for cname, cod in corpus.items():
            spec = EnumerationSpec(dom, cod, "continuous_surjections", bound=bound)
            for f in enumerate_maps(spec):
                instances += 1
                fast = is_shy(f)
                slow = shyness_oracle(f)
                if fast != slow:
                    cex.append(
                        {
                            "domain": dname,
                            "codomain": cname,
                            "map": _pairs(f),
                            "preimage_check": fast,
                            "oracle": slow,
                        }
                    )
    return _report("shyness_oracle_agreement", instances, cex, started)


def verify_equivalences(
    domain: DigitalImage,
    codomain: DigitalImage,
    bound: int = DEFAULT_ENUMERATION_BOUND,
) -> VerificationReport:
    """Four characterisations of shyness agree on every continuous
    surjection: preimages of points and adjacent pairs, preimages of all
    connected subsets, the inverse multifunction preserving connectivity,
    and weak continuity of the inverse with connected fibers."""
    started = time.perf_counter()
    instances = 0
    cex = []
    spec = EnumerationSpec(domain, codomain, "continuous_surjections", bound=bound)
    for f in enumerate_maps(spec):
        instances += 1
        inv = inverse_multifunction(f)
        conditions = {
            "point_and_pair_preimages": is_shy(f),
            "connected_preimages": shyness_oracle(f),
            "inverse_preserves_connectivity": connectivity_preserving_oracle(inv),
            "inverse_weakly_continuous_connected_fibers": is_connectivity_preserving(inv),
        }
        if len(set(conditions.values())) != 1:
            cex.append({"map": _pairs(f), "conditions": conditions})
    return _report("shyness_equivalences", instances, cex, started)


def verify_equivalences_over_corpus(
    corpus: Mapping[str, DigitalImage], bound: int = DEFAULT_ENUMERATION_BOUND
) -> VerificationReport:
    started = time.perf_counter()
    reports = []
    for dname, dom in corpus.items():
        for cname, cod in corpus.items():
            r = verify_equivalences(dom, cod, bound)
            if r.counterexamples:
                r = VerificationReport(
                    r.theorem_id,
                    r.instances_checked,
                    False,
                    tuple(
                        dict(c, domain=dname, codomain=cname)
                        for c in r.counterexamples
                    ),
                    r.wall_time,
                )
            reports.append(r)
    return _merge("shyness_equivalences", reports, started)


def verify_isomorphism_laws(
    corpus: Mapping[str, DigitalImage], bound: int = DEFAULT_ENUMERATION_BOUND
) -> VerificationReport:
    """Isomorphisms are shy, and injective shy maps are isomorphisms,
    across every continuous surjection between corpus images."""
    started = time.perf_counter()
    instances = 0
    cex = []
    for dname, dom in corpus.items():
        for cname, cod in corpus.items():
            spec = EnumerationSpec(dom, cod, "continuous_surjections", bound=bound)
            for f in enumerate_maps(spec):
                instances += 1
                iso = is_isomorphism(f)
                shy = is_shy(f)
                if iso and not shy:
                    cex.append(
                        {
                            "law": "isomorphism_implies_shy",
                            "domain": dname,
                            "codomain": cname,
                            "map": _pairs(f),
                        }
                    )
                if shy and is_injective(f) and not iso:
                    cex.append(
                        {
                            "law": "injective_shy_implies_isomorphism",
                            "domain": dname,
                            "codomain": cname,
                            "map": _pairs(f),
                        }
                    )
    return _report("isomorphism_shyness_laws", instances, cex, started)


def verify_composition_closure(
    corpus: Mapping[str, DigitalImage], bound: int = DEFAULT_ENUMERATION_BOUND
) -> VerificationReport:
    """The composite of two shy maps is shy, for every composable pair of
    shy maps between corpus images."""
    started = time.perf_counter()
    names = list(corpus)
    shy_maps = {
        (a, b): tuple(
            enumerate_maps(EnumerationSpec(corpus[a], corpus[b], "shy", bound=bound))
        )
        for a in names
        for b in names
    }
    instances = 0
    cex = []
    for a in names:
        for b in names:
            firsts = shy_maps[a, b]
            if not firsts:
                continue
            for c in names:
                seconds = shy_maps[b, c]
                for f in firsts:
                    for g in seconds:
                        instances += 1
                        if not is_shy(compose(g, f)):
                            cex.append(
                                {
                                    "domain": a,
                                    "middle": b,
                                    "codomain": c,
                                    "f": _pairs(f),
                                    "g": _pairs(g),
                                }
                            )
    return _report("composition_preserves_shyness", instances, cex, started)


def _is_monotone_1d(f: DigitalFunction) -> bool:
    vals = [f.mapping[x][0] for x in sorted(f.domain.points)]
    nondec = all(a <= b for a, b in zip(vals, vals[1:]))
    noninc = all(a >= b for a, b in zip(vals, vals[1:]))
    return nondec or noninc


def verify_monotone_characterization(
    x_len: int, y_len: int, bound: int = DEFAULT_ENUMERATION_BOUND
) -> VerificationReport:
    """Between intervals, a continuous surjection is shy exactly when it
    is monotone.  Checked on every continuous surjection from [0, x_len]
    onto [0, y_len]."""
    started = time.perf_counter()
    dom, cod = interval(0, x_len), interval(0, y_len)
    instances = 0
    cex = []
    spec = EnumerationSpec(dom, cod, "continuous_surjections", bound=bound)
    for f in enumerate_maps(spec):
        instances += 1
        shy = is_shy(f)
        mono = _is_monotone_1d(f)
        if shy != mono:
            cex.append({"map": _pairs(f), "shy": shy, "monotone": mono})
    return _report("monotone_shy_interval_maps", instances, cex, started)


def verify_scc_image_bound(
    m: int, k_max: int, bound: int = DEFAULT_ENUMERATION_BOUND
) -> VerificationReport:
    """A shy map can only squash a simple closed curve onto one point or
    two adjacent points: among continuous surjections from the m-cycle
    onto [0, k], shy maps found with k >= 2 are counterexamples."""
    started = time.perf_counter()
    cycle = simple_closed_curve(m)
    instances = 0
    cex = []
    for k in range(k_max + 1):
        spec = EnumerationSpec(
            cycle, interval(0, k), "continuous_surjections", bound=bound
        )
        for f in enumerate_maps(spec):
            instances += 1
            if k >= 2 and is_shy(f):
                cex.append({"cycle_size": m, "interval_top": k, "map": _pairs(f)})
    return _report("cycle_image_bound", instances, cex, started)


def verify_product_theorem(
    a: DigitalImage,
    b: DigitalImage,
    c: DigitalImage,
    d: DigitalImage,
    bound: int = DEFAULT_ENUMERATION_BOUND,
) -> VerificationReport:
    """f and g are shy exactly when their product map is shy, for every
    pair of continuous surjections f: a -> c and g: b -> d."""
    started = time.perf_counter()
    fs = [
        (f, is_shy(f))
        for f in enumerate_maps(
            EnumerationSpec(a, c, "continuous_surjections", bound=bound)
        )
    ]
    gs = [
        (g, is_shy(g))
        for g in enumerate_maps(
            EnumerationSpec(b, d, "continuous_surjections", bound=bound)
        )
    ]
    instances = 0
    cex = []
    for f, f_shy in fs:
        for g, g_shy in gs:
            instances += 1
            prod_shy = is_shy(product_map(f, g))
            if (f_shy and g_shy) != prod_shy:
                cex.append(
                    {
                        "f": _pairs(f),
                        "g": _pairs(g),
                        "f_shy": f_shy,
                        "g_shy": g_shy,
                        "product_shy": prod_shy,
                    }
                )
    return _report("product_preserves_shyness", instances, cex, started)


def verify_products_over_family(
    family: Mapping[str, DigitalImage], bound: int = DEFAULT_ENUMERATION_BOUND
) -> VerificationReport:
    """The product law over every quadruple of factor images drawn from
    the family."""
    started = time.perf_counter()
    names = list(family)
    reports = []
    for da, dc in itertools.product(names, repeat=2):
        for db, dd in itertools.product(names, repeat=2):
            r = verify_product_theorem(
                family[da], family[db], family[dc], family[dd], bound
            )
            if r.counterexamples:
                r = VerificationReport(
                    r.theorem_id,
                    r.instances_checked,
                    False,
                    tuple(
                        dict(c, factors=[da, db, dc, dd])
                        for c in r.counterexamples
                    ),
                    r.wall_time,
                )
            reports.append(r)
    return _merge("product_preserves_shyness", reports, started)


def _functions_fixing(dom, cod, fixed_pt, fixed_val):
    pts = sorted(dom.points)
    vals = sorted(cod.points)
    pools = [[fixed_val] if p == fixed_pt else vals for p in pts]
    for combo in itertools.product(*pools):
        yield DigitalFunction(dom, cod, dict(zip(pts, combo)))


def verify_wedge_theorem(
    dom, cod, bound: int = DEFAULT_ENUMERATION_BOUND
) -> VerificationReport:
    """f and g are shy exactly when the pasted wedge map is shy, for every
    pair of half maps agreeing at the junction."""
    started = time.perf_counter()
    a = subimage(dom.whole, dom.left)
    b = subimage(dom.whole, dom.right)
    c = subimage(cod.whole, cod.left)
    d = subimage(cod.whole, cod.right)
    count = len(c.points) ** (len(a.points) - 1) * len(d.points) ** (
        len(b.points) - 1
    )
    if count > bound:
        raise BoundExceeded(f"{count} map pairs exceeds bound {bound}")
    fs = [
        (f, is_shy(f))
        for f in _functions_fixing(a, c, dom.junction, cod.junction)
    ]
    gs = [
        (g, is_shy(g))
        for g in _functions_fixing(b, d, dom.junction, cod.junction)
    ]
    instances = 0
    cex = []
    for f, f_shy in fs:
        for g, g_shy in gs:
            instances += 1
            glued_shy = is_shy(wedge_map(f, g, dom, cod))
            if (f_shy and g_shy) != glued_shy:
                cex.append(
                    {
                        "f": _pairs(f),
                        "g": _pairs(g),
                        "f_shy": f_shy,
                        "g_shy": g_shy,
                        "wedge_shy": glued_shy,
                    }
                )
    return _report("wedge_preserves_shyness", instances, cex, started)


def verify_wedges_over_lengths(
    max_len: int = 2, bound: int = DEFAULT_ENUMERATION_BOUND
) -> VerificationReport:
    """The wedge law over every wedge of two intervals with arms up to
    ``max_len`` on each side, in both domain and codomain."""
    started = time.perf_counter()
    reports = []
    lengths = range(0, max_len + 1)
    for la, lb, lc, ld in itertools.product(lengths, repeat=4):
        dom = wedge_image(interval(-la, 0), interval(0, lb), (0,))
        cod = wedge_image(interval(-lc, 0), interval(0, ld), (0,))
        r = verify_wedge_theorem(dom, cod, bound)
        if r.counterexamples:
            r = VerificationReport(
                r.theorem_id,
                r.instances_checked,
                False,
                tuple(dict(c, arms=[la, lb, lc, ld]) for c in r.counterexamples),
                r.wall_time,
            )
        reports.append(r)
    return _merge("wedge_preserves_shyness", reports, started)


def verify_cut_vertex_bound(
    tree: RootedTree, k: int, bound: int = DEFAULT_ENUMERATION_BOUND
) -> VerificationReport:
    """A shy map from a tree onto an interval is non-constant (relative to
    its value at r) on at most two components of the tree minus r, for
    every articulation point r.

    Quantifies over every shy map from the tree onto a connected subset of
    [0, k]: each continuous map into [0, k] has an interval image, so the
    map is checked against the restriction to that image.
    """
    started = time.perf_counter()
    img = tree.image
    n = len(img.points)
    if (k + 1) ** n > bound:
        raise BoundExceeded(
            f"{k + 1}^{n} candidate maps exceeds bound {bound}"
        )
    arts = sorted(find_articulation_points(img))
    comps = {
        r: connected_components(subimage(img, img.points - {r})) for r in arts
    }
    intervals: dict[tuple[int, int], DigitalImage] = {}
    instances = 0
    cex = []
    spec = EnumerationSpec(img, interval(0, k), "continuous", bound=bound)
    for f in enumerate_maps(spec):
        values = [v[0] for v in f.mapping.values()]
        key = (min(values), max(values))
        if key not in intervals:
            intervals[key] = interval(*key)
        onto = DigitalFunction(img, intervals[key], f.mapping)
        if not is_shy(onto):
            continue
        for r in arts:
            instances += 1
            base = onto.mapping[r]
            moved = sum(
                1
                for comp in comps[r]
                if any(onto.mapping[x] != base for x in comp)
            )
            if moved > 2:
                cex.append(
                    {
                        "articulation_point": list(r),
                        "nonconstant_components": moved,
                        "map": _pairs(onto),
                    }
                )
    return _report("cut_vertex_nonconstant_bound", instances, cex, started)


def default_audit_reports(
    bound: int = DEFAULT_ENUMERATION_BOUND,
) -> tuple[VerificationReport, ...]:
    """Run every audit suite at its default desk-scale settings, in a
    fixed order."""
    reports = []
    started = time.perf_counter()
    reports.append(
        _merge(
            "cu_product_identity",
            [
                verify_cu_product_identity(1, 1, 1, bound),
                verify_cu_product_identity(1, 2, 1, bound),
            ],
            started,
        )
    )
    reports.append(verify_continuity_oracle_agreement(default_corpus(4), bound))
    reports.append(verify_shyness_oracle_agreement(default_corpus(6), bound))
    reports.append(verify_equivalences_over_corpus(default_corpus(6), bound))
    reports.append(verify_isomorphism_laws(default_corpus(6), bound))
    reports.append(verify_composition_closure(small_image_family(3), bound))
    started = time.perf_counter()
    reports.append(
        _merge(
            "monotone_shy_interval_maps",
            [
                verify_monotone_characterization(4, 2, bound),
                verify_monotone_characterization(5, 3, bound),
            ],
            started,
        )
    )
    started = time.perf_counter()
    reports.append(
        _merge(
            "cycle_image_bound",
            [
                verify_scc_image_bound(4, 2, bound),
                verify_scc_image_bound(6, 2, bound),
            ],
            started,
        )
    )
    reports.append(verify_products_over_family(small_image_family(3), bound))
    reports.append(verify_wedges_over_lengths(2, bound))
    reports.append(verify_cut_vertex_bound(three_branch_tree(), 2, bound))
    return tuple(reports)
