"""Command line interface and JSON (de)serialisation.

Image files are objects with ``dimension``, ``adjacency`` and ``points``;
map files are objects with a ``pairs`` list.  Exit status: 0 on success,
1 when a checked property is false or an audit found a counterexample,
2 on malformed input or an exceeded enumeration bound.  Diagnostics go to
stderr, reports to stdout or ``--out``.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .core import (
    Adjacency,
    BoundExceeded,
    CUAdjacency,
    DigitalImage,
    ExplicitAdjacency,
    NormalProductAdjacency,
    Point,
    connected_components,
)
from .maps import (
    DigitalFunction,
    classify,
    continuity_failure,
    is_injective,
    shy_failure,
)
from .constructions import product_image, rooted_tree, three_branch_tree, wedge_image
from .verify import (
    DEFAULT_ENUMERATION_BOUND,
    EnumerationSpec,
    VerificationReport,
    default_audit_reports,
    default_corpus,
    enumerate_maps,
    small_image_family,
    verify_composition_closure,
    verify_continuity_oracle_agreement,
    verify_cu_product_identity,
    verify_cut_vertex_bound,
    verify_equivalences_over_corpus,
    verify_isomorphism_laws,
    verify_monotone_characterization,
    verify_products_over_family,
    verify_scc_image_bound,
    verify_shyness_oracle_agreement,
    verify_wedges_over_lengths,
)

_EXPECT_PROPS = ("continuous", "surjective", "injective", "shy", "isomorphism")
_SUITES = (
    "all",
    "cu-product",
    "continuity-oracle",
    "shyness-oracle",
    "equivalences",
    "isomorphism",
    "composition",
    "monotone",
    "scc",
    "products",
    "wedge",
    "cut-vertex",
)


class InputError(ValueError):
    """Malformed input file, flag or schema violation; maps to exit 2."""


# ---------------------------------------------------------------------------
# serialisation


def _load_object(text: str, what: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{what}: invalid JSON at line {exc.lineno} "
                         f"column {exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise InputError(f"{what}: top level must be a JSON object")
    return doc


def _expect_keys(doc: dict, keys: set[str], where: str) -> None:
    missing = keys - doc.keys()
    if missing:
        raise InputError(f"{where}: missing field {sorted(missing)[0]!r}")
    extra = doc.keys() - keys
    if extra:
        raise InputError(f"{where}: unknown field {sorted(extra)[0]!r}")


def _point_from_json(node, dim, where: str) -> Point:
    if (
        not isinstance(node, list)
        or not node
        or not all(isinstance(c, int) and not isinstance(c, bool) for c in node)
    ):
        raise InputError(f"{where}: expected a point as a list of integers, "
                         f"got {node!r}")
    if dim is not None and len(node) != dim:
        raise InputError(f"{where}: point has {len(node)} coordinates, "
                         f"expected {dim}")
    return tuple(node)


def _parse_adjacency(node, dim: int, path: str) -> Adjacency:
    if not isinstance(node, dict):
        raise InputError(f"{path}: expected an object")
    kind = node.get("kind")
    if kind == "cu":
        _expect_keys(node, {"kind", "u"}, path)
        u = node["u"]
        if not isinstance(u, int) or isinstance(u, bool) or not 1 <= u <= dim:
            raise InputError(f"{path}.u: expected an integer in [1, {dim}], "
                             f"got {u!r}")
        return CUAdjacency(u)
    if kind == "explicit":
        _expect_keys(node, {"kind", "edges"}, path)
        raw = node["edges"]
        if not isinstance(raw, list):
            raise InputError(f"{path}.edges: expected a list")
        edges = []
        for i, row in enumerate(raw):
            if not isinstance(row, list) or len(row) != 2:
                raise InputError(f"{path}.edges[{i}]: expected a pair of points")
            a = _point_from_json(row[0], dim, f"{path}.edges[{i}][0]")
            b = _point_from_json(row[1], dim, f"{path}.edges[{i}][1]")
            if a == b:
                raise InputError(f"{path}.edges[{i}]: self-loop at {row[0]}")
            edges.append((a, b))
        return ExplicitAdjacency(frozenset(edges))
    if kind == "normal_product":
        _expect_keys(node, {"kind", "left", "left_dim", "right", "right_dim"}, path)
        ld, rd = node["left_dim"], node["right_dim"]
        for name, val in (("left_dim", ld), ("right_dim", rd)):
            if not isinstance(val, int) or isinstance(val, bool) or val < 1:
                raise InputError(f"{path}.{name}: expected a positive integer, "
                                 f"got {val!r}")
        if ld + rd != dim:
            raise InputError(f"{path}: left_dim + right_dim = {ld + rd}, "
                             f"expected {dim}")
        return NormalProductAdjacency(
            _parse_adjacency(node["left"], ld, f"{path}.left"),
            ld,
            _parse_adjacency(node["right"], rd, f"{path}.right"),
            rd,
        )
    raise InputError(f"{path}.kind: expected one of 'cu', 'explicit', "
                     f"'normal_product', got {kind!r}")


def parse_image(text: str) -> DigitalImage:
    """Parse an image document, reporting schema violations with field
    context."""
    doc = _load_object(text, "image")
    _expect_keys(doc, {"dimension", "adjacency", "points"}, "image")
    dim = doc["dimension"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise InputError(f"dimension: expected a positive integer, got {dim!r}")
    raw = doc["points"]
    if not isinstance(raw, list):
        raise InputError("points: expected a list")
    seen: dict[Point, int] = {}
    for i, row in enumerate(raw):
        p = _point_from_json(row, dim, f"points[{i}]")
        if p in seen:
            raise InputError(f"points[{i}]: duplicate of points[{seen[p]}]")
        seen[p] = i
    adjacency = _parse_adjacency(doc["adjacency"], dim, "adjacency")
    try:
        return DigitalImage(frozenset(seen), adjacency, dim)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _adjacency_json(adj: Adjacency) -> dict:
    if isinstance(adj, CUAdjacency):
        return {"kind": "cu", "u": adj.u}
    if isinstance(adj, ExplicitAdjacency):
        return {
            "kind": "explicit",
            "edges": [[list(a), list(b)] for a, b in sorted(adj.edges)],
        }
    return {
        "kind": "normal_product",
        "left": _adjacency_json(adj.left),
        "left_dim": adj.left_dim,
        "right": _adjacency_json(adj.right),
        "right_dim": adj.right_dim,
    }


def serialize_image(img: DigitalImage) -> dict:
    return {
        "dimension": img.dimension,
        "adjacency": _adjacency_json(img.adjacency),
        "points": [list(p) for p in sorted(img.points)],
    }


def parse_map(text: str, domain: DigitalImage, codomain: DigitalImage) -> DigitalFunction:
    """Parse a map document against already-parsed domain and codomain."""
    doc = _load_object(text, "map")
    _expect_keys(doc, {"pairs"}, "map")
    raw = doc["pairs"]
    if not isinstance(raw, list):
        raise InputError("pairs: expected a list")
    mapping: dict[Point, Point] = {}
    for i, row in enumerate(raw):
        if not isinstance(row, list) or len(row) != 2:
            raise InputError(f"pairs[{i}]: expected [point, point]")
        p = _point_from_json(row[0], domain.dimension, f"pairs[{i}][0]")
        q = _point_from_json(row[1], codomain.dimension, f"pairs[{i}][1]")
        if p in mapping:
            raise InputError(f"pairs[{i}]: duplicate assignment for {row[0]}")
        if p not in domain.points:
            raise InputError(f"pairs[{i}]: {row[0]} is not a domain point")
        if q not in codomain.points:
            raise InputError(f"pairs[{i}]: {row[1]} is not a codomain point")
        mapping[p] = q
    unassigned = domain.points - mapping.keys()
    if unassigned:
        raise InputError(f"map leaves domain point {list(min(unassigned))} "
                         f"unassigned")
    try:
        return DigitalFunction(domain, codomain, mapping)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def serialize_map(f: DigitalFunction) -> dict:
    return {"pairs": [[list(x), list(y)] for x, y in sorted(f.mapping.items())]}


# ---------------------------------------------------------------------------
# commands


@dataclass
class RunConfig:
    """Normalised invocation: one command, its file inputs and options."""

    command: str
    format: str = "text"
    out: str | None = None
    bound: int | None = None
    expect: str | None = None
    paths: dict = field(default_factory=dict)
    params: dict = field(default_factory=dict)


def _read(path: str) -> str:
    return Path(path).read_text()


def _fmt_point(p: Point) -> str:
    return json.dumps(list(p))


def _load_function(cfg: RunConfig) -> DigitalFunction:
    domain = parse_image(_read(cfg.paths["domain"]))
    codomain = parse_image(_read(cfg.paths["codomain"]))
    return parse_map(_read(cfg.paths["map"]), domain, codomain)


def _expect_result(f: DigitalFunction, prop: str):
    if prop == "continuous":
        pair = continuity_failure(f)
        if pair is None:
            return True, None
        return False, {"reason": "adjacent_pair_maps_apart",
                       "points": [list(pair[0]), list(pair[1])]}
    if prop == "surjective":
        missing = sorted(f.codomain.points - frozenset(f.mapping.values()))
        if not missing:
            return True, None
        return False, {"reason": "value_not_attained",
                       "points": [list(missing[0])]}
    if prop == "injective":
        seen: dict[Point, Point] = {}
        for x in sorted(f.mapping):
            y = f.mapping[x]
            if y in seen:
                return False, {"reason": "values_collide",
                               "points": [list(seen[y]), list(x)]}
            seen[y] = x
        return True, None
    if prop == "shy":
        failure = shy_failure(f)
        if failure is None:
            return True, None
        return False, {"reason": failure.reason,
                       "points": [list(p) for p in failure.witness]}
    for part, reason in (("injective", "not_injective"),
                         ("surjective", "not_surjective"),
                         ("continuous", "not_continuous")):
        ok, witness = _expect_result(f, part)
        if not ok:
            return False, {"reason": reason, "points": witness["points"]}
    inverse = DigitalFunction(f.codomain, f.domain,
                              {v: k for k, v in f.mapping.items()})
    pair = continuity_failure(inverse)
    if pair is not None:
        return False, {"reason": "inverse_not_continuous",
                       "points": [list(pair[0]), list(pair[1])]}
    return True, None


def _cmd_check(cfg: RunConfig):
    f = _load_function(cfg)
    flags = classify(f)
    payload = {
        "command": "check",
        "classification": {
            "continuous": flags.continuous,
            "surjective": flags.surjective,
            "injective": flags.injective,
            "shy": flags.shy,
            "isomorphism": flags.isomorphism,
        },
    }
    lines = [
        f"continuous:  {'yes' if flags.continuous else 'no'}",
        f"surjective:  {'yes' if flags.surjective else 'no'}",
        f"injective:   {'yes' if flags.injective else 'no'}",
        f"shy:         {'yes' if flags.shy else 'no'}",
        f"isomorphism: {'yes' if flags.isomorphism else 'no'}",
    ]
    code = 0
    if cfg.expect:
        satisfied, witness = _expect_result(f, cfg.expect)
        payload["expect"] = {
            "property": cfg.expect,
            "satisfied": satisfied,
            "witness": witness,
        }
        if satisfied:
            lines.append(f"expect {cfg.expect}: ok")
        else:
            pts = " ".join(json.dumps(p) for p in witness["points"])
            lines.append(f"expect {cfg.expect}: FAILED "
                         f"({witness['reason']} at {pts})")
            code = 1
    return code, payload, "\n".join(lines)


def _cmd_components(cfg: RunConfig):
    img = parse_image(_read(cfg.paths["image"]))
    comps = connected_components(img)
    payload = {
        "command": "components",
        "count": len(comps),
        "components": [[list(p) for p in sorted(c)] for c in comps],
    }
    lines = [f"{len(comps)} component{'s' if len(comps) != 1 else ''}"]
    for i, comp in enumerate(comps):
        lines.append(
            f"component {i}: " + " ".join(_fmt_point(p) for p in sorted(comp))
        )
    return 0, payload, "\n".join(lines)


def _cmd_product(cfg: RunConfig):
    left = parse_image(_read(cfg.paths["left"]))
    right = parse_image(_read(cfg.paths["right"]))
    doc = serialize_image(product_image(left, right))
    return 0, doc, json.dumps(doc, indent=2, sort_keys=True)


def _parse_point_flag(value: str, name: str) -> Point:
    try:
        node = json.loads(value)
    except json.JSONDecodeError as exc:
        raise InputError(f"{name}: invalid JSON: {exc.msg}") from exc
    if isinstance(node, int) and not isinstance(node, bool):
        return (node,)
    return _point_from_json(node, None, name)


def _cmd_wedge(cfg: RunConfig):
    left = parse_image(_read(cfg.paths["left"]))
    right = parse_image(_read(cfg.paths["right"]))
    junction = _parse_point_flag(cfg.params["junction"], "--junction")
    try:
        wedge = wedge_image(left, right, junction)
    except ValueError as exc:
        payload = {"command": "wedge", "valid": False, "reason": str(exc)}
        return 1, payload, f"invalid wedge: {exc}"
    payload = {
        "command": "wedge",
        "valid": True,
        "whole": serialize_image(wedge.whole),
        "left": [list(p) for p in sorted(wedge.left)],
        "right": [list(p) for p in sorted(wedge.right)],
        "junction": list(wedge.junction),
    }
    text = (
        f"valid wedge at {_fmt_point(wedge.junction)}: "
        f"left {len(wedge.left)} points, right {len(wedge.right)} points, "
        f"whole {len(wedge.whole.points)} points"
    )
    return 0, payload, text


def _cmd_enumerate(cfg: RunConfig):
    domain = parse_image(_read(cfg.paths["domain"]))
    codomain = parse_image(_read(cfg.paths["codomain"]))
    spec = EnumerationSpec(
        domain,
        codomain,
        cfg.params["filter"],
        limit=cfg.params["limit"],
        bound=cfg.bound or DEFAULT_ENUMERATION_BOUND,
    )
    maps = list(enumerate_maps(spec))
    payload = {
        "command": "enumerate",
        "filter": spec.filter,
        "count": len(maps),
        "maps": [serialize_map(f)["pairs"] for f in maps],
    }
    lines = [f"count: {len(maps)}"]
    for f in maps:
        lines.append(
            " ".join(
                f"{_fmt_point(x)}->{_fmt_point(y)}"
                for x, y in sorted(f.mapping.items())
            )
        )
    return 0, payload, "\n".join(lines)


def _build_cut_vertex_tree(cfg: RunConfig):
    if not cfg.paths.get("tree"):
        return three_branch_tree()
    img = parse_image(_read(cfg.paths["tree"]))
    if not isinstance(img.adjacency, ExplicitAdjacency):
        raise InputError("--tree: tree files must use explicit adjacency")
    root_flag = cfg.params.get("root")
    if root_flag is None:
        raise InputError("--tree requires --root")
    root = _parse_point_flag(root_flag, "--root")
    try:
        tree = rooted_tree(sorted(img.adjacency.edges), root)
    except ValueError as exc:
        raise InputError(f"--tree: {exc}") from exc
    if tree.image.points != img.points:
        raise InputError("--tree: file contains points not joined by any edge")
    return tree


def _verify_reports(cfg: RunConfig) -> list[VerificationReport]:
    bound = cfg.bound or DEFAULT_ENUMERATION_BOUND
    p = cfg.params
    suite = p["suite"]

    def max_points(default):
        return p["max_points"] if p.get("max_points") is not None else default

    if suite == "all":
        return list(default_audit_reports(bound))
    if suite == "cu-product":
        return [verify_cu_product_identity(p["m"], p["n"], p["radius"], bound)]
    if suite == "continuity-oracle":
        return [
            verify_continuity_oracle_agreement(default_corpus(max_points(4)), bound)
        ]
    if suite == "shyness-oracle":
        return [
            verify_shyness_oracle_agreement(default_corpus(max_points(6)), bound)
        ]
    if suite == "equivalences":
        return [
            verify_equivalences_over_corpus(default_corpus(max_points(6)), bound)
        ]
    if suite == "isomorphism":
        return [verify_isomorphism_laws(default_corpus(max_points(6)), bound)]
    if suite == "composition":
        return [
            verify_composition_closure(small_image_family(max_points(3)), bound)
        ]
    if suite == "monotone":
        return [verify_monotone_characterization(p["xlen"], p["ylen"], bound)]
    if suite == "scc":
        return [verify_scc_image_bound(p["size"], p["kmax"], bound)]
    if suite == "products":
        return [
            verify_products_over_family(small_image_family(max_points(3)), bound)
        ]
    if suite == "wedge":
        return [verify_wedges_over_lengths(p["max_arm"], bound)]
    if suite == "cut-vertex":
        return [verify_cut_vertex_bound(_build_cut_vertex_tree(cfg), p["kmax"], bound)]
    raise InputError(f"unknown verify suite {suite!r}")


def _cmd_verify(cfg: RunConfig):
    reports = _verify_reports(cfg)
    passed = all(r.passed for r in reports)
    payload = {
        "command": "verify",
        "suite": cfg.params["suite"],
        "passed": passed,
        "reports": [r.to_json() for r in reports],
    }
    lines = []
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        line = (f"{status} {r.theorem_id}  instances={r.instances_checked}  "
                f"time={r.wall_time:.2f}s")
        if not r.passed:
            line += f"  counterexamples={len(r.counterexamples)}"
        lines.append(line)
        for c in r.counterexamples[:5]:
            lines.append(f"  counterexample: {json.dumps(c, sort_keys=True)}")
    lines.append(f"overall: {'PASS' if passed else 'FAIL'} "
                 f"({len(reports)} suite{'s' if len(reports) != 1 else ''})")
    return (0 if passed else 1), payload, "\n".join(lines)


_COMMANDS = {
    "check": _cmd_check,
    "components": _cmd_components,
    "product": _cmd_product,
    "wedge": _cmd_wedge,
    "enumerate": _cmd_enumerate,
    "verify": _cmd_verify,
}


def run(config: RunConfig) -> int:
    """Execute one command, emit its report, and return the exit status."""
    try:
        code, payload, text = _COMMANDS[config.command](config)
        rendered = (
            json.dumps(payload, indent=2, sort_keys=True)
            if config.format == "json"
            else text
        )
        if config.out:
            Path(config.out).write_text(rendered + "\n")
        else:
            print(rendered)
        return code
    except (InputError, BoundExceeded, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shymaps",
        description="Decide continuity and shyness of maps between finite "
                    "digital images, build products and wedges, and run "
                    "exhaustive theorem audits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--out", default=None, help="write the report to a file")

    check = sub.add_parser("check", help="classify a map between two images")
    check.add_argument("--domain", required=True)
    check.add_argument("--codomain", required=True)
    check.add_argument("--map", required=True)
    check.add_argument("--expect", choices=_EXPECT_PROPS, default=None)
    common(check)

    comp = sub.add_parser("components", help="connected components of an image")
    comp.add_argument("--image", required=True)
    common(comp)

    prod = sub.add_parser("product", help="product image of two images")
    prod.add_argument("--left", required=True)
    prod.add_argument("--right", required=True)
    common(prod)

    wedge = sub.add_parser("wedge", help="validate the wedge of two images")
    wedge.add_argument("--left", required=True)
    wedge.add_argument("--right", required=True)
    wedge.add_argument("--junction", required=True,
                       help="the shared point, e.g. '[0]'")
    common(wedge)

    enum = sub.add_parser("enumerate", help="enumerate maps between two images")
    enum.add_argument("--domain", required=True)
    enum.add_argument("--codomain", required=True)
    enum.add_argument("--filter", choices=("all", "continuous",
                                           "continuous_surjections", "shy"),
                      default="all")
    enum.add_argument("--limit", type=int, default=None)
    enum.add_argument("--bound", type=int, default=None)
    common(enum)

    verify = sub.add_parser("verify", help="run audit suites")
    verify.add_argument("suite", choices=_SUITES)
    verify.add_argument("--xlen", type=int, default=4)
    verify.add_argument("--ylen", type=int, default=2)
    verify.add_argument("--size", type=int, default=4,
                        help="cycle size for the scc suite")
    verify.add_argument("--kmax", type=int, default=2)
    verify.add_argument("--m", type=int, default=1)
    verify.add_argument("--n", type=int, default=1)
    verify.add_argument("--radius", type=int, default=1)
    verify.add_argument("--max-points", type=int, default=None,
                        dest="max_points")
    verify.add_argument("--max-arm", type=int, default=2, dest="max_arm")
    verify.add_argument("--tree", default=None,
                        help="image file with explicit adjacency")
    verify.add_argument("--root", default=None,
                        help="root point of --tree, e.g. '[0]'")
    verify.add_argument("--bound", type=int, default=None)
    common(verify)

    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    paths = {
        k: getattr(args, k)
        for k in ("domain", "codomain", "map", "image", "left", "right", "tree")
        if getattr(args, k, None) is not None
    }
    params = {
        k: getattr(args, k)
        for k in ("suite", "filter", "limit", "junction", "xlen", "ylen",
                  "size", "kmax", "m", "n", "radius", "max_points", "max_arm",
                  "root")
        if hasattr(args, k)
    }
    return RunConfig(
        command=args.command,
        format=getattr(args, "format", "text"),
        out=getattr(args, "out", None),
        bound=getattr(args, "bound", None),
        expect=getattr(args, "expect", None),
        paths=paths,
        params=params,
    )


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    return run(_config_from_args(args))


if __name__ == "__main__":
    sys.exit(main())
