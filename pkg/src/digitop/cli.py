"""Command-line front door.

Exit codes: 0 = property holds / build succeeded, 1 = property fails
(witness printed), 2 = usage or input error, 3 = bounded search
inconclusive.  Identical inputs produce byte-identical reports.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import __version__
from .adjacency import AdjacencyPair, Region, complement_components, components, neighbors
from .fileio import InputFormatError, format_points, load_points, parse_adjacency_arg
from .jordan import GeneratorSpec, generate, jordan_check
from .lattice import Cube, cube_vertices
from .manifold import (
    DoublePointWitness,
    NotCertifiedError,
    check_manifold,
    is_good_pair,
    is_simple_point,
    local_components,
)
from .pseudomanifold import is_pseudomanifold
from .separation import SeparationWitness, has_separation_property, replay_separation_witness
from .simplicial import (
    build_complex,
    complex_to_json,
    complex_to_off,
    euler_characteristic,
    reduce_complex,
)


def _add_common(p: argparse.ArgumentParser, points: bool = True) -> None:
    if points:
        p.add_argument("--points", required=True, help="point-set file")
    p.add_argument("--alpha", default="full", help="foreground adjacency: axis|full|custom:PATH")
    p.add_argument("--beta", default="axis", help="background adjacency: axis|full|custom:PATH")
    p.add_argument("--n", type=int, default=None, help="dimension (inferred from points if given)")
    p.add_argument("--margin", type=int, default=2, help="analysis margin around the set")
    p.add_argument("--N", type=int, default=2, dest="bound", help="path-rewrite bound")
    p.add_argument("--budget", type=int, default=100_000, help="search budget")
    p.add_argument("--format", choices=("text", "json", "off"), default="text")
    p.add_argument("-o", "--output", default=None, help="write the report here instead of stdout")
    p.add_argument("--replay", default=None, help="re-verify the witnesses of a saved JSON report")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="digitop",
        description="digital-topology toolkit: manifolds, good pairs, complexes, separation",
    )
    parser.add_argument("--version", action="version", version=f"digitop {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, needs_points in (
        ("verify-manifold", True),
        ("check-separation", True),
        ("build", True),
        ("check-pseudomanifold", True),
        ("euler", True),
        ("jordan", True),
        ("good-pair", False),
        ("simple-points", True),
    ):
        p = sub.add_parser(name)
        _add_common(p, points=needs_points)

    g = sub.add_parser("generate")
    g.add_argument("--kind", required=True, choices=("rect-boundary", "box-surface", "sphere-shell"))
    g.add_argument("--params", required=True, type=int, nargs="+", help="generator parameters")
    g.add_argument("--format", choices=("text", "json"), default="text")
    g.add_argument("-o", "--output", default=None)
    return parser


def _load_context(args: argparse.Namespace):
    points = None
    n = args.n
    if getattr(args, "points", None):
        points, dim = load_points(args.points)
        if n is not None and n != dim:
            raise InputFormatError(f"--n {n} contradicts point dimension {dim}")
        n = dim
    if n is None:
        raise InputFormatError("--n is required when no point set is given")
    if n < 2:
        raise InputFormatError("--n must be at least 2")
    if args.margin < 2:
        raise InputFormatError("--margin must be at least 2")
    if args.bound < 1:
        raise InputFormatError("--N must be at least 1")
    if args.budget < 0:
        raise InputFormatError("--budget must be nonnegative")
    pair = AdjacencyPair(parse_adjacency_arg(args.alpha, n), parse_adjacency_arg(args.beta, n))
    return points, n, pair


def _config(args: argparse.Namespace, n: int) -> dict:
    return {
        "command": args.command,
        "points": getattr(args, "points", None),
        "alpha": getattr(args, "alpha", None),
        "beta": getattr(args, "beta", None),
        "n": n,
        "margin": getattr(args, "margin", None),
        "N": getattr(args, "bound", None),
        "budget": getattr(args, "budget", None),
        "format": args.format,
        "output": args.output,
    }


def _emit(args: argparse.Namespace, text: str) -> None:
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _report(args: argparse.Namespace, config: dict, result: dict, witnesses: list[dict], lines: list[str]) -> None:
    if args.format == "json":
        envelope = {
            "tool": "digitop",
            "version": __version__,
            "config": config,
            "result": result,
            "witnesses": witnesses,
        }
        _emit(args, json.dumps(envelope, sort_keys=True, indent=2) + "\n")
    else:
        _emit(args, "\n".join(lines) + "\n")


def _replay_witness(w: dict, mset, pair: AdjacencyPair, margin: int, args) -> bool:
    kind = w.get("kind")
    if kind == "separation":
        witness = SeparationWitness(
            Cube(tuple(w["cube"]["base"]), tuple(w["cube"]["axes"])),
            Cube(tuple(w["cstar"]["base"]), tuple(w["cstar"]["axes"])),
            tuple(w["tau1"]),
            tuple(w["tau2"]),
            tuple(w["point"]),
        )
        return replay_separation_witness(witness, mset, pair)
    if kind == "double-point":
        witness = DoublePointWitness(
            tuple(w["z"]), tuple(w["p"]), tuple(w["q"]), tuple(w["r"]), tuple(w["tau"])
        )
        return witness.verify(pair)
    if kind == "alpha-disconnected":
        return components(pair.alpha, mset).count > 1
    if kind == "cube-intersection-disconnected":
        cube = Cube(tuple(w["cube"]["base"]), tuple(w["cube"]["axes"]))
        cut = [v for v in cube_vertices(cube) if v in mset]
        return bool(cut) and components(pair.alpha, cut).count > 1
    if kind == "local-component-count":
        return len(local_components(tuple(w["point"]), mset, pair)) != 2
    if kind == "one-sided-neighbor":
        p, q = tuple(w["p"]), tuple(w["q"])
        sides = local_components(p, mset, pair)
        return any(not any(pair.beta.adjacent(q, x) for x in side) for side in sides)
    if kind == "simple-point":
        return is_simple_point(tuple(w["point"]), mset, pair)
    if kind == "not-common-boundary":
        region = Region.around(mset, margin)
        labeling = complement_components(pair.beta, mset, region)
        ids = set(labeling.components())
        p = tuple(w["point"])
        reached = {labeling.labels[q] for q in neighbors(pair.beta, p) if q in labeling.labels}
        return reached != ids
    if kind == "component-count":
        region = Region.around(mset, margin)
        return complement_components(pair.beta, mset, region).count != 2
    if kind in ("homogeneity", "nondegeneracy", "strong-connectivity"):
        reduced = reduce_complex(build_complex(mset, pair), mset, pair)
        report = is_pseudomanifold(reduced, pair.n - 1)
        return any(x.get("kind") == kind for x in report.witnesses())
    raise InputFormatError(f"cannot replay witness kind {kind!r}")


def _maybe_replay(args: argparse.Namespace, mset, pair: AdjacencyPair) -> int | None:
    """Returns an exit code when replay handled the invocation, else None."""
    if not getattr(args, "replay", None):
        return None
    try:
        saved = json.loads(Path(args.replay).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise InputFormatError(f"{args.replay}: {exc}") from exc
    witnesses = saved.get("witnesses", [])
    if not witnesses:
        return None  # passing report: fall through to a fresh run
    for w in witnesses:
        ok = _replay_witness(w, mset, pair, args.margin, args)
        label = w.get("kind", "?")
        print(f"replay {label}: {'violation reproduced' if ok else 'NOT reproduced'}")
        if not ok:
            return 2
    return 1


def _cmd_verify_manifold(args: argparse.Namespace) -> int:
    mset, n, pair = _load_context(args)
    code = _maybe_replay(args, mset, pair)
    if code is not None:
        return code
    report = check_manifold(mset, pair)
    lines = [f"certified: {report.certified}"]
    for name, verdict in (
        ("alpha-connected", report.alpha_connected),
        ("cube-connectivity", report.cube_connectivity),
        ("local-two-components", report.local_two_components),
        ("two-sidedness", report.two_sidedness),
    ):
        lines.append(f"{name}: {verdict.holds}")
        if not verdict.holds and verdict.witness:
            lines.append(f"  witness: {json.dumps(verdict.witness, sort_keys=True)}")
    lines.append(f"separation: {report.separation.holds}")
    if not report.separation.holds and report.separation.witness:
        lines.append(f"  witness: {json.dumps(report.separation.witness.to_json(), sort_keys=True)}")
    _report(args, _config(args, n), report.to_json(), report.witnesses(), lines)
    return 0 if report.certified else 1


def _cmd_check_separation(args: argparse.Namespace) -> int:
    mset, n, pair = _load_context(args)
    code = _maybe_replay(args, mset, pair)
    if code is not None:
        return code
    verdict = has_separation_property(mset, pair)
    witnesses = [verdict.witness.to_json()] if verdict.witness else []
    lines = [f"separation: {verdict.holds}"]
    if witnesses:
        lines.append(f"  witness: {json.dumps(witnesses[0], sort_keys=True)}")
    _report(args, _config(args, n), verdict.to_json(), witnesses, lines)
    return 0 if verdict.holds else 1


def _cmd_build(args: argparse.Namespace) -> int:
    mset, n, pair = _load_context(args)
    full = build_complex(mset, pair)
    reduced = reduce_complex(full, mset, pair)
    if args.format == "off":
        text, skipped = complex_to_off(reduced)
        if skipped:
            print(
                f"warning: {skipped} simplices of dimension < 2 are not representable in OFF",
                file=sys.stderr,
            )
        _emit(args, text)
        return 0
    result = {"K": complex_to_json(full), "K_prime": complex_to_json(reduced)}
    lines = [
        f"K: {len(full)} simplices on {len(full.vertices())} vertices",
        f"K': {len(reduced)} simplices on {len(reduced.vertices())} vertices",
    ]
    _report(args, _config(args, n), result, [], lines)
    return 0


def _cmd_check_pseudomanifold(args: argparse.Namespace) -> int:
    mset, n, pair = _load_context(args)
    code = _maybe_replay(args, mset, pair)
    if code is not None:
        return code
    reduced = reduce_complex(build_complex(mset, pair), mset, pair)
    if not reduced.simplices:
        print("warning: empty complex is vacuously a pseudomanifold", file=sys.stderr)
    report = is_pseudomanifold(reduced, pair.n - 1)
    lines = [
        f"pseudomanifold (dimension {report.dimension}): {report.all_hold}",
        f"homogeneous: {report.homogeneous.holds}",
        f"nondegenerate: {report.nondegenerate.holds}",
        f"strongly-connected: {report.strongly_connected.holds}",
    ]
    for w in report.witnesses():
        lines.append(f"  witness: {json.dumps(w, sort_keys=True)}")
    _report(args, _config(args, n), report.to_json(), report.witnesses(), lines)
    return 0 if report.all_hold else 1


def _cmd_euler(args: argparse.Namespace) -> int:
    mset, n, pair = _load_context(args)
    full = build_complex(mset, pair)
    reduced = reduce_complex(full, mset, pair)
    result = {
        "chi_K": euler_characteristic(full),
        "chi_K_prime": euler_characteristic(reduced),
    }
    lines = [f"chi(K) = {result['chi_K']}", f"chi(K') = {result['chi_K_prime']}"]
    _report(args, _config(args, n), result, [], lines)
    return 0


def _cmd_jordan(args: argparse.Namespace) -> int:
    mset, n, pair = _load_context(args)
    code = _maybe_replay(args, mset, pair)
    if code is not None:
        return code
    report = jordan_check(mset, pair, margin=args.margin)
    lines = [
        f"all-true: {report.all_true}",
        f"two-components: {report.two_components} (count {report.component_count})",
        f"inside-size: {report.inside_size}",
        f"outside-flagged: {report.outside_flagged}",
        f"common-boundary: {report.common_boundary.holds}",
        f"no-simple-points: {report.no_simple_points.holds}",
    ]
    for w in report.witnesses():
        lines.append(f"  witness: {json.dumps(w, sort_keys=True)}")
    _report(args, _config(args, n), report.to_json(), report.witnesses(), lines)
    return 0 if report.all_true else 1


def _cmd_good_pair(args: argparse.Namespace) -> int:
    _, n, pair = _load_context(args)
    # witnesses of a good-pair report live on the origin's background sphere
    sphere = frozenset(pair.beta.offsets)
    code = _maybe_replay(args, sphere, pair)
    if code is not None:
        return code
    report = is_good_pair(pair, bound=args.bound, budget=args.budget)
    lines = [
        f"good-pair: {report.verdict}",
        f"separating: {report.separating}",
        f"contractibility: {report.contractibility}",
        f"double-points: {len(report.double_point_witnesses)}",
    ]
    for w in report.double_point_witnesses:
        lines.append(f"  witness: {json.dumps(w.to_json(), sort_keys=True)}")
    _report(args, _config(args, n), report.to_json(), report.witnesses(), lines)
    if report.verdict == "yes":
        return 0
    if report.verdict == "no":
        return 1
    return 3


def _cmd_simple_points(args: argparse.Namespace) -> int:
    mset, n, pair = _load_context(args)
    code = _maybe_replay(args, mset, pair)
    if code is not None:
        return code
    region = Region.around(mset, args.margin)
    simple = [p for p in sorted(mset) if is_simple_point(p, mset, pair, region)]
    result = {"simple_points": [list(p) for p in simple], "count": len(simple)}
    witnesses = [{"kind": "simple-point", "point": list(p)} for p in simple]
    lines = [f"simple points: {len(simple)}"] + [f"  {' '.join(map(str, p))}" for p in simple]
    _report(args, _config(args, n), result, witnesses, lines)
    return 0 if not simple else 1


def _cmd_generate(args: argparse.Namespace) -> int:
    kind = args.kind.replace("-", "_")
    spec = GeneratorSpec(kind, tuple(args.params))
    try:
        points = generate(spec)
    except (TypeError, ValueError) as exc:
        raise InputFormatError(f"generate {args.kind}: {exc}") from exc
    if args.format == "json":
        payload = {
            "tool": "digitop",
            "version": __version__,
            "config": {"command": "generate", "kind": args.kind, "params": list(args.params)},
            "result": {"points": [list(p) for p in sorted(points)], "count": len(points)},
            "witnesses": [],
        }
        text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    else:
        text = format_points(points)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


_HANDLERS = {
    "verify-manifold": _cmd_verify_manifold,
    "check-separation": _cmd_check_separation,
    "build": _cmd_build,
    "check-pseudomanifold": _cmd_check_pseudomanifold,
    "euler": _cmd_euler,
    "jordan": _cmd_jordan,
    "good-pair": _cmd_good_pair,
    "simple-points": _cmd_simple_points,
    "generate": _cmd_generate,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return _HANDLERS[args.command](args)
    except InputFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NotCertifiedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
