"""Command-line front end.

Every command prints one JSON document (or ``key: value`` lines with
``--plain``).  Exit codes: 0 success or angulable, 3 blocked, 2 usage, parse
or precondition error, 4 size cap exceeded, 1 internal failure.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from typing import Optional

from . import __version__
from .census import census
from .configs import classify_forbidding, detect_alpha_pairs, g_angulable_vertices
from .convex import Instance, format_instance, parse_instance
from .cubic import label_cubic, place_cubic
from .decide import construct_small, decide
from .errors import (
    GangulateError,
    NoneFound,
    NotPotentiallyAngulable,
    PlacementValidationError,
    SizeCapExceeded,
)
from .oracle import count_gangulations, find_gangulation, validate_gangulation
from .placement import disjoint_cycles, load_graph, place_cycle, place_petersen, place_two_regular
from .render import render_svg

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2
EXIT_BLOCKED = 3
EXIT_CAP = 4

DEFAULT_MAX_N = 64
ENV_MAX_N = "GANGULATE_MAX_N"


class UsageError(GangulateError):
    pass


def max_n_from(args) -> int:
    if args.max_n is not None:
        return args.max_n
    env = os.environ.get(ENV_MAX_N)
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"{ENV_MAX_N} must be an integer, got {env!r}") from None
    return DEFAULT_MAX_N


def digest(inst: Instance) -> str:
    return hashlib.sha256(format_instance(inst).encode()).hexdigest()


def instance_dict(inst: Instance) -> dict:
    return {
        "n": inst.n,
        "g": inst.g,
        "forbidden": [list(e) for e in inst.sorted_edges()],
        "digest": digest(inst),
    }


def load(args) -> Instance:
    try:
        with open(args.path, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {args.path}: {exc.strerror or exc}") from None
    inst = parse_instance(data)
    if args.g_override is not None:
        inst = Instance(inst.n, args.g_override, inst.forbidden)
    cap = max_n_from(args)
    if inst.n > cap:
        raise SizeCapExceeded(f"n={inst.n} exceeds the size cap {cap} (raise with --max-n)")
    return inst


# --- commands ---------------------------------------------------------------
# each returns (report, exit code)


def cmd_decide(args):
    inst = load(args)
    d = decide(inst, max_n=max_n_from(args))
    report = {"instance": instance_dict(inst), **d.to_dict()}
    return report, EXIT_OK if d.angulable else EXIT_BLOCKED


def cmd_count(args):
    inst = load(args)
    report = {"instance": instance_dict(inst), "count": str(count_gangulations(inst))}
    if args.witness:
        w = find_gangulation(inst)
        report["witness"] = w.to_dict() if w else None
    return report, EXIT_OK


def cmd_construct(args):
    inst = load(args)
    w = construct_small(inst)
    check = validate_gangulation(inst, w)
    if not check:
        raise PlacementValidationError("construction produced an invalid witness", check.reasons)
    return {"instance": instance_dict(inst), "method": "Construction", "witness": w.to_dict()}, EXIT_OK


def cmd_classify(args):
    inst = load(args)
    cls = classify_forbidding(inst)
    report = {
        "instance": instance_dict(inst),
        "class": str(cls),
        "forbidding": cls.forbidding,
        "alpha_pairs": [list(p) for p in detect_alpha_pairs(inst)],
        "g_angulable_vertices": g_angulable_vertices(inst),
        "evidence": cls.evidence,
    }
    if args.witness:
        w = find_gangulation(inst)
        report["witness"] = w.to_dict() if w else None
    return report, EXIT_BLOCKED if cls.forbidding else EXIT_OK


def _parse_cycles(text: str) -> list[int]:
    try:
        lengths = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"--cycles expects comma-separated integers, got {text!r}") from None
    if not lengths:
        raise UsageError("--cycles is empty")
    return lengths


def _need(args, *names):
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"place {args.kind} needs {', '.join(missing)}")


def cmd_place(args):
    kind = args.kind
    graph = None
    if kind == "cycle":
        _need(args, "n", "g")
        params = {"n": args.n, "g": args.g}
        if args.n > max_n_from(args):
            raise SizeCapExceeded(f"n={args.n} exceeds the size cap {max_n_from(args)}")
        try:
            p = place_cycle(args.n, args.g)
        except NotPotentiallyAngulable as exc:
            return {"kind": kind, "params": params, "potentially_angulable": False, "reason": str(exc)}, EXIT_BLOCKED
    elif kind == "two-regular":
        _need(args, "g")
        if (args.cycles is None) == (args.graph is None):
            raise UsageError("place two-regular needs exactly one of --cycles or --graph")
        if args.cycles is not None:
            graph = disjoint_cycles(_parse_cycles(args.cycles))
            params = {"cycles": _parse_cycles(args.cycles), "g": args.g}
        else:
            graph = _load_graph(args.graph)
            params = {"graph": args.graph, "g": args.g}
        p = place_two_regular(graph, args.g)
    elif kind == "petersen":
        _need(args, "n", "k", "g")
        params = {"n": args.n, "k": args.k, "g": args.g}
        if 2 * args.n > max_n_from(args):
            raise SizeCapExceeded(f"2n={2 * args.n} exceeds the size cap {max_n_from(args)}")
        p = place_petersen(args.n, args.k, args.g)
    else:
        _need(args, "graph")
        if args.g not in (None, 4):
            raise UsageError("cubic placements are 4-angulations; drop --g or pass --g 4")
        graph = _load_graph(args.graph)
        params = {"graph": args.graph, "g": 4}
        lab = label_cubic(graph)
        p = place_cubic(graph, lab)
    if p.target.n > max_n_from(args):
        raise SizeCapExceeded(f"n={p.target.n} exceeds the size cap {max_n_from(args)}")
    report = {"kind": kind, "params": params, "potentially_angulable": True, "instance": instance_dict(p.target)}
    report.update(p.to_dict())
    if kind == "cubic":
        report["labeling"] = lab.to_dict()
    if args.svg:
        _write(args.svg, render_svg(p.target, p.witness, title=f"{kind} placement"))
    return report, EXIT_OK


def _load_graph(path):
    try:
        return load_graph(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from None


def _write(path, text):
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror or exc}") from None


def cmd_render(args):
    inst = load(args)
    witness = find_gangulation(inst) if args.witness else None
    svg = render_svg(inst, witness)
    if args.out is None or args.out == "-":
        sys.stdout.write(svg)
        return None, EXIT_OK
    _write(args.out, svg)
    report = {
        "instance": instance_dict(inst),
        "out": args.out,
        "witness": witness.to_dict() if witness else None,
        "sha256": hashlib.sha256(svg.encode()).hexdigest(),
    }
    return report, EXIT_OK


def _parse_sizes(text: Optional[str]):
    if text is None:
        return None
    try:
        if "-" in text:
            lo, hi = text.split("-", 1)
            return list(range(int(lo), int(hi) + 1))
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"--sizes expects 'lo-hi' or a comma list, got {text!r}") from None


def cmd_census(args):
    cap = max_n_from(args)
    if args.n > cap:
        raise SizeCapExceeded(f"n={args.n} exceeds the size cap {cap}")
    table = census(args.n, args.g, _parse_sizes(args.sizes), sample=args.random, seed=args.seed)
    return {"census": table.to_dict()}, EXIT_OK if table.mismatches == 0 else EXIT_INTERNAL


COMMANDS = {
    "decide": cmd_decide,
    "count": cmd_count,
    "construct": cmd_construct,
    "classify": cmd_classify,
    "place": cmd_place,
    "render": cmd_render,
    "census": cmd_census,
}


# --- argument parsing -------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="plain", action="store_false", help="JSON output (default)")
    fmt.add_argument("--plain", dest="plain", action="store_true", help="key: value output")
    common.set_defaults(plain=False)
    common.add_argument("--max-n", type=int, default=None, help=f"size cap (default ${ENV_MAX_N} or {DEFAULT_MAX_N})")
    common.add_argument("--witness", action="store_true", help="include a witness g-angulation")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized commands")
    common.add_argument("--timing", action="store_true", help="add timing_ms to the report")

    inst = argparse.ArgumentParser(add_help=False)
    inst.add_argument("path", help="instance file: 'n g' then one 'i j' chord per line")
    inst.add_argument("--g-override", type=int, default=None, help="replace g from the file header")

    parser = argparse.ArgumentParser(prog="gangulate", description="g-angulations of convex K_n minus a forbidden set")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("decide", parents=[common, inst], help="angulable with witness, or blocked with class")
    sub.add_parser("count", parents=[common, inst], help="exact number of g-angulations avoiding F")
    sub.add_parser("construct", parents=[common, inst], help="build a g-angulation for |F| <= n-g")
    sub.add_parser("classify", parents=[common, inst], help="recognize F*, J*(beta) or neither")

    p = sub.add_parser("place", parents=[common], help="place an abstract graph so K_n - F is g-angulable")
    p.add_argument("kind", choices=["cycle", "two-regular", "petersen", "cubic"])
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--g", type=int)
    p.add_argument("--cycles", help="two-regular: comma-separated cycle lengths")
    p.add_argument("--graph", help="graph file: 'n m' then one 'i j' edge per line")
    p.add_argument("--svg", help="also write an SVG drawing of the placement")

    r = sub.add_parser("render", parents=[common, inst], help="SVG drawing of an instance")
    r.add_argument("-o", "--out", help="output file (default stdout)")

    c = sub.add_parser("census", parents=[common], help="classification table over all (or random) F")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--g", type=int, required=True)
    c.add_argument("--sizes", help="'lo-hi' or comma list of |F| values (default 0..n-1)")
    c.add_argument("--random", type=int, default=None, metavar="COUNT", help="sample COUNT random sets instead")
    return parser


def _plain(report: dict, prefix: str = "") -> list[str]:
    lines = []
    for key, value in report.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict) and value:
            lines += _plain(value, name + ".")
        else:
            lines.append(f"{name}: {json.dumps(value, sort_keys=True) if not isinstance(value, str) else value}")
    return lines


def emit(report: dict, plain: bool, out=None) -> None:
    out = out or sys.stdout
    if plain:
        out.write("\n".join(_plain(report)) + "\n")
    else:
        out.write(json.dumps(report, indent=2, sort_keys=True) + "\n")


def _echo(args) -> dict:
    skip = {"command", "plain", "timing"}
    return {"name": args.command, "args": {k: v for k, v in sorted(vars(args).items()) if k not in skip}}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # argparse exits with 2 on usage errors
    start = time.perf_counter()
    try:
        report, code = COMMANDS[args.command](args)
    except SizeCapExceeded as exc:
        print(f"gangulate: size cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (PlacementValidationError, NoneFound) as exc:
        print(f"gangulate: internal failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except GangulateError as exc:
        print(f"gangulate: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if report is not None:
        report = {"command": _echo(args), **report}
        if args.timing:
            report["timing_ms"] = round((time.perf_counter() - start) * 1000, 3)
        emit(report, args.plain)
    return code


if __name__ == "__main__":
    sys.exit(main())
