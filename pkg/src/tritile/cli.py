"""Command-line interface: ``tritile <command> ...``.

Exit status is 0 on success, 1 when a tiling or spec is invalid and 2 for
usage errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .analysis import analysis_report, format_report_text
from .errors import InvalidSpec, ParseError, ResourceLimit, TritileError
from .exact import AngleClass, TileSpec, as_rational
from .generators import (gen_appendix_fixture, gen_equilateral_centers, gen_kite,
                         gen_parallelogram,
                         gen_quadratic, gen_two_strips, worked_example_arithmetic)
from .invariant import match_c_internal, sawtooth_augment, zh_tiling
from .io import dumps, load_region, load_tiling, save_tiling
from .render import render_svg
from .search import (BUILTIN_REGIONS, DEFAULT_PRUNING, PRUNE_RULES, SearchConfig,
                     builtin_region, enumerate_tilings)


class UsageError(Exception):
    pass


def _parse_tile(text, alpha=None, angle_mode=None):
    parts = [p.strip() for p in text.split(",")]
    if len(parts) not in (2, 3) or not all(parts):
        raise UsageError(f"--tile expects a,b or a,b,c, got {text!r}")
    try:
        vals = [as_rational(p) for p in parts]
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"--tile has a non-numeric entry: {text!r}") from None
    c = vals[2] if len(vals) == 3 else None
    return TileSpec.from_sides(vals[0], vals[1], c, alpha=alpha, angle_mode=angle_mode)


def _parse_frame(text):
    if text is None:
        return None
    try:
        j, k = (int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"--frame expects j,k integers, got {text!r}") from None
    return AngleClass(j, k)


def _emit(text, out):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json(obj):
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


# ---------------------------------------------------------------------------
# commands


def cmd_validate(args):
    t = load_tiling(args.file)
    if args.no_mirrored and any(tile.chirality == "mirrored" for tile in t.tiles):
        print("invalid: mirrored tiles present but --no-mirrored was given")
        return 1
    kind = "fragment" if t.fragment else "tiling"
    print(f"valid, {t.n} tiles" + ("" if kind == "tiling" else " (fragment)"))
    return 0


def cmd_analyze(args):
    t = load_tiling(args.file)
    rep = analysis_report(t)
    _emit(_json(rep) if args.format == "json" else format_report_text(rep) + "\n", args.out)
    return 0


def cmd_zh(args):
    t = load_tiling(args.file)
    rep = zh_tiling(t, _parse_frame(args.frame))
    if args.format == "json":
        d = rep.as_dict()
        d["matching"] = match_c_internal(t).as_dict()
        _emit(_json(d), args.out)
    else:
        lines = [f"frame: j={rep.frame.j} k={rep.frame.k}",
                 f"zeta(tiles)    = {rep.zh_tiling}",
                 f"zeta(boundary) = {rep.zh_boundary if rep.zh_boundary is not None else 'n/a'}",
                 f"exact match: {rep.exact_match}   numeric match: {rep.numeric_match}"]
        if rep.residual:
            lines.append(f"residual (from segment relations): {rep.residual}")
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_generate(args):
    spec = _parse_tile(args.tile, args.alpha, args.angle_mode)
    frame = _parse_frame(args.frame)
    if args.kind == "quadratic":
        t = gen_quadratic(args.n, spec, frame)
    elif args.kind == "kite":
        t = gen_kite(spec, frame)
    elif args.kind == "parallelogram":
        t = gen_parallelogram(spec, frame, args.shared_side)
    elif args.kind == "appendix":
        t, _ = gen_appendix_fixture(spec)
    elif args.kind == "equilateral":
        t = gen_equilateral_centers(spec, args.n)
    else:
        t = gen_two_strips(spec, args.n_below, args.label_below, args.n_above, args.label_above)
    _emit(dumps(t), args.out)
    return 0


def cmd_sawtooth(args):
    t = sawtooth_augment(load_tiling(args.file))
    _emit(dumps(t), args.out)
    return 0


def cmd_search(args):
    spec = _parse_tile(args.tile, args.alpha, args.angle_mode)
    if args.region in BUILTIN_REGIONS:
        region = builtin_region(args.region, spec)
    elif os.path.exists(args.region):
        region = load_region(args.region)
    else:
        raise UsageError(f"--region {args.region!r} is neither a file nor one of "
                         f"{', '.join(BUILTIN_REGIONS)}")
    pruning = DEFAULT_PRUNING if args.prune is None else frozenset(
        p for p in args.prune.split(",") if p)
    bad = pruning - set(PRUNE_RULES)
    if bad:
        raise UsageError(f"--prune: unknown rule(s) {', '.join(sorted(bad))}")
    cfg = SearchConfig(spec, region, args.max_tiles, args.mirrored, pruning, args.workers,
                       args.node_limit)
    res = enumerate_tilings(cfg)
    if args.emit:
        os.makedirs(args.emit, exist_ok=True)
        for i, t in enumerate(res.tilings):
            save_tiling(t, os.path.join(args.emit, f"tiling_{i:03d}.json"))
    d = res.as_dict()
    if args.format == "json":
        _emit(_json(d), args.out)
    else:
        lines = [f"tilings found: {d['count']} (target {d['target_tiles']} tiles)",
                 f"nodes: {d['nodes']}",
                 "prunes: " + ", ".join(f"{k}={v}" for k, v in d["prunes"].items()),
                 f"time: {d['wall_time']} s"]
        lines += [f"note: {n}" for n in d["notes"]]
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_render(args):
    t = load_tiling(args.file)
    links = tuple(x for x in (args.links or "").split(",") if x)
    for lab in links:
        if lab not in ("a", "b", "c"):
            raise UsageError(f"--links: unknown label {lab!r}")
    svg = render_svg(t, segments=args.segments, links=links, matching=args.matching,
                     vertex_types=args.types)
    _emit(svg, args.out)
    return 0


def cmd_example(args):
    if args.name == "herdt-arithmetic":
        r = worked_example_arithmetic()
        lines = [
            f"L = 27*3 + 5 + 7*7 = {r.L}",
            f"N*a*b = {r.N}*3*5 = {r.area_lhs} = L^2 = {r.area_rhs}",
            f"zeta(boundary ABC) = 3*L = {r.zh_boundary_big}",
            f"zeta(boundary T1) = 49 + 15 - 34 + 15 = {r.zh_trapezoid}",
            f"9 * zeta(boundary T1) = {r.zh_trapezoid_total}",
        ]
        ok = r.area_lhs == r.area_rhs and r.zh_trapezoid_total == r.zh_boundary_big
        lines.append("consistent" if ok else "INCONSISTENT")
        print("\n".join(lines))
        return 0 if ok else 1
    spec = _parse_tile(args.tile)
    t, x = gen_appendix_fixture(spec)
    rep = analysis_report(t)
    deg = rep["graphs"]["a"]["degrees"].get(str(x), {"in": 0, "out": 0})
    print(f"vertex X = {t.points[x]}: type {rep['census']['types'].get(str(x))}, "
          f"a-graph in-degree {deg['in']}, out-degree {deg['out']}")
    return 0


# ---------------------------------------------------------------------------
# parser


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: usage error: {message}\n")


def build_parser():
    p = _Parser(prog="tritile", description="Tilings by a triangle with a 2pi/3 angle.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def tile_opts(sp, required=True):
        sp.add_argument("--tile", required=required, default=None if required else "3,5",
                        help="side lengths a,b[,c]")
        sp.add_argument("--alpha", type=float, help="angle opposite a, in radians")
        sp.add_argument("--angle-mode", choices=("incommensurable", "commensurable", "unknown"))

    def out_opts(sp, fmt=True):
        sp.add_argument("--out", help="write here instead of stdout")
        if fmt:
            sp.add_argument("--format", choices=("text", "json"), default="text")

    sp = sub.add_parser("validate", help="check a tiling file")
    sp.add_argument("file")
    sp.add_argument("--no-mirrored", action="store_true", help="reject mirror-image tiles")
    sp.set_defaults(func=cmd_validate)

    sp = sub.add_parser("analyze", help="census, link graphs, relations and verdict")
    sp.add_argument("file")
    out_opts(sp)
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("zh", help="zeta of the tiles and of the boundary")
    sp.add_argument("file")
    sp.add_argument("--frame", help="reference direction j,k")
    out_opts(sp)
    sp.set_defaults(func=cmd_zh)

    sp = sub.add_parser("generate", help="write a standard construction as JSON")
    sp.add_argument("kind", choices=("quadratic", "kite", "parallelogram", "appendix",
                                     "two-strips", "equilateral"))
    tile_opts(sp)
    sp.add_argument("--n", type=int, default=2, help="scale of the quadratic or equilateral tiling")
    sp.add_argument("--shared-side", choices=("a", "b", "c"), default="c")
    sp.add_argument("--frame", help="first edge direction j,k")
    sp.add_argument("--n-below", type=int, default=1)
    sp.add_argument("--label-below", choices=("a", "b", "c"), default="a")
    sp.add_argument("--n-above", type=int, default=1)
    sp.add_argument("--label-above", choices=("a", "b", "c"), default="a")
    out_opts(sp, fmt=False)
    sp.set_defaults(func=cmd_generate)

    sp = sub.add_parser("sawtooth", help="add sawtooth tiles along an all-c boundary")
    sp.add_argument("file")
    out_opts(sp, fmt=False)
    sp.set_defaults(func=cmd_sawtooth)

    sp = sub.add_parser("search", help="enumerate small tilings of a region")
    tile_opts(sp)
    sp.add_argument("--region", required=True,
                    help=f"JSON file or builtin ({', '.join(BUILTIN_REGIONS)})")
    sp.add_argument("--max-tiles", type=int, required=True)
    sp.add_argument("--mirrored", action=argparse.BooleanOptionalAction, default=True)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--prune", help=f"comma list from {', '.join(PRUNE_RULES)}")
    sp.add_argument("--node-limit", type=int, default=2_000_000)
    sp.add_argument("--emit", help="directory for the tilings found")
    out_opts(sp)
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("render", help="draw a tiling as SVG")
    sp.add_argument("file")
    sp.add_argument("--segments", action="store_true", help="overlay internal segments")
    sp.add_argument("--links", help="overlay link graphs for these labels, e.g. a,c")
    sp.add_argument("--matching", action="store_true", help="overlay c-internal pairs")
    sp.add_argument("--types", action="store_true", help="mark vertex types")
    out_opts(sp, fmt=False)
    sp.set_defaults(func=cmd_render)

    sp = sub.add_parser("example", help="built-in worked examples")
    sp.add_argument("name", choices=("herdt-arithmetic", "appendix"))
    sp.add_argument("--tile", default="3,2", help="tile for the appendix example")
    sp.set_defaults(func=cmd_example)
    return p


def run(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"tritile: usage error: {exc}", file=sys.stderr)
        return 2
    except (ParseError, InvalidSpec) as exc:
        print(f"invalid: {exc}", file=sys.stderr)
        return 1
    except ResourceLimit as exc:
        print(f"search stopped: {exc} (not exhaustive)", file=sys.stderr)
        return 1
    except TritileError as exc:
        print(f"invalid: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"tritile: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
