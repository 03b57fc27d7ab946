"""Command-line surface.

Exit codes: 0 when the verdict is positive or the command completed
cleanly, 1 when the verdict is negative (invalid tiling, no tilings
found, no bijection, non-generic line), 2 on usage or I/O errors.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import generators, search, stab
from .core import Tessellation
from .svg import UnsupportedDimensionError, render_svg
from .tessfile import TessFileError, format_rational, parse, parse_rational, serialize
from .validation import (
    InvalidInputError,
    hypothesis_check,
    stability_oracle,
    validate,
)

_SCALE_CAVEAT = (
    "note: lattice search yields positive certificates only; a count absent "
    "at these scales may still be achievable with finer denominators"
)


def _load(path: str) -> Tessellation:
    return parse(Path(path).read_text(encoding="utf-8"))


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _rational(token: str) -> Fraction:
    try:
        return parse_rational(token)
    except TessFileError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cubetess",
        description="Construct, validate, and analyze exact cube tessellations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="construct a tessellation")
    gen_sub = gen.add_subparsers(dest="kind", required=True)
    p = gen_sub.add_parser("grid", help="perfect m^d grid")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--s", type=_rational, default=Fraction(1), help="cell side")
    p.add_argument("-o", "--output")
    p = gen_sub.add_parser("shell", help="unit shell with refilled hole")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("-o", "--output")
    p = gen_sub.add_parser("merged", help="grid with merged corner block")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("-o", "--output")
    p = gen_sub.add_parser("refine", help="replace one cube by a scaled tiling")
    p.add_argument("host", help="tessellation file to refine")
    p.add_argument("--index", type=int, required=True)
    p.add_argument("--inner", required=True, help="tessellation file to graft")
    p.add_argument("-o", "--output")

    p = sub.add_parser("validate", help="certify a tessellation file")
    p.add_argument("file")

    p = sub.add_parser("analyze", help="rigidity oracle plus mean identities")
    p.add_argument("file")

    p = sub.add_parser("stab", help="profile of a generic axis-parallel line")
    p.add_argument("file")
    p.add_argument("--axis", type=int, required=True, help="1-based stab axis")
    p.add_argument(
        "--fixed",
        type=_rational,
        nargs="+",
        help="fixed coordinates for the other axes (default: auto-picked)",
    )

    p = sub.add_parser("peps", help="gridlike point set and cube/point bijection")
    p.add_argument("file")
    p.add_argument("--epsilon", type=_rational, help="explicit offset to use")

    p = sub.add_parser("search", help="exhaustive lattice-scale tiling search")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--L", type=int, required=True)
    p.add_argument("--n", type=int, help="exact piece count")
    p.add_argument("--n-max", type=int, help="piece count cap")
    p.add_argument("--side-min", type=int, default=1)
    p.add_argument("--side-max", type=int)
    p.add_argument("--tiling-limit", type=int)
    p.add_argument("--node-limit", type=int, default=100_000_000)
    p.add_argument("--counts", action="store_true", help="report feasible counts <= --n-max")
    p.add_argument("--ratio", action="store_true", help="report best min/max side ratio for --n")
    p.add_argument("--print", action="store_true", dest="print_tilings")
    p.add_argument("--out", help="directory for one file per tiling")

    p = sub.add_parser("render", help="render a planar tessellation to SVG")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)

    return parser


def _cmd_generate(args: argparse.Namespace) -> int:
    if args.kind == "grid":
        t = generators.perfect_grid(args.d, args.m, args.s)
    elif args.kind == "shell":
        t = generators.shell_construction(args.d, args.m)
    elif args.kind == "merged":
        t = generators.merged_block_grid(args.d, args.m, args.k)
    else:
        t = generators.refine(_load(args.host), args.index, _load(args.inner))
    _emit(serialize(t), args.output)
    return 0


def _cmd_validate(args: argparse.Namespace) -> int:
    report = validate(_load(args.file))
    print(f"volume target {format_rational(report.volume_target)}")
    print(f"volume sum    {format_rational(report.volume_sum)}")
    for v in report.violations:
        idx = " ".join(str(i) for i in v.indices)
        print(f"violation {v.kind} {idx}".rstrip())
    print("VALID" if report.is_valid else "INVALID")
    return 0 if report.is_valid else 1


def _cmd_analyze(args: argparse.Namespace) -> int:
    t = _load(args.file)
    report = stability_oracle(t)
    print(f"n {report.n}")
    print(f"d {report.d}")
    print(f"max side {format_rational(report.s_max)}")
    print(f"hypothesis {'holds' if report.hypothesis_holds else 'fails'}")
    if report.offending_side is not None:
        print(f"offending side {format_rational(report.offending_side)}")
    if report.n_is_perfect_power:
        print(f"perfect power yes (m {report.root_m})")
    else:
        print("perfect power no")
    print(f"all sides equal {'yes' if report.all_sides_equal else 'no'}")
    if report.hypothesis_holds:
        identity = stab.mean_identity_check(t)
        print(f"sum of sides {format_rational(identity.sum_sides)} (normalized)")
        print(f"line identity {'holds' if identity.holds_line_identity else 'fails'}")
        print(
            f"power-mean equality {'holds' if identity.power_mean_equality else 'fails'}"
        )
    return 0


def _cmd_stab(args: argparse.Namespace) -> int:
    t = _load(args.file)
    if args.fixed is None:
        line = stab.pick_generic_line(t, args.axis)
    else:
        line = stab.LineSpec(args.axis, tuple(args.fixed))
    profile = stab.stab_profile(t, line)
    fixed = " ".join(format_rational(x) for x in line.fixed_coords)
    print(f"axis {line.axis}")
    print(f"fixed {fixed}")
    print(f"m {profile.m}")
    print("breakpoints " + " ".join(format_rational(x) for x in profile.breakpoints))
    print("cubes " + " ".join(str(i) for i in profile.cube_indices))
    return 0


def _cmd_peps(args: argparse.Namespace) -> int:
    t = _load(args.file)
    result = stab.build_peps(t, epsilon=args.epsilon)
    print(f"epsilon {format_rational(result.epsilon)}")
    print(f"points {len(result.points)}")
    for i in sorted(result.assignment):
        grid = " ".join(str(j) for j in result.assignment[i])
        print(f"cube {i} -> ({grid})")
    return 0


def _cmd_search(args: argparse.Namespace) -> int:
    if args.counts:
        if args.n_max is None:
            print("error: --counts requires --n-max", file=sys.stderr)
            return 2
        counts = search.feasible_counts(args.d, args.L, args.n_max)
        print("feasible counts " + " ".join(str(n) for n in sorted(counts)))
        print(_SCALE_CAVEAT)
        return 0
    cfg = search.SearchConfig(
        d=args.d,
        L=args.L,
        n=args.n,
        n_max=args.n_max,
        side_min=args.side_min,
        side_max=args.side_max,
        tiling_limit=args.tiling_limit,
        node_limit=args.node_limit,
    )
    if args.ratio:
        if args.n is None:
            print("error: --ratio requires --n", file=sys.stderr)
            return 2
        ratio = search.extremal_ratio(args.d, args.L, args.n)
        if ratio is None:
            print("no tiling")
            return 1
        print(f"extremal ratio {format_rational(ratio)}")
        return 0
    outcome = search.search_tilings(cfg)
    print(f"tilings {len(outcome.tilings)}")
    print(f"exhausted {'yes' if outcome.exhausted else 'no'}")
    print(f"nodes {outcome.nodes_visited}")
    print(_SCALE_CAVEAT)
    if args.print_tilings:
        for t in outcome.tilings:
            print()
            sys.stdout.write(serialize(t))
    if args.out:
        directory = Path(args.out)
        directory.mkdir(parents=True, exist_ok=True)
        for i, t in enumerate(outcome.tilings):
            (directory / f"tiling_{i:04d}.tess").write_text(
                serialize(t), encoding="utf-8"
            )
    return 0 if outcome.tilings else 1


def _cmd_render(args: argparse.Namespace) -> int:
    _emit(render_svg(_load(args.file)), args.output)
    return 0


_HANDLERS = {
    "generate": _cmd_generate,
    "validate": _cmd_validate,
    "analyze": _cmd_analyze,
    "stab": _cmd_stab,
    "peps": _cmd_peps,
    "search": _cmd_search,
    "render": _cmd_render,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _HANDLERS[args.command](args)
    except (
        InvalidInputError,
        stab.NonGenericLineError,
        stab.NoEpsilonFoundError,
        stab.PreconditionFailedError,
        search.SearchLimitError,
    ) as exc:
        # Negative verdicts are domain outcomes, not usage errors.
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (TessFileError, UnsupportedDimensionError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
