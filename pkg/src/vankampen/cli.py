"""Command line interface.

Exit codes: 0 success, 1 mathematical failure (genericity exhaustion,
diagonal point, inconsistent cocycle), 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import complex as cx
from .delprod import build_deleted_product, format_cell
from .deljoin import DiagonalPointError, JoinPointError, format_point, parse_point, retract_point
from .genmaps import GenericityError, assemble_cocycle, critical_dim, sample_map
from .obstruction import InconsistentCocycleError
from .verdict import DecisionError, decide

MATH_ERRORS = (GenericityError, DiagonalPointError, InconsistentCocycleError, DecisionError)


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(str(exc)) from None


def _read_complex(path: str) -> cx.SimplicialComplex:
    try:
        K = cx.parse(_read(path))
    except cx.ComplexParseError as exc:
        raise UsageError(f"{path}: {exc}") from None
    if len(K) == 0:
        raise UsageError("input complex is empty")
    return K


def _emit(args, text: str) -> None:
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_gen(args) -> int:
    kind, a, b = args.kind, args.a, args.b
    try:
        if kind == "tverberg":
            K = cx.tverberg_complex(a, b)
        elif kind == "skeleton":
            K = cx.simplex_skeleton(a, b)
        else:
            K = cx.complete_bipartite(a, b)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(args, cx.serialize(K))
    return 0


def cmd_delprod(args) -> int:
    K = _read_complex(args.input)
    X = build_deleted_product(K, args.r, dims=args.dim)
    dims = args.dim if args.dim is not None else range(X.max_dim + 1)
    _emit(args, "".join(format_cell(c) + "\n" for k in dims for c in X.cells(k)))
    return 0


def cmd_cocycle(args) -> int:
    K = _read_complex(args.input)
    n = critical_dim(args.d, args.r)
    X = build_deleted_product(K, args.r, dims=[n])
    f = sample_map(K, args.d, args.seed, X)
    c = assemble_cocycle(f, X)
    rows = c.values.items() if args.all else ((e, v) for e, v in c.values.items() if v)
    _emit(args, "".join(f"{format_cell(e)}\t{v}\n" for e, v in rows))
    if args.plot:
        from .plotting import render
        render(K, f, c, args.plot)
    return 0


def cmd_retract(args) -> int:
    out = []
    for lineno, line in enumerate(_read(args.input).splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            p = parse_point(line, args.r)
        except (JoinPointError, ValueError) as exc:
            raise UsageError(f"line {lineno}: {exc}") from None
        out.append(format_point(retract_point(p)) + "\n")
    _emit(args, "".join(out))
    return 0


def cmd_decide(args) -> int:
    K = _read_complex(args.input)
    name = "<stdin>" if args.input == "-" else Path(args.input).name
    report = decide(K, args.r, args.d, args.seed, name=name, timings=args.timings)
    _emit(args, report.to_json() if args.format == "json" else report.to_text())
    if args.plot:
        from .plotting import render
        from .genmaps import IntersectionCocycle
        f = report.pl_map or sample_map(K, args.d, args.seed)
        c = report.cocycle or IntersectionCocycle({}, args.d, args.r)
        render(K, f, c, args.plot)
    return 0


def _positive(lo: int):
    def conv(text: str) -> int:
        v = int(text)
        if v < lo:
            raise argparse.ArgumentTypeError(f"must be >= {lo}")
        return v
    return conv


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="vankampen", description="Almost r-embeddability via deleted products.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write output to this file instead of stdout")

    g = sub.add_parser("gen", parents=[common], help="generate a complex file")
    g.add_argument("kind", choices=["tverberg", "skeleton", "bipartite"])
    g.add_argument("a", type=int)
    g.add_argument("b", type=int)
    g.set_defaults(func=cmd_gen)

    withr = argparse.ArgumentParser(add_help=False)
    withr.add_argument("--r", type=_positive(2), required=True)

    withd = argparse.ArgumentParser(add_help=False)
    withd.add_argument("--d", type=_positive(1), required=True)
    withd.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("delprod", parents=[common, withr], help="dump cells of the deleted product")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--dim", type=int, nargs="+", help="only these cell dimensions")
    p.set_defaults(func=cmd_delprod)

    p = sub.add_parser("cocycle", parents=[common, withr, withd], help="intersection cocycle of a generic map")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--all", action="store_true", help="include zero values")
    p.add_argument("--plot", help="also render a figure to this file")
    p.set_defaults(func=cmd_cocycle)

    p = sub.add_parser("retract", parents=[common, withr], help="retract deleted-join points")
    p.add_argument("input", nargs="?", default="-")
    p.set_defaults(func=cmd_retract)

    p = sub.add_parser("decide", parents=[common, withr, withd], help="decide almost r-embeddability")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.add_argument("--plot", help="also render a figure to this file")
    p.add_argument("--timings", action="store_true", help="record stage timings (breaks byte-identity)")
    p.set_defaults(func=cmd_decide)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    except MATH_ERRORS as exc:
        print(f"{parser.prog}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
