"""Command-line front end: ``certrig <subcommand> [flags]``."""

from __future__ import annotations

import argparse
import csv
import io
import sys
from fractions import Fraction
from typing import List, Optional

from . import altschemes, pi_engine, piecewise, pointwise, verify
from .errors import CertrigError, ParseError
from .exactnum import format_fixed, parse_rational, pow10


def _rational(s: str) -> Fraction:
    try:
        return parse_rational(s)
    except ParseError as e:
        raise argparse.ArgumentTypeError(str(e))


def _int_list(s: str) -> List[int]:
    try:
        return [int(x) for x in s.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {s!r}")


def _positive_int(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _echo(v) -> str:
    if isinstance(v, list):
        return ",".join(str(x) for x in v)
    return str(v)


def _header(name: str, args: argparse.Namespace, skip=("cmd", "handler")) -> str:
    parts = [f"{k}={_echo(v)}" for k, v in vars(args).items() if k not in skip and v is not None]
    return f"# {name} " + " ".join(parts)


def _digits(args) -> int:
    return args.digits if args.digits is not None else args.r + 2


def _point(func):
    def handler(args, out) -> None:
        print(_header(args.cmd, args), file=out)
        print(format_fixed(func(args.y, args.r), _digits(args)), file=out)
    return handler


def cmd_sin_pi_over_k(args, out) -> None:
    print(_header(args.cmd, args), file=out)
    print(format_fixed(pointwise.sin_pi_over_k(args.k, args.r), _digits(args)), file=out)


def cmd_reduce(args, out) -> None:
    red = pointwise.reduce(args.y, args.r)
    print(_header(args.cmd, args), file=out)
    print(f"m = {red.m}", file=out)
    print(f"p' digits = {red.digits}", file=out)
    print(f"p' = {format_fixed(red.pprime, red.digits - 1)}", file=out)
    print(f"k0 = {red.k0}", file=out)
    print(f"n = {red.n}", file=out)
    print(f"t = {format_fixed(red.t, args.r + 2)}", file=out)


def cmd_piecewise(args, out) -> None:
    build = piecewise.piecewise_sin if args.func == "sin" else piecewise.piecewise_cos
    approx = build(args.a, args.b, args.r)
    if args.out == "json":
        print(approx.dumps(), file=out)
        return
    print(_header(args.cmd, args), file=out)
    print(f"{len(approx)} pieces (degree {approx.pieces[0].poly.degree}, m = {approx.m_global})", file=out)
    for p in approx.pieces:
        print(
            f"[{format_fixed(p.lo, 10)}, {format_fixed(p.hi, 10)}]  "
            f"center={format_fixed(p.center, 10)} sign={p.sign:+d} kind={p.kind}",
            file=out,
        )
        if args.expand:
            expanded = p.poly.shifted(p.center)
            coeffs = [format_fixed(p.sign * c, 10) for c in expanded.coeffs]
            print("    coeffs (ascending): " + ", ".join(coeffs), file=out)


def cmd_plot(args, out) -> None:
    build = piecewise.piecewise_sin if args.func == "sin" else piecewise.piecewise_cos
    approx = build(args.a, args.b, args.r)
    digits = _digits(args)
    print(_header(args.cmd, args), file=out)
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["x", "F(x)"])
    for x in verify.sample_points(approx.a, approx.b, args.samples):
        w.writerow([format_fixed(x, digits), format_fixed(approx(x), digits)])


def cmd_degree_table(args, out) -> None:
    rows = altschemes.degree_table(args.rs)
    if args.out == "csv":
        print(_header(args.cmd, args), file=out)
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["r", "n_eps1", "3n_eps1", "n_eps2", "2n_eps2", "n_eps0"])
        w.writerows(rows)
        return
    print(f"<!-- {_header(args.cmd, args)[2:]} -->", file=out)
    print("| r | eps1(0.8,n) n | 3n | eps2(0.8,n) n | 2n | eps0(n) n |", file=out)
    print("|---|---|---|---|---|---|", file=out)
    for row in rows:
        print("| " + " | ".join(str(v) for v in row) + " |", file=out)


def cmd_pi(args, out) -> None:
    print(_header(args.cmd, args), file=out)
    if args.half:
        value = pi_engine.valp(args.digits).value
    else:
        value = pi_engine.pi_digits(args.digits)
    print(format_fixed(value, args.digits - 1), file=out)


def cmd_verify(args, out) -> None:
    build = piecewise.piecewise_sin if args.func == "sin" else piecewise.piecewise_cos
    approx = build(args.a, args.b, args.r)
    worst = verify.max_error_scan(approx, args.samples, jobs=args.jobs)
    ok = worst < pow10(-args.r)
    print(_header(args.cmd, args), file=out)
    print(f"pieces = {len(approx)}", file=out)
    print(f"max error = {float(worst):.3e}", file=out)
    print(f"{'PASS' if ok else 'FAIL'}: max error {'<' if ok else '>='} 1e-{args.r}", file=out)
    if not ok:
        raise CertrigError("observed error exceeds the requested accuracy")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="certrig", description="Certified sin/cos approximation.")
    sub = parser.add_subparsers(dest="cmd", required=True)

    def add(name, handler, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(handler=handler)
        return p

    for name, func, help_ in [
        ("sin", pointwise.sin_point, "sin(y) to within 10^-r"),
        ("cos", pointwise.cos_point, "cos(y) to within 10^-r"),
        ("sin-triple", altschemes.sin_point_triple, "sin(y) via the triple-angle scheme"),
    ]:
        p = add(name, _point(func), help_)
        p.add_argument("--y", type=_rational, required=True)
        p.add_argument("--r", type=_positive_int, required=True)
        p.add_argument("--digits", type=int)

    p = add("sin-pi-over-k", cmd_sin_pi_over_k, "sin(pi/k) to within 10^-r")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=_positive_int, required=True)
    p.add_argument("--digits", type=int)

    p = add("reduce", cmd_reduce, "show the argument reduction for y")
    p.add_argument("--y", type=_rational, required=True)
    p.add_argument("--r", type=_positive_int, required=True)

    for name, handler, help_ in [
        ("piecewise", cmd_piecewise, "build a piecewise approximant"),
        ("plot", cmd_plot, "sample a piecewise approximant as CSV"),
        ("verify", cmd_verify, "scan a piecewise approximant against the oracle"),
    ]:
        p = add(name, handler, help_)
        p.add_argument("--a", type=_rational, required=True)
        p.add_argument("--b", type=_rational, required=True)
        p.add_argument("--r", type=_positive_int, required=True)
        p.add_argument("--func", choices=piecewise.FUNCS, default="sin")
        if name == "piecewise":
            p.add_argument("--out", choices=("json", "summary"), default="summary")
            p.add_argument("--expand", action="store_true", help="print coefficients expanded in x")
        else:
            p.add_argument("--samples", type=int, required=True)
        if name == "plot":
            p.add_argument("--out", choices=("csv",), default="csv")
            p.add_argument("--digits", type=int)
        if name == "verify":
            p.add_argument("--jobs", type=_positive_int, default=1)

    p = add("degree-table", cmd_degree_table, "minimal degrees per approximation scheme")
    p.add_argument("--rs", type=_int_list, default=[10, 20, 50, 100, 200])
    p.add_argument("--out", choices=("md", "csv"), default="md")

    p = add("pi", cmd_pi, "pi (or pi/2 with --half) to n significant digits")
    p.add_argument("--digits", type=int, required=True)
    p.add_argument("--half", action="store_true")

    for p in sub.choices.values():
        p.add_argument("--output", help="write to this file instead of stdout")
    return parser


_RATIONAL_FLAGS = ("--y", "--a", "--b")


def _glue_negative(argv: List[str]) -> List[str]:
    """argparse reads ``-7/3`` as a flag; attach it to the preceding option."""
    out: List[str] = []
    it = iter(argv)
    for tok in it:
        if tok in _RATIONAL_FLAGS:
            nxt = next(it, None)
            if nxt is not None and nxt.startswith("-") and nxt[1:2].isdigit():
                out.append(f"{tok}={nxt}")
                continue
            out.append(tok)
            if nxt is not None:
                out.append(nxt)
            continue
        out.append(tok)
    return out


def main(argv: Optional[List[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_glue_negative(argv))
    cache_file = pi_engine.cache_path_from_env()
    if cache_file:
        pi_engine.load_cache(cache_file)
    before = pi_engine.cached_digits()
    buf = io.StringIO()
    output = args.output
    del args.output
    status = 0
    try:
        args.handler(args, buf)
    except CertrigError as e:
        print(f"certrig: error: {e}", file=sys.stderr)
        status = 1
    if output:
        with open(output, "w") as fh:
            fh.write(buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())
    if status:
        return status
    if cache_file and pi_engine.cached_digits() > before:
        pi_engine.save_cache(cache_file)
    return 0


if __name__ == "__main__":
    sys.exit(main())
