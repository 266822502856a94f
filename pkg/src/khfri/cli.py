"""``fri`` command line: bench, analyze, interpolate, curves.

Exit codes: 0 success / all expectations met, 1 benchmark failures,
2 usage or input errors.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bench import FORMATTERS, METHODS, curves_csv, embedded_corpus, export_curves, load_suite, run_benchmark
from .bench.runner import case_label
from .errors import FRIError
from .khcore import alpha_grid, interpolate
from .linearity import analyze

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _positive(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not v > 0:
        raise argparse.ArgumentTypeError(f"must be > 0: {text!r}")
    return v


def _nonneg(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0: {text!r}")
    return v


def _add_source(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--case", metavar="ID", help="case id from the built-in corpus (X1..X4, Y1s1..Y1s3, Y2..Y4)")
    g.add_argument("--file", metavar="PATH", help="suite JSON file; every case in it is processed")


def _select(args) -> list:
    if args.file:
        return load_suite(args.file)
    corpus = {c.id: c for c in embedded_corpus()}
    if args.case not in corpus:
        raise UsageError(f"unknown case {args.case!r}; known: {', '.join(corpus)}")
    return [corpus[args.case]]


def _g(x: float) -> str:
    s = f"{x:.6g}"
    return "0" if s == "-0" else s


def _f4(x: float | None) -> str:
    if x is None:
        return "NAN"
    s = f"{x:.4f}"
    return "0.0000" if s == "-0.0000" else s


def cmd_bench(args, out) -> int:
    if args.method not in METHODS:
        raise UsageError(f"unknown method {args.method!r}; available: {', '.join(sorted(METHODS))}")
    if args.suite:
        cases, name = load_suite(args.suite), Path(args.suite).name
    else:
        cases, name = embedded_corpus(), "paper_corpus (embedded)"
    report = run_benchmark(cases, tol_scale=args.tol_scale, method=args.method, suite=name)
    out.write(FORMATTERS[args.format](report))
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_analyze(args, out) -> int:
    for case in _select(args):
        rep = analyze(case.problem, epsilon=args.epsilon)
        out.write(f"case {case.id}" + (f"  ({case.provenance})" if case.provenance else "") + "\n")
        poly = ", ".join(f"{f.side} {'yes' if f.polynomial else 'no'}" for f in rep.flanks)
        out.write(f"  linearity cases: {case_label(rep.case_set)}\n")
        out.write(f"  polynomial flanks (c9 = 0): {poly}\n")
        for f in rep.flanks:
            co = f.coefficients
            out.write(f"  {f.side} flank\n")
            out.write("    c1..c10: " + " ".join(_g(v) for v in co.c) + "\n")
            out.write("    D1..D3:  " + " ".join(_g(v) for v in co.d) + "\n")
            out.write(f"    chord: {_f4(f.chord.v0)} -> {_f4(f.chord.v1)}\n")
            out.write(f"    max deviation: {f.max_deviation:.4f} at alpha {f.argmax:.4f}\n")
            signed = "" if f.error_bound_signed is None else f" (signed {_f4(f.error_bound_signed)})"
            out.write(f"    error bound E: {_f4(f.error_bound)}{signed}\n")
            out.write(
                f"    Q({f.epsilon:g}) = {_g(f.slope_q)}; slope check: {int(f.slope_check)}"
                f" ({'within' if f.slope_check else 'exceeds'} eps = {f.epsilon:g})\n"
            )
            verdict = lambda ok: "linear" if ok else "nonlinear"  # noqa: E731
            out.write(
                f"    verdicts: Q-test {verdict(f.slope_check)}, amplitude {verdict(f.amplitude_linear)},"
                f" max-deviation {verdict(f.is_linear)}\n"
            )
        findings = rep.findings
        out.write("  findings: " + ("; ".join(findings) if findings else "none") + "\n")
    out.write("note: slope check is the two-sided test |N| <= eps*|c9*c10*(c9+c10)|, N = D3*c9^2 - D2*c9*c10 + D1*c10^2\n")
    return EXIT_OK


def cmd_interpolate(args, out) -> int:
    grid = alpha_grid(args.step)
    for case in _select(args):
        conc = interpolate(case.problem, grid)
        out.write(f"case {case.id}\n")
        out.write("  B* = [" + " ".join(_f4(v) for v in conc.characteristic) + "]\n")
        out.write(f"  {'alpha':>6}  {'inf':>10}  {'sup':>10}\n")
        for cut in conc.cuts:
            flag = "  abnormal (inf > sup)" if not cut.valid else ""
            out.write(f"  {cut.level:6.3f}  {cut.lo:10.4f}  {cut.hi:10.4f}{flag}\n")
        if not conc.nested:
            out.write("  note: cuts are not nested; the assembled conclusion is not convex\n")
    return EXIT_OK


def cmd_curves(args, out) -> int:
    cases = _select(args)
    chunks = []
    for case in cases:
        text = curves_csv(export_curves(case.problem, args.step), args.decimals, args.delta_decimals)
        if len(cases) > 1:
            text = f"# {case.id}\n" + text
        chunks.append(text)
    text = "".join(chunks)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8", newline="\n")
    else:
        out.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fri", description="KH fuzzy rule interpolation and PWL benchmark")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bench", help="score a benchmark suite against its expected values")
    p.add_argument("--suite", metavar="PATH", help="suite JSON file (default: built-in corpus)")
    p.add_argument("--method", default="KH", help="interpolation method (default: KH)")
    p.add_argument("--tol-scale", type=_positive, default=1.0, metavar="S", help="multiply every tolerance by S")
    p.add_argument("--format", choices=sorted(FORMATTERS), default="text")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("analyze", help="linearity report of one or more problems")
    _add_source(p)
    p.add_argument("--epsilon", type=_nonneg, default=0.0, help="linearity-error threshold for the slope check")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("interpolate", help="print conclusion alpha-cuts")
    _add_source(p)
    p.add_argument("--step", type=_positive, default=0.1, help="alpha grid step (default 0.1)")
    p.set_defaults(func=cmd_interpolate)

    p = sub.add_parser("curves", help="CSV of real vs chord flank values per alpha level")
    _add_source(p)
    p.add_argument("--step", type=_positive, default=0.1, help="alpha step, at most 0.5 (default 0.1)")
    p.add_argument("--out", metavar="PATH", help="write CSV here instead of stdout")
    p.add_argument("--decimals", type=int, default=4, help="decimals for alpha and flank values")
    p.add_argument("--delta-decimals", type=int, default=3, help="decimals for deviation columns")
    p.set_defaults(func=cmd_curves)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (UsageError, FRIError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"fri: error: {msg}", file=sys.stderr)
        return EXIT_USAGE
