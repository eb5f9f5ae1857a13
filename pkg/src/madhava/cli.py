"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile
from fractions import Fraction
from typing import Optional, Sequence

from . import hayashi, series, sthaulya
from .correction import convergent
from .exactnum import FixedDecimal
from .polyalg import parse_poly, product
from .published import (
    DENOMINATOR_FACTORS,
    SATURATION_LIMIT,
    TABLE1,
    TABLE2,
    displayed_matches,
    is_saturated,
)

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2
DEFAULT_DIGITS = series.DEFAULT_SCALE


class UsageError(Exception):
    pass


class Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact number: {text!r}") from None


def _integer(text: str) -> int:
    q = _fraction(text)
    if q.denominator != 1:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    return q.numerator


def _positive(text: str) -> int:
    n = _integer(text)
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return n


def _correction(text: str) -> Optional[int]:
    if text == "none":
        return None
    k = _integer(text)
    if not 1 <= k <= 5:
        raise argparse.ArgumentTypeError("correction must be none or 1..5")
    return k


def write_atomic(path: str, text: str) -> None:
    """Write via a temporary file in the target directory, then rename."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=".csv")
    try:
        with os.fdopen(fd, "w", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def underline(value: str, reference: str) -> str:
    """Carets under the leading characters of ``value`` that agree with ``reference``."""
    count = 0
    for a, b in zip(value, reference):
        if a != b:
            break
        count += 1
    return "^" * count


# -- rendering ----------------------------------------------------------------

def render_table1(rows, reference: str) -> list[str]:
    lines = ["n     pi estimate (F3 correction)"]
    for n, value in rows:
        text = str(value)
        lines.append(f"{n:<5} {text}")
        lines.append(" " * 6 + underline(text, reference))
    return lines


def render_table2(rows) -> list[str]:
    head = ["n", "E(n)", "E1(n)", "E2(n)", "E3(n)"]
    lines = [f"{head[0]:>6}  " + "  ".join(f"{h:>14}" for h in head[1:])]
    for row in rows:
        cells = "  ".join(f"{e.to_scientific(8):>14}" for e in row.errors)
        lines.append(f"{row.n:>6}  {cells}")
    return lines


def render_report(report: sthaulya.PropertyReport) -> list[str]:
    lines = [f"k={report.order}"]
    for c in report.checks:
        status = "PASS" if c.passed else "FAIL"
        lines.append(f"  {c.index}  {c.name:<54} {status}  {c.witness}")
    return lines


def render_reconstruction(rep: hayashi.ReconstructionReport) -> list[str]:
    width = max(6, max(len(str(q)) for row in rep.quotients for q in row) + 1)
    lines = [f"assumed pi = {rep.pi_assumed}"]
    lines.append("S(n):   " + "  ".join(f"S({n})={s}" for n, s in zip(rep.ns, rep.s_values)))
    lines.append(f"{'level':<8}" + "".join(f"{'n=' + str(n):>{width}}" for n in rep.ns))
    for level, row in enumerate(rep.quotients, start=1):
        cells = "".join(f"{'-' if q is None else q:>{width}}" for q in row)
        lines.append(f"{level:<8}{cells}")
    for level, pat in enumerate(rep.patterns, start=1):
        lines.append(f"level {level} pattern: " + (pat.render() if pat else "not found"))
    if rep.anomalies:
        for level, n, q in rep.anomalies:
            lines.append(f"anomaly: level {level}, n={n}, quotient {q}")
    else:
        lines.append("anomalies: none")
    for depth, term in enumerate(rep.implied, start=1):
        lines.append(f"implied depth {depth}: {term.render('n')}")
    return lines


def fig1_csv(rows) -> str:
    out = ["n," + ",".join(series.FIG1_SERIES)]
    for n, logs in rows:
        out.append(f"{n}," + ",".join(f"{x:.3f}" for x in logs))
    return "\n".join(out) + "\n"


# -- commands -----------------------------------------------------------------

def cmd_pi(args, out) -> int:
    if args.correction is None:
        spec = series.SeriesSpec("leibniz", args.terms, args.digits)
    else:
        spec = series.SeriesSpec("leibniz_corrected", args.terms, args.digits, args.correction)
    res = series.partial_sum(spec)
    print(res.value, file=out)
    print(f"rounding bound: {res.rounding_bound.to_scientific(3)} (+ half an output ulp)", file=out)
    return EXIT_OK


def table1_rows(digits: int = DEFAULT_DIGITS):
    return [(n, series.partial_sum(series.SeriesSpec("leibniz_corrected", n, digits, 3)).value) for n in TABLE1]


def table2_rows():
    return series.error_table(list(TABLE2))


def table1_mismatches(rows) -> list[int]:
    return [n for n, value in rows if str(value) != TABLE1[n]]


def table2_mismatches(rows) -> list[tuple[int, int, str, str]]:
    """(n, column, printed, ours) for each disagreeing entry."""
    bad = []
    for row in rows:
        for col, (printed, ours) in enumerate(zip(TABLE2[row.n], row.errors)):
            exact = ours.to_fraction()
            if is_saturated(printed):
                ok = abs(exact) < SATURATION_LIMIT
            else:
                ok = displayed_matches(exact, printed)
            if not ok:
                bad.append((row.n, col, printed, ours.to_scientific(8)))
    return bad


def cmd_table(args, out) -> int:
    if args.which == 1:
        rows = table1_rows(args.digits)
        reference = str(series.reference_pi(args.digits + 5))
        for line in render_table1(rows, reference):
            print(line, file=out)
        bad = table1_mismatches(rows) if args.digits == DEFAULT_DIGITS else []
        for n in bad:
            print(f"mismatch n={n}: printed {TABLE1[n]}", file=out)
    else:
        rows = table2_rows()
        for line in render_table2(rows):
            print(line, file=out)
        bad = table2_mismatches(rows)
        cols = ["E", "E1", "E2", "E3"]
        for n, col, printed, ours in bad:
            print(f"mismatch n={n} {cols[col]}: printed {printed}, exact {ours}", file=out)
    print(f"verification: {'OK' if not bad else f'{len(bad)} mismatch(es)'}", file=out)
    return EXIT_VERIFY if bad else EXIT_OK


def cmd_sthaulya(args, out) -> int:
    var = "p"
    if args.family:
        if args.param is None:
            raise UsageError("--family needs --param")
        expr = sthaulya.family_sthaulya(args.family, args.param)
    else:
        if args.k is None:
            raise UsageError("give --k or --family")
        expr = sthaulya.sthaulya_of(args.k).expr
    if args.at is not None:
        if args.at < 3 or args.at % 2 == 0:
            raise UsageError("--at must be an odd integer >= 3")
        print(expr(args.at), file=out)
    else:
        print(expr.render(var), file=out)
    return EXIT_OK


def cmd_convergent(args, out) -> int:
    term = convergent(args.k)
    print(f"f_{args.k}(p) = {term.p_form.render('p')}", file=out)
    print(f"F_{args.k}(n) = {term.n_form.render('n')}", file=out)
    return EXIT_OK


def cmd_props(args, out) -> int:
    ok = True
    for k in range(1, args.max_k + 1):
        report = sthaulya.verify_properties(k)
        ok &= report.passed
        for line in render_report(report):
            print(line, file=out)
        if k in DENOMINATOR_FACTORS:
            rebuilt = product([parse_poly(f) for f in DENOMINATOR_FACTORS[k]])
            match = rebuilt == report_denominator(k)
            ok &= match
            print(f"  published factorisation {'reconstructs' if match else 'DOES NOT reconstruct'} D_{k}",
                  file=out)
    print(f"verification: {'OK' if ok else 'FAILED'}", file=out)
    return EXIT_OK if ok else EXIT_VERIFY


def report_denominator(k: int):
    return sthaulya.sthaulya_of(k).denominator


def cmd_series(args, out) -> int:
    k = args.correction if args.id == "leibniz_corrected" else None
    if args.id == "leibniz_corrected" and k is None:
        raise UsageError("leibniz_corrected needs --correction 1..5")
    spec = series.SeriesSpec(args.id, args.terms, args.digits, k)
    res = series.partial_sum(spec, with_error=True)
    print(res.value, file=out)
    print(f"error vs reference: {res.error.to_scientific(8)}", file=out)
    print(f"rounding bound: {res.rounding_bound.to_scientific(3)} (+ half an output ulp)", file=out)
    if args.csv:
        lines = ["n,estimate,error"]
        for n in range(1, args.terms + 1):
            r = series.partial_sum(series.SeriesSpec(args.id, n, args.digits, k), with_error=True)
            lines.append(f"{n},{r.value},{r.error.to_scientific(8)}")
        write_atomic(args.csv, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_fig1(args, out) -> int:
    if args.nmax < 2:
        raise UsageError("--nmax must be at least 2")
    text = fig1_csv(series.fig1_data(args.nmax, args.step))
    if args.csv:
        write_atomic(args.csv, text)
    else:
        out.write(text)
    return EXIT_OK


def cmd_hayashi(args, out) -> int:
    if args.pi <= 0:
        raise UsageError("--pi must be positive")
    if args.nmax < 3:
        raise UsageError("--nmax must be at least 3")
    rep = hayashi.reconstruct(args.pi, args.nmax, args.depth)
    for line in render_reconstruction(rep):
        print(line, file=out)
    return EXIT_OK


def cmd_bounds(args, out) -> int:
    if args.n < 2:
        raise UsageError("--n must be at least 2")
    b = sthaulya.error_bounds(args.k, args.n)
    exact_sum = series.corrected_partial_sum(convergent(args.k).p_form, args.n)
    scale = 40
    pi = series.reference_pi(scale)
    err = abs(pi.to_fraction() / 4 - exact_sum)
    print(f"lower        = {b.lower}", file=out)
    print(f"upper        = {b.upper}", file=out)
    print(f"simple_upper = {b.simple_upper}", file=out)
    print(f"|pi/4 - s_n| = {FixedDecimal.from_rational(err, scale).to_scientific(8)}", file=out)
    ok = b.lower < err < b.upper and err <= b.simple_upper
    print(f"verification: {'OK' if ok else 'FAILED'}", file=out)
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_putumana(args, out) -> int:
    check = series.putumana_identity()
    print(f"lhs = {check.lhs.render('n')}", file=out)
    print(f"rhs = {check.rhs.render('n')}", file=out)
    print(f"verification: {'OK' if check.holds else 'FAILED'}", file=out)
    return EXIT_OK if check.holds else EXIT_VERIFY


def build_parser() -> Parser:
    parser = Parser(prog="madhava", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pi", help="corrected truncated series estimate of pi")
    p.add_argument("--terms", type=_positive, required=True)
    p.add_argument("--correction", type=_correction, default=None)
    p.add_argument("--digits", type=_positive, default=DEFAULT_DIGITS)
    p.set_defaults(func=cmd_pi)

    p = sub.add_parser("table", help="reproduce the numeric tables")
    p.add_argument("--which", type=_integer, choices=(1, 2), required=True)
    p.add_argument("--digits", type=_positive, default=DEFAULT_DIGITS)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("sthaulya", help="inaccuracy measure of a correction term")
    p.add_argument("--k", type=_positive)
    p.add_argument("--at", type=_integer)
    p.add_argument("--family", choices=sorted(sthaulya.FAMILIES))
    p.add_argument("--param", type=_fraction)
    p.set_defaults(func=cmd_sthaulya)

    p = sub.add_parser("convergent", help="k-th correction term in p and n")
    p.add_argument("--k", type=_positive, required=True)
    p.set_defaults(func=cmd_convergent)

    p = sub.add_parser("props", help="check the denominator properties")
    p.add_argument("--max-k", type=_positive, required=True)
    p.set_defaults(func=cmd_props)

    p = sub.add_parser("series", help="evaluate a catalogued series")
    p.add_argument("--id", choices=series.SERIES_IDS, required=True)
    p.add_argument("--terms", type=_positive, required=True)
    p.add_argument("--digits", type=_positive, default=DEFAULT_DIGITS)
    p.add_argument("--correction", type=_correction, default=None)
    p.add_argument("--csv")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("fig1", help="log-error data for the plain and transformed series")
    p.add_argument("--nmax", type=_integer, required=True)
    p.add_argument("--step", type=_positive, default=1)
    p.add_argument("--csv")
    p.set_defaults(func=cmd_fig1)

    p = sub.add_parser("hayashi", help="Euclidean peeling reconstruction")
    p.add_argument("--pi", type=_fraction, required=True)
    p.add_argument("--nmax", type=_integer, default=5)
    p.add_argument("--depth", type=_positive, default=3)
    p.set_defaults(func=cmd_hayashi)

    p = sub.add_parser("bounds", help="two-sided error bounds for a corrected partial sum")
    p.add_argument("--k", type=_integer, choices=(1, 2, 3, 4, 5), required=True)
    p.add_argument("--n", type=_integer, required=True)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("putumana-verify", help="check the pairing identity symbolically")
    p.set_defaults(func=cmd_putumana)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (UsageError, ValueError) as exc:
        print(f"madhava {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
