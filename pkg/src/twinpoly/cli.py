"""twinpoly command line: brute-force counts, closed forms, series and the verify suite.

Exit codes: 0 success, 1 verification mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import census, closed_form, curve, report, series, verify
from .field import FieldSizeError, field_of_order, is_prime_power, prime_powers_up_to

FORMATS = ("table", "csv", "json")


class UsageError(Exception):
    pass


def _prime_power(text: str) -> int:
    try:
        q = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if not is_prime_power(q):
        raise argparse.ArgumentTypeError(f"{q} is not a prime power")
    return q


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return n


def build_report(d: int, q: int, h: int = 1, brute: bool = True) -> report.CountReport:
    ctx = field_of_order(q)
    if not 0 < h < q:
        raise UsageError(f"--h must be a nonzero element index below q={q}")
    t = census.ShiftTuple.scalar(ctx, 0, h)
    brute_count = census.count_tuple(t, d) if brute else None
    formula = closed_form.closed_form_count(d, q, h) if d <= 3 else None
    pred = series.prediction(d, q) if d <= 3 and h == 1 else None
    count = formula if formula is not None else brute_count
    rel = None
    if pred not in (None, 0) and count is not None:
        rel = Fraction(count) / pred - 1
    return report.CountReport(d, q, tuple(t.labels()), brute_count, formula, pred, rel)


def _out(text: str):
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _single(args, rep: report.CountReport, value):
    if args.format == "table":
        _out(report.fmt_rational(value) if value is not None else "-")
    else:
        _out(report.emit([rep], args.format))


def cmd_count(args) -> int:
    rep = build_report(args.d, args.q, args.h, brute=True)
    _single(args, rep, rep.brute_count)
    return 0


def cmd_formula(args) -> int:
    if args.d > 3:
        raise UsageError("closed forms exist only for d <= 3")
    if args.d == 2 and args.h != 1:
        raise UsageError("the degree-2 formula covers only the shift (0, 1)")
    rep = build_report(args.d, args.q, args.h, brute=False)
    _single(args, rep, rep.formula_count)
    return 0


def cmd_predict(args) -> int:
    if args.d > 3:
        raise UsageError("predictions are tabulated for d <= 3")
    qs = [args.q] if args.q else prime_powers_up_to(args.q_max)
    reps = [build_report(args.d, q, 1, brute=False) for q in qs if args.d > 1 or q >= 2]
    _out(report.emit(reps, args.format))
    return 0


def cmd_table(args) -> int:
    ds = [args.d] if args.d else [1, 2, 3]
    if any(d > 3 for d in ds):
        raise UsageError("the table covers d <= 3")
    qs = [args.q] if args.q else prime_powers_up_to(args.q_max)
    reps = [build_report(d, q, 1, brute=True) for d in ds for q in qs]
    _out(report.emit(reps, args.format))
    return 0


def cmd_series(args) -> int:
    s = series.s_series(args.order)
    if args.format == "json":
        _out(json.dumps([report.fmt_rational(c) for c in s.coeffs]))
    elif args.format == "csv":
        _out("k,coefficient\n" + "".join(f"{k},{report.fmt_rational(c)}\n" for k, c in enumerate(s.coeffs)))
    else:
        _out("".join(f"{k}: {report.fmt_rational(c)}\n" for k, c in enumerate(s.coeffs)))
    return 0


def cmd_curve(args) -> int:
    ctx = field_of_order(args.q)
    if ctx.p == 3:
        raise UsageError("the curve has bad reduction in characteristic 3")
    hs = [args.h] if args.h_given else curve.cube_class_representatives(ctx)
    rows = []
    for h in hs:
        if not 0 < h < ctx.q:
            raise UsageError(f"--h must be a nonzero element index below q={ctx.q}")
        rec = curve.trace_record(ctx, h)
        rows.append({"q": ctx.q, "h": h, "points": rec.points, "a": rec.a,
                     "a2_over_q": report.fmt_rational(rec.c_sq)})
    if args.format == "json":
        _out(json.dumps(rows, indent=2))
    elif args.format == "csv":
        _out("q,h,points,a,a2_over_q\n" + "".join(
            f"{r['q']},{r['h']},{r['points']},{r['a']},{r['a2_over_q']}\n" for r in rows))
    else:
        _out("".join(f"q={r['q']} h={r['h']} points={r['points']} a={r['a']} "
                     f"a^2/q={r['a2_over_q']}\n" for r in rows))
    return 0


def cmd_average(args) -> int:
    q = args.q
    avg = closed_form.average_pi3(q)
    counts = census.count_all_scalar_shifts(field_of_order(q), 3)
    brute = Fraction(sum(counts.values()), q - 1)
    if args.format == "json":
        _out(json.dumps({"q": q, "formula": report.fmt_rational(avg), "brute": report.fmt_rational(brute)}))
    elif args.format == "csv":
        _out(f"q,formula,brute\n{q},{report.fmt_rational(avg)},{report.fmt_rational(brute)}\n")
    else:
        _out(f"{report.fmt_rational(avg)}")
    return 0 if avg == brute else 1


def cmd_satotate(args) -> int:
    avg = series.sato_tate_average(args.p_max)
    if args.format == "table":
        _out(f"{float(avg):.6g}")
    elif args.format == "json":
        _out(json.dumps({"p_max": args.p_max, "average": report.fmt_rational(avg)}))
    else:
        _out(f"p_max,average\n{args.p_max},{report.fmt_rational(avg)}\n")
    return 0


def cmd_verify(args) -> int:
    results = verify.run(q_max=args.q_max_verify, geometry_suite=args.geometry)
    if args.format == "json":
        _out(json.dumps([{"check": r.name, "ok": r.ok, "detail": r.detail} for r in results], indent=2))
    elif args.format == "csv":
        _out("check,ok,detail\n" + "".join(f"{r.name},{int(r.ok)},\"{r.detail}\"\n" for r in results))
    else:
        for r in results:
            _out(r.line())
    return 0 if all(r.ok for r in results) else 1


COMMANDS = {
    "count": cmd_count, "formula": cmd_formula, "predict": cmd_predict, "series": cmd_series,
    "curve": cmd_curve, "average": cmd_average, "table": cmd_table, "satotate": cmd_satotate,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="twinpoly", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="table")
    common.add_argument("--seed", type=int, default=None, help="reserved; every computation is deterministic")
    common.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="brute-force pi(d, q; (0, h))")
    p.add_argument("--q", type=_prime_power, required=True)
    p.add_argument("--d", type=_positive, required=True)
    p.add_argument("--h", type=int, default=1)

    p = sub.add_parser("formula", parents=[common], help="closed form for pi(d, q; (0, h)), d <= 3")
    p.add_argument("--q", type=_prime_power, required=True)
    p.add_argument("--d", type=_positive, required=True)
    p.add_argument("--h", type=int, default=1)

    for name, helptext in (("predict", "singular-series prediction and error term"),
                           ("table", "brute force, formula, prediction and error per q")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("--q", type=_prime_power)
        g.add_argument("--q-max", type=int, dest="q_max")
        p.add_argument("--d", type=_positive, required=(name == "predict"))

    p = sub.add_parser("series", parents=[common], help="coefficients of S(u) through u^order")
    p.add_argument("--order", type=int, required=True)

    p = sub.add_parser("curve", parents=[common], help="point counts of h X^3 = Y(Y - 1)")
    p.add_argument("--q", type=_prime_power, required=True)
    p.add_argument("--h", type=int, default=None)

    p = sub.add_parser("average", parents=[common], help="mean of pi(3, q; (0, h)) over h")
    p.add_argument("--q", type=_prime_power, required=True)

    p = sub.add_parser("satotate", parents=[common], help="mean of a_p^2 / p over p = 1 mod 3")
    p.add_argument("--p-max", type=int, dest="p_max", default=20000)

    p = sub.add_parser("verify", parents=[common], help="run every cross-check")
    p.add_argument("--q-max", type=int, dest="q_max_verify", default=None)
    p.add_argument("--geometry", action="store_true", help="add the extended geometry suite")
    return ap


def _validate(args):
    if args.command == "series" and args.order < 0:
        raise UsageError("--order must be >= 0")
    if args.command == "curve":
        args.h_given = args.h is not None
    if args.command == "average" and args.q < 3:
        raise UsageError("average needs q >= 3")
    if args.command == "satotate" and args.p_max < 7:
        raise UsageError("--p-max must be >= 7")
    if getattr(args, "q_max", None) is not None and args.q_max < 2:
        raise UsageError("--q-max must be >= 2")


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        _validate(args)
        return COMMANDS[args.command](args)
    except (UsageError, FieldSizeError, ValueError) as exc:
        print(f"twinpoly {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
