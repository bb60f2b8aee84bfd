"""Command-line front end: ``knormal {count,spectrum,mean,decompose,bounds,selftest}``.

Every command prints a table, CSV or JSON. Rationals are written as
``num/den`` in CSV and as ``{"num": "...", "den": "..."}`` in JSON, with
separate approximate float columns. Exit status is 0 only when every
verification the command performs passes; usage errors exit with 2.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections.abc import Sequence
from fractions import Fraction

from .fqpoly import PolySyntaxError, parse_poly
from .gf import FieldBudgetError, FieldSpec, make_base_field, make_field
from .meanvalue import (
    DEFAULT_G_BUDGET,
    BudgetError,
    approx,
    bound_check_q0,
    corollary_check,
    corollary_exponent,
    decompose,
    density_series,
    ladder,
)
from .spectrum import (
    DEFAULT_ELEMENT_BUDGET,
    OracleBudgetError,
    count_terms,
    full_spectrum,
    oracle_spectrum,
)

DENSITY_COLUMNS = [
    "n", "count", "density_num", "density_den", "avg_num", "avg_den", "density_approx", "avg_approx",
]
LADDER_COLUMNS = ["t", "avg_num", "avg_den", "diff_num", "diff_den", "avg_approx", "diff_approx"]
TERM_COLUMNS = ["G", "deg_G", "mu", "a_G", "weight_num", "weight_den"]


class UsageError(Exception):
    pass


def rational_json(x: Fraction) -> dict[str, str]:
    return {"num": str(x.numerator), "den": str(x.denominator)}


def parse_rational(obj) -> Fraction:
    """Inverse of :func:`rational_json`; also accepts ``"num/den"`` strings."""
    if isinstance(obj, dict):
        return Fraction(int(obj["num"]), int(obj["den"]))
    return Fraction(obj)


def _csv_text(header: Sequence[str], rows: list[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _table(header: Sequence[str], rows: list[Sequence]) -> str:
    cells = [list(map(str, header))] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _field_from_args(args) -> FieldSpec:
    try:
        if args.p is not None:
            return make_base_field(args.p, args.m or 1)
        if args.q is None:
            raise UsageError("give the field as --q Q or --p P [--m M]")
        return make_field(args.q)
    except FieldBudgetError as exc:
        raise UsageError(str(exc)) from exc
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _positive(name: str, value: int | None) -> int:
    if value is None:
        raise UsageError(f"--{name} is required")
    if value < 1:
        raise UsageError(f"--{name} must be a positive integer, got {value}")
    return value


# -- commands ---------------------------------------------------------------


def cmd_count(args) -> tuple[str, int]:
    F = _field_from_args(args)
    n = _positive("n", args.n)
    if args.k is None:
        raise UsageError("--k is required")
    terms = count_terms(F, n, args.k)
    total = sum(phi for _, phi in terms)
    if args.format == "json":
        doc = {
            "q": F.q, "n": n, "k": args.k, "count": str(total),
            "terms": [{"F": str(D.poly), "phi": str(phi)} for D, phi in terms],
        }
        return json.dumps(doc, indent=2) + "\n", 0
    rows = [[str(D.poly), D.degree, phi] for D, phi in terms]
    if args.format == "csv":
        return _csv_text(["F", "deg_F", "phi_quotient"], rows), 0
    head = f"k-normal elements of F_{F.q}^{n} over F_{F.q}, k = {args.k}: {total}\n"
    if rows:
        head += _table(["F", "deg F", "Phi_q((X^n-1)/F)"], rows)
    return head, 0


def cmd_spectrum(args) -> tuple[str, int]:
    F = _field_from_args(args)
    n = _positive("n", args.n)
    spec = full_spectrum(F, n)
    verified = None
    if args.verify:
        try:
            verified = oracle_spectrum(F, n, budget=args.budget_elems) == spec
        except OracleBudgetError as exc:
            raise UsageError(f"{exc} (raise --budget-elems)") from exc
    status = 0 if verified in (None, True) else 1
    if args.format == "json":
        doc = {"q": F.q, "n": n, "counts": [str(c) for c in spec.counts], "verified": verified}
        return json.dumps(doc, indent=2) + "\n", status
    rows = [[k, c] for k, c in enumerate(spec.counts)]
    if args.format == "csv":
        return _csv_text(["k", "count"], rows), status
    out = f"k-normal spectrum of F_{F.q}^{n}, total {sum(spec.counts)}\n" + _table(["k", "count"], rows)
    if verified is not None:
        out += "brute-force oracle: " + ("match\n" if verified else "MISMATCH\n")
    return out, status


def cmd_mean(args) -> tuple[str, int]:
    F = _field_from_args(args)
    t = _positive("t", args.t)
    if args.k is None or args.k < 0:
        raise UsageError("--k must be a nonnegative integer")
    try:
        series = density_series(F, args.k, t)
    except BudgetError as exc:
        raise UsageError(str(exc)) from exc
    series.check()
    lad = ladder(series) if args.ladder else []
    if args.format == "json":
        doc = {
            "q": F.q, "k": args.k, "t": t,
            "rows": [
                {"n": r.n, "count": str(r.count), "density": rational_json(r.density),
                 "average": rational_json(r.running_average)}
                for r in series.rows
            ],
        }
        if args.ladder:
            doc["ladder"] = [
                {"t": tp, "average": rational_json(a), "diff": None if d is None else rational_json(d)}
                for tp, a, d in lad
            ]
        return json.dumps(doc, indent=2) + "\n", 0
    if args.format == "csv":
        if args.ladder:
            rows = [
                [tp, a.numerator, a.denominator,
                 "" if d is None else d.numerator, "" if d is None else d.denominator,
                 approx(a), "" if d is None else approx(d)]
                for tp, a, d in lad
            ]
            return _csv_text(LADDER_COLUMNS, rows), 0
        rows = [
            [r.n, r.count, r.density.numerator, r.density.denominator,
             r.running_average.numerator, r.running_average.denominator,
             approx(r.density), approx(r.running_average)]
            for r in series.rows
        ]
        return _csv_text(DENSITY_COLUMNS, rows), 0
    rows = [[r.n, r.count, _frac(r.density), approx(r.running_average)] for r in series.rows]
    out = f"densities of {args.k}-normal elements, q = {F.q}\n"
    out += _table(["n", "count", "density", "A(n) (approx)"], rows)
    out += f"A({t}) = {_frac(series.average(t))}\n"
    if args.ladder:
        out += "\nladder (finite-t values, not a limit)\n"
        out += _table(
            ["t", "A(t) (approx)", "A(t) - A(t/2) (approx)"],
            [[tp, approx(a), "" if d is None else approx(d)] for tp, a, d in lad],
        )
    return out, 0


def cmd_decompose(args) -> tuple[str, int]:
    F = _field_from_args(args)
    t = _positive("t", args.t)
    if args.k is None or args.k < 0:
        raise UsageError("--k must be a nonnegative integer")
    if args.F is None:
        raise UsageError("--F is required")
    try:
        P = parse_poly(args.F, F)
    except PolySyntaxError as exc:
        raise UsageError(f"cannot use --F {args.F!r}: {exc}") from exc
    if P.degree != args.k:
        raise UsageError(f"--F {args.F} has degree {P.degree}, which is not k = {args.k}")
    if P.coeffs[0] == 0:
        raise UsageError(f"--F {args.F} has constant term zero, so it is divisible by X")
    try:
        rep = decompose(P, args.k, t, g_budget=args.budget_g)
    except BudgetError as exc:
        raise UsageError(str(exc)) from exc
    ok = rep.identity_holds and rep.majorants_hold
    status = 0 if ok else 1
    term_rows = [
        [str(T.G), T.G.degree, T.mu, T.a_G, T.weight.numerator, T.weight.denominator]
        for T in rep.terms
    ]
    if args.format == "json":
        doc = {
            "q": F.q, "F": str(P), "k": args.k, "t": t,
            "S": rational_json(rep.S), "M": rational_json(rep.M), "R": rational_json(rep.R),
            "M_star": rational_json(rep.M_star), "R_star": rational_json(rep.R_star),
            "identity_holds": rep.identity_holds, "majorants_hold": rep.majorants_hold,
            "terms": [dict(zip(TERM_COLUMNS, map(str, r))) for r in term_rows],
        }
        return json.dumps(doc, indent=2) + "\n", status
    if args.format == "csv":
        return _csv_text(TERM_COLUMNS, term_rows), status
    out = f"S_F(t) = t*M_F(t) + R_F(t) for F = {P}, t = {t}, q = {F.q}\n"
    for name, val in [("S", rep.S), ("M", rep.M), ("R", rep.R), ("M*", rep.M_star), ("R*", rep.R_star)]:
        out += f"  {name:3s}= {_frac(val)}  (~{approx(val)})\n"
    out += f"  identity: {'holds' if rep.identity_holds else 'FAILS'}; "
    out += f"|M| <= M*, |R| <= R*: {'holds' if rep.majorants_hold else 'FAILS'}\n"
    out += _table(["G", "deg", "mu", "a_G", "weight"], [[r[0], r[1], r[2], r[3], f"{r[4]}/{r[5]}"] for r in term_rows])
    return out, status


def cmd_bounds(args) -> tuple[str, int]:
    F = _field_from_args(args)
    if args.k is None or args.k < 0:
        raise UsageError("--k must be a nonnegative integer")
    if args.k == 0:
        t = _positive("t", args.t)
        try:
            bc = bound_check_q0(F, t)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        status = 0 if bc.ok else 1
        if args.format == "json":
            doc = {
                "q": F.q, "t": t, "A": rational_json(bc.A),
                "bound": None if bc.bound is None else rational_json(bc.bound),
                "bound_lo": rational_json(bc.bound_lo), "bound_hi": rational_json(bc.bound_hi),
                "ok": bc.ok, "note": bc.note,
            }
            return json.dumps(doc, indent=2) + "\n", status
        row = [t, bc.A.numerator, bc.A.denominator, _frac(bc.bound_lo), _frac(bc.bound_hi),
               approx(bc.A), approx(bc.bound_hi), bc.ok]
        header = ["t", "A_num", "A_den", "bound_lo", "bound_hi", "A_approx", "bound_approx", "ok"]
        if args.format == "csv":
            return _csv_text(header, [row]), status
        bound = _frac(bc.bound) if bc.bound is not None else f"[{approx(bc.bound_lo)}, {approx(bc.bound_hi)}]"
        out = (
            f"A({t}) = {approx(bc.A)} for q = {F.q}, against 1 - 1/sqrt(q) - 1/q = {bound}\n"
            f"  A(t) > bound: {bc.ok}  ({bc.note})\n"
        )
        return out, status
    T = _positive("T", args.T)
    rows = corollary_check(F, args.k, T)
    status = 0 if all(r.ok for r in rows) else 1
    e = corollary_exponent(F.p, args.k)
    if args.format == "json":
        doc = {
            "q": F.q, "k": args.k, "T": T, "p": F.p, "t": e,
            "rows": [{"u": r.u, "n": r.n, "lhs": rational_json(r.lhs), "rhs": rational_json(r.rhs), "ok": r.ok}
                     for r in rows],
        }
        return json.dumps(doc, indent=2) + "\n", status
    data = [[r.u, r.n, _frac(r.lhs), _frac(r.rhs), approx(r.lhs), approx(r.rhs), r.ok] for r in rows]
    header = ["u", "n", "lhs", "rhs", "lhs_approx", "rhs_approx", "ok"]
    if args.format == "csv":
        return _csv_text(header, data), status
    out = f"lambda_{{q,k}}(p^t u) >= lambda_{{q,0}}(u)/q^k with q = {F.q}, k = {args.k}, p^t = {F.p ** e}\n"
    out += _table(["u", "n", "lhs (approx)", "rhs (approx)", "ok"], [[d[0], d[1], d[4], d[5], d[6]] for d in data])
    return out, status


def cmd_selftest(args) -> tuple[str, int]:
    from .selftest import run_selftest

    results = run_selftest()
    status = 0 if all(ok for _, ok, _ in results) else 1
    if args.format == "json":
        doc = [{"check": name, "ok": ok, "detail": detail} for name, ok, detail in results]
        return json.dumps(doc, indent=2) + "\n", status
    rows = [[name, "PASS" if ok else "FAIL", detail] for name, ok, detail in results]
    if args.format == "csv":
        return _csv_text(["check", "status", "detail"], rows), status
    return _table(["check", "status", "detail"], rows), status


COMMANDS = {
    "count": cmd_count,
    "spectrum": cmd_spectrum,
    "mean": cmd_mean,
    "decompose": cmd_decompose,
    "bounds": cmd_bounds,
    "selftest": cmd_selftest,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["table", "csv", "json"], default="table")
    common.add_argument("--out", help="write output to this file instead of stdout")
    common.add_argument("--budget-elems", type=int, default=DEFAULT_ELEMENT_BUDGET,
                        help="largest q^n the brute-force oracle may enumerate")
    common.add_argument("--budget-g", type=int, default=DEFAULT_G_BUDGET,
                        help="largest number of candidate G in a decomposition")
    common.add_argument("--seedless", action="store_true",
                        help="assert that no randomness is used (always true)")
    field = argparse.ArgumentParser(add_help=False)
    field.add_argument("--q", type=int, help="field size, a prime power")
    field.add_argument("--p", type=int, help="characteristic (with --m)")
    field.add_argument("--m", type=int, help="degree of F_q over F_p")

    parser = argparse.ArgumentParser(prog="knormal", description="Count k-normal elements of finite fields.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common, field], help="number of k-normal elements of F_{q^n}")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)

    p = sub.add_parser("spectrum", parents=[common, field], help="counts for every k")
    p.add_argument("--n", type=int)
    p.add_argument("--verify", action="store_true", help="compare with the brute-force oracle")

    p = sub.add_parser("mean", parents=[common, field], help="densities and partial averages")
    p.add_argument("--k", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--ladder", action="store_true", help="also report A(t') at t' = 2^j")

    p = sub.add_parser("decompose", parents=[common, field], help="S_F(t) = t M_F(t) + R_F(t)")
    p.add_argument("--k", type=int)
    p.add_argument("--F", help='monic polynomial literal, e.g. "X^2+X+1"')
    p.add_argument("--t", type=int)

    p = sub.add_parser("bounds", parents=[common, field], help="lower bounds on the mean density")
    p.add_argument("--k", type=int)
    p.add_argument("--T", type=int, help="largest n = p^t u checked (k >= 1)")
    p.add_argument("--t", type=int, help="partial average length (k = 0)")

    sub.add_parser("selftest", parents=[common], help="run the built-in invariant checks")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, status = COMMANDS[args.command](args)
    except UsageError as exc:
        parser.exit(2, f"knormal {args.command}: error: {exc}\n")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
