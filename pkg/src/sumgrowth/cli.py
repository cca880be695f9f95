"""Command-line interface: ``sumgrowth <subcommand> ...``.

Exit codes: 0 success, 1 verification failure, 2 malformed input,
3 cardinality cap exceeded.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from . import algebra, macaulay, realbinom, sumset, theta
from .arith import as_rat
from .verify import verify_paper

EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 1, 2, 3


class InputError(ValueError):
    pass


def _nat(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


def _pos(text: str) -> int:
    v = _nat(text)
    if v < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return v


def _rat(text: str) -> Fraction:
    try:
        return as_rat(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _enc_list(enc, digits):
    return list(enc.decimal(digits))


def cmd_repr(a):
    print(macaulay.represent(a.d, a.h))


def cmd_succ(a):
    print(macaulay.successor(a.d, a.h))


def cmd_minprev(a):
    if a.d < 1:
        raise InputError("minprev needs d >= 1")
    print(macaulay.min_predecessor(a.d, a.h))


def cmd_solvex(a):
    if a.d < 1:
        raise InputError("solvex needs d >= 1")
    tol = a.tol if a.tol is not None else realbinom.DEFAULT_TOL
    if tol <= 0:
        raise InputError("--tol must be positive")
    enc = realbinom.solve_x(a.d, a.h, tol)
    digits = a.digits
    if digits is None:
        digits = 6
        while Fraction(1, 10**digits) > tol / 10 and digits < 60:
            digits += 1
    lo, hi = enc.decimal(digits)
    print(lo, hi)


def cmd_bounds(a):
    if a.h < 2:
        raise InputError("bounds needs h >= 2")
    _emit(sumset.bound_report(a.m, a.h).to_dict(a.digits))


def cmd_theta(a):
    if a.x < a.h:
        raise InputError("theta needs x >= h")
    _emit(theta.theta_value(a.x, a.h, a.digits).to_dict(a.digits))


def cmd_theta_scan(a):
    x = theta.min_x_threshold(a.h, a.ge, a.xmax, linear=a.linear)
    _emit({"h": a.h, "c": str(a.ge), "x_max": a.xmax, "least_x": x})


def cmd_theta_region(a):
    if not 1 <= a.h_lo <= a.h_hi <= a.x:
        raise InputError("need 1 <= h-lo <= h-hi <= x")
    r = theta.region_check(a.x, a.h_lo, a.h_hi, a.ge, method=a.method)
    _emit({"x": a.x, "h_lo": a.h_lo, "h_hi": a.h_hi, "c": str(a.ge), "ok": r.ok,
           "first_failure": r.first_failure, "exact_checks": r.exact_checks})


def cmd_theta_argmax(a):
    h, tv = theta.argmax_h(a.x)
    _emit({"x": a.x, "h": h, "theta": _enc_list(tv.decimal, a.digits)})


def cmd_theta_limit(a):
    _emit({"h": a.h, "limit": _enc_list(theta.theta_limit(a.h, max(a.digits, 20)), a.digits)})


def cmd_theta_curve(a):
    rows = theta.theta_curve(a.x, a.digits)
    out = open(a.csv, "w", newline="") if a.csv else sys.stdout
    try:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["h", "theta_lo", "theta_hi"])
        for h, enc in rows:
            w.writerow([h, *enc.decimal(a.digits)])
    finally:
        if a.csv:
            out.close()


def _parse_set(a):
    try:
        return sumset.parse_set(a.set, a.mod)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _set_json(A):
    return [list(e) if isinstance(e, tuple) else e for e in A.elements]


def cmd_sumset(a):
    A = _parse_set(a)
    growth = sumset.iterate_sumsets(A, a.max_h)
    check = macaulay.is_o_sequence(growth)
    out = {
        "set": _set_json(A),
        "ambient": str(A.ambient),
        "growth": growth,
        "o_sequence": {"ok": check.ok, "violation": check.violation},
        "verdicts": [],
    }
    if a.check_bounds:
        if a.max_h < 3:
            raise InputError("--check-bounds needs --max-h >= 3")
        out["verdicts"] = sumset.check_bounds(A, a.max_h)
    _emit(out)


def cmd_search(a):
    r = sumset.extremal_search(a.h, a.i, a.m, a.size, a.max_elem, budget=a.budget,
                               mod=a.mod, seed=a.seed, workers=a.workers)
    _emit(r.to_dict())


def cmd_classes(a):
    A = _parse_set(a)
    cls = algebra.classes(A, a.deg)
    _emit({"set": _set_json(A), "degree": a.deg, "count": len(cls),
           "classes": [c.to_dict() for c in cls]})


def cmd_present(a):
    A = _parse_set(a)
    gens = algebra.presentation_generators(A, a.max_deg)
    _emit({"set": _set_json(A), "max_degree": a.max_deg, "count": len(gens),
           "generators": [{"degree": sum(u), "lhs": algebra.format_monomial(u),
                           "rhs": algebra.format_monomial(v)} for u, v in gens]})


def cmd_hilbert(a):
    try:
        J = algebra.parse_ideal(a.ideal, a.vars)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    growth = algebra.hilbert_monomial_quotient(a.vars, J, a.max_deg)
    check = macaulay.is_o_sequence(growth)
    _emit({"vars": a.vars, "ideal": str(J), "growth": growth,
           "o_sequence": {"ok": check.ok, "violation": check.violation}})


def cmd_verify(a):
    rep = verify_paper(fast=a.fast, search_radius=a.radius)
    if a.json:
        _emit(rep.to_dict())
    else:
        print(rep.to_text())
    return 0 if rep.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sumgrowth", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="cmd", required=True)

    for name, fn, help_ in [("repr", cmd_repr, "h-th binomial representation of d"),
                            ("succ", cmd_succ, "Macaulay successor d^<h>"),
                            ("minprev", cmd_minprev, "least m with m^<h> >= d")]:
        s = sub.add_parser(name, help=help_)
        s.add_argument("d", type=_nat)
        s.add_argument("h", type=_pos)
        s.set_defaults(func=fn)

    s = sub.add_parser("solvex", help="enclose x >= h with C(x,h) = d")
    s.add_argument("d", type=_nat)
    s.add_argument("h", type=_pos)
    s.add_argument("--tol", type=_rat)
    s.add_argument("--digits", type=_pos)
    s.set_defaults(func=cmd_solvex)

    s = sub.add_parser("bounds", help="Plünnecke / condensed / Macaulay bounds for |hA| = m")
    s.add_argument("m", type=_pos)
    s.add_argument("h", type=_pos)
    s.add_argument("--digits", type=_pos, default=6)
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("theta", help="theta(x,h) with its exact h-th power")
    s.add_argument("x", type=_rat)
    s.add_argument("h", type=_pos)
    s.add_argument("--digits", type=_pos, default=6)
    s.set_defaults(func=cmd_theta)

    s = sub.add_parser("theta-scan", help="least x with theta(x,h) >= c")
    s.add_argument("--h", type=_pos, required=True)
    s.add_argument("--ge", type=_rat, required=True)
    s.add_argument("--xmax", type=_pos, default=10**5)
    s.add_argument("--linear", action="store_true", help="scan every x instead of bisecting")
    s.set_defaults(func=cmd_theta_scan)

    s = sub.add_parser("theta-region", help="check theta(x,h) >= c for h in a range")
    s.add_argument("--x", type=_pos, required=True)
    s.add_argument("--h-lo", type=_pos, required=True)
    s.add_argument("--h-hi", type=_pos, required=True)
    s.add_argument("--ge", type=_rat, required=True)
    s.add_argument("--method", choices=["auto", "exact", "screened"], default="auto")
    s.set_defaults(func=cmd_theta_region)

    s = sub.add_parser("theta-argmax", help="h maximizing theta(x,h)")
    s.add_argument("--x", type=_pos, required=True)
    s.add_argument("--digits", type=_pos, default=6)
    s.set_defaults(func=cmd_theta_argmax)

    s = sub.add_parser("theta-limit", help="limit of theta(x,h) as x grows")
    s.add_argument("--h", type=_pos, required=True)
    s.add_argument("--digits", type=_pos, default=60)
    s.set_defaults(func=cmd_theta_limit)

    s = sub.add_parser("theta-curve", help="CSV of theta(x,h) for h = 1..x")
    s.add_argument("--x", type=_pos, required=True)
    s.add_argument("--csv")
    s.add_argument("--digits", type=_nat, default=6)
    s.set_defaults(func=cmd_theta_curve)

    s = sub.add_parser("sumset", help="growth sequence of a finite set")
    s.add_argument("--set", required=True)
    s.add_argument("--mod", type=_pos)
    s.add_argument("--max-h", type=_nat, required=True)
    s.add_argument("--check-bounds", action="store_true")
    s.set_defaults(func=cmd_sumset)

    s = sub.add_parser("search", help="extremal |iA| among sets with |hA| = m")
    s.add_argument("--h", type=_pos, required=True)
    s.add_argument("--i", type=_pos, required=True)
    s.add_argument("--m", type=_pos, required=True)
    s.add_argument("--max-elem", type=_pos, required=True)
    s.add_argument("--size", type=_pos, required=True)
    s.add_argument("--mod", type=_pos)
    s.add_argument("--budget", type=_pos, default=2_000_000)
    s.add_argument("--seed", type=_nat, default=0)
    s.add_argument("--workers", type=_pos, default=1)
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("classes", help="monomial classes of degree H")
    s.add_argument("--set", required=True)
    s.add_argument("--mod", type=_pos)
    s.add_argument("--deg", type=_nat, required=True)
    s.set_defaults(func=cmd_classes)

    s = sub.add_parser("present", help="binomial generators up to degree H")
    s.add_argument("--set", required=True)
    s.add_argument("--mod", type=_pos)
    s.add_argument("--max-deg", type=_pos, required=True)
    s.set_defaults(func=cmd_present)

    s = sub.add_parser("hilbert", help="Hilbert function of S/J for a monomial ideal J")
    s.add_argument("--vars", type=_pos, required=True)
    s.add_argument("--ideal", required=True)
    s.add_argument("--max-deg", type=_nat, required=True)
    s.set_defaults(func=cmd_hilbert)

    s = sub.add_parser("verify-paper", help="recompute every checkable published number")
    s.add_argument("--fast", action="store_true", help="skip the x=1210 and x=10^6 region scans")
    s.add_argument("--json", action="store_true")
    s.add_argument("--radius", type=_pos, help="search radius for the |5A|=100 evidence")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        rc = args.func(args)
    except InputError as exc:
        print(f"sumgrowth: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except sumset.CapExceeded as exc:
        print(f"sumgrowth: cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        print(f"sumgrowth: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return rc or 0


if __name__ == "__main__":
    sys.exit(main())
