"""Real-argument binomials: the root x >= h of C(x, h) = d and the bounds it yields.

y -> C(y, h) is increasing on [h-1, oo), so the root is isolated by
bisection on exact sign evaluations.  Midpoints are dyadic, which keeps
the denominators of the evaluated products at powers of two.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .arith import (
    Enclosure,
    Ordering,
    as_rat,
    binom_cmp,
    binom_floor_index,
    binom_int,
    binom_rat,
    ceil_root,
    iroot,
)

__all__ = [
    "DEFAULT_TOL",
    "solve_x",
    "refine",
    "condensed_bounds",
    "plunnecke_bounds",
    "chain_upper",
]

DEFAULT_TOL = Fraction(1, 10**12)


def _bisect_once(enc: Enclosure, d: int, h: int) -> Enclosure:
    mid = (enc.lo + enc.hi) / 2
    c = binom_cmp(mid, h, d)
    if c is Ordering.EQUAL:  # cannot happen for non-integer mid, kept for safety
        return Enclosure.point(mid)
    if c is Ordering.LESS:
        return Enclosure(mid, enc.hi)
    return Enclosure(enc.lo, mid)


def solve_x(d: int, h: int, tol=DEFAULT_TOL) -> Enclosure:
    """Certified enclosure of the unique x >= h with C(x, h) = d.

    Returns a point enclosure when d is a binomial C(n, h) with integer n.
    """
    if d < 1:
        raise ValueError("d must be >= 1 (d = 0 would put x below h)")
    if h < 1:
        raise ValueError("h must be >= 1")
    tol = as_rat(tol)
    if tol <= 0:
        raise ValueError("tol must be positive")
    n = binom_floor_index(d, h)
    if binom_int(n, h) == d:
        return Enclosure.point(n)
    enc = Enclosure(n, n + 1)
    while enc.width > tol:
        enc = _bisect_once(enc, d, h)
    return enc


def refine(enc: Enclosure, d: int, h: int) -> Enclosure:
    """One more bisection step of a solve_x enclosure."""
    if enc.is_point:
        return enc
    return _bisect_once(enc, d, h)


def condensed_bounds(m: int, h: int, tol=Fraction(1, 2**20)) -> tuple[int, int]:
    """(ceil C(x-1, h-1), floor C(x+1, h+1)) where C(x, h) = m.

    The enclosure of x is refined until both roundings are decided, so the
    integers returned are exact.  When x is irrational neither binomial is
    an integer, so the loop terminates.
    """
    if m < 1 or h < 2:
        raise ValueError("need m >= 1 and h >= 2")
    enc = solve_x(m, h, tol)
    while True:
        # C(y-1, h-1) and C(y+1, h+1) are both increasing in y on the enclosure.
        low_lo = math.ceil(binom_rat(enc.lo - 1, h - 1))
        low_hi = math.ceil(binom_rat(enc.hi - 1, h - 1))
        up_lo = math.floor(binom_rat(enc.lo + 1, h + 1))
        up_hi = math.floor(binom_rat(enc.hi + 1, h + 1))
        if low_lo == low_hi and up_lo == up_hi:
            return low_lo, up_lo
        enc = refine(enc, m, h)


def plunnecke_bounds(m: int, h: int) -> tuple[int | None, int]:
    """(ceil m^((h-1)/h), floor m^((h+1)/h)) by integer root extraction.

    The lower entry is None when h = 1, where it carries no information.
    """
    if m < 1 or h < 1:
        raise ValueError("need m >= 1 and h >= 1")
    lower = ceil_root(m ** (h - 1), h) if h >= 2 else None
    upper = iroot(m ** (h + 1), h)
    return lower, upper


def chain_upper(i: int, h: int, seq_x: Sequence[Enclosure] | dict) -> Enclosure:
    """Enclosure of prod_{j=i+1}^{h} x_j / j.

    ``seq_x[j]`` must enclose the root x_j of C(x_j, j) = |jA|; then
    |hA| <= (that product) * |iA|.
    """
    if not 1 <= i < h:
        raise ValueError("need 1 <= i < h")
    out = Enclosure.point(1)
    for j in range(i + 1, h + 1):
        out = out * Enclosure(seq_x[j].lo / j, seq_x[j].hi / j)
    return out
