"""The improvement factor theta(x, h) = (h/x) * C(x, h)^(1/h).

For rational x the h-th power is rational,

    theta(x, h)^h = prod_{i<h} h(x - i) / (x(h - i)),

so every comparison of theta against a rational constant, or of two
thetas at different h, reduces to integer cross-multiplication.  Decimal
values are always reported as enclosures obtained from exact integer
roots.  Only ``theta_limit`` and ``theta_approx`` involve pi and e; they
use outward-rounded decimal intervals.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import gmpy2
from scipy.optimize import brentq

from ._interval import DecimalEnv
from .arith import Enclosure, Ordering, as_rat, cmp_pow, root_enclosure

__all__ = [
    "ThetaValue",
    "theta_pow",
    "theta_pow_parts",
    "theta_pow_from_root",
    "theta_value",
    "theta_cmp",
    "theta_limit",
    "theta_approx",
    "min_x_threshold",
    "first_x_reaching",
    "argmax_h",
    "theta_curve",
    "RegionResult",
    "region_check",
    "hstar_estimate",
    "xstar_estimate",
]


@dataclass(frozen=True)
class ThetaValue:
    x: Fraction | Enclosure
    h: int
    theta_pow_h: Fraction | Enclosure
    decimal: Enclosure

    def to_dict(self, digits: int = 6) -> dict:
        def enc_or_rat(v):
            if isinstance(v, Enclosure):
                return list(v.decimal(digits))
            return str(v)

        lo, hi = self.decimal.decimal(digits)
        return {
            "x": enc_or_rat(self.x),
            "h": self.h,
            "theta_pow_h": enc_or_rat(self.theta_pow_h),
            "theta": [lo, hi],
        }


def _product(values) -> gmpy2.mpz:
    # balanced product tree; sequential products are quadratic for long runs
    vals = [gmpy2.mpz(v) for v in values]
    if not vals:
        return gmpy2.mpz(1)
    while len(vals) > 1:
        nxt = [vals[i] * vals[i + 1] for i in range(0, len(vals) - 1, 2)]
        if len(vals) % 2:
            nxt.append(vals[-1])
        vals = nxt
    return vals[0]


def _falling(p: int, q: int, h: int) -> gmpy2.mpz:
    """prod_{i<h} (p - i q)."""
    if q == 1 and h > 20000:
        return gmpy2.fac(p) // gmpy2.fac(p - h)
    return _product(p - i * q for i in range(h))


def theta_pow_parts(x, h: int) -> tuple[gmpy2.mpz, gmpy2.mpz]:
    """Numerator and denominator (not reduced) of theta(x, h)^h."""
    x = as_rat(x)
    if h < 1:
        raise ValueError("h must be >= 1")
    if x < h:
        raise ValueError(f"theta(x, h) needs x >= h, got x={x}, h={h}")
    p, q = x.numerator, x.denominator
    num = gmpy2.mpz(h) ** h * _falling(p, q, h)
    den = gmpy2.mpz(p) ** h * gmpy2.fac(h)
    return num, den


def theta_pow(x, h: int) -> Fraction:
    """theta(x, h)^h as an exact rational."""
    num, den = theta_pow_parts(x, h)
    return Fraction(int(num), int(den))


def theta_pow_from_root(x: Enclosure, m: int, h: int) -> Enclosure:
    """theta^h = (h/x)^h * m when C(x, h) = m; decreasing in x."""
    return Enclosure(Fraction(h, 1) ** h * m / x.hi**h, Fraction(h, 1) ** h * m / x.lo**h)


def theta_value(x, h: int, digits: int = 12) -> ThetaValue:
    x = as_rat(x)
    tp = theta_pow(x, h)
    return ThetaValue(x, h, tp, root_enclosure(tp, h, digits))


def theta_cmp(x, h: int, c) -> Ordering:
    """Exact ordering of theta(x, h) versus the positive rational c."""
    c = as_rat(c)
    if c <= 0:
        raise ValueError("c must be positive")
    num, den = theta_pow_parts(x, h)
    r, s = gmpy2.mpz(c.numerator), gmpy2.mpz(c.denominator)
    return Ordering.of(num * s**h, den * r**h)


def theta_limit(h: int, digits: int = 60) -> Enclosure:
    """Enclosure of lim_{x->oo} theta(x, h) = e * (2 pi h)^(-1/(2h)).

    Evaluated as exp(1 - ln(2 pi h) / (2h)) in outward-rounded decimal
    intervals carrying ``digits`` + 10 significant digits.
    """
    if h < 1:
        raise ValueError("h must be >= 1")
    env = DecimalEnv(digits + 10)
    t = env.ln(env.pi.scale(2 * h))
    u = env.exact(1) - t.div(2 * h)
    return u.exp().enclosure()


def theta_approx(x, h: int, digits: int = 30) -> Enclosure:
    """Enclosure of the large-x approximation (2x - h) e / (2x (2 pi h)^(1/(2h))).

    The interval brackets the approximating formula, not theta itself.
    """
    x = as_rat(x)
    if x < h:
        raise ValueError("need x >= h")
    return theta_limit(h, digits) * ((2 * x - h) / (2 * x))


def min_x_threshold(h: int, c, x_max: int, linear: bool = False) -> int | None:
    """Least integer x in [h, x_max] with theta(x, h) >= c, or None.

    Binary search uses that theta is increasing in x; ``linear=True``
    scans every x instead, for auditing that monotonicity.
    """
    c = as_rat(c)
    if x_max < h:
        return None
    if linear:
        for x in range(h, x_max + 1):
            if theta_cmp(x, h, c) >= 0:
                return x
        return None
    if theta_cmp(x_max, h, c) < 0:
        return None
    lo, hi = h, x_max
    while lo < hi:
        mid = (lo + hi) // 2
        if theta_cmp(mid, h, c) >= 0:
            hi = mid
        else:
            lo = mid + 1
    return lo


def first_x_reaching(c, x_max: int) -> tuple[int, list[int]] | None:
    """Least integer x such that theta(x, h) >= c for some 1 <= h <= x.

    Returns x together with every such h.
    """
    c = as_rat(c)
    for x in range(1, x_max + 1):
        hs = [h for h in range(1, x + 1) if theta_cmp(x, h, c) >= 0]
        if hs:
            return x, hs
    return None


def argmax_h(x: int, digits: int = 30) -> tuple[int, ThetaValue]:
    """The h in [1, x] maximizing theta(x, h); ties go to the smaller h.

    Decimal enclosures settle most comparisons; overlapping ones are
    decided exactly with cmp_pow on the h-th powers.
    """
    if x < 1:
        raise ValueError("x must be >= 1")
    best_h, best_pow = 1, theta_pow(x, 1)
    best_enc = root_enclosure(best_pow, 1, digits)
    for h in range(2, x + 1):
        tp = theta_pow(x, h)
        enc = root_enclosure(tp, h, digits)
        if enc.hi < best_enc.lo:
            continue
        if enc.lo > best_enc.hi or cmp_pow(tp, h, best_pow, best_h) is Ordering.GREATER:
            best_h, best_pow, best_enc = h, tp, enc
    return best_h, ThetaValue(Fraction(x), best_h, best_pow, best_enc)


def theta_curve(x: int, digits: int = 6) -> list[tuple[int, Enclosure]]:
    """(h, enclosure of theta(x, h)) for h = 1..x."""
    return [(h, root_enclosure(theta_pow(x, h), h, digits)) for h in range(1, x + 1)]


class RegionResult(NamedTuple):
    ok: bool
    first_failure: int | None
    exact_checks: int  # how many h needed exact integer comparison

    def __bool__(self) -> bool:
        return self.ok


class _LogScreen:
    """Certified sign of ln(theta(x, h)^h / c^h) for one x and many h.

    With n = x - h and Stirling written as
    ln k! = (k + 1/2) ln k - k + ln(2 pi)/2 + r_k,  1/(12k+1) < r_k < 1/(12k),
    the quantity equals

        ln x! + x - ln(2 pi) - h (ln x + ln c) - (ln h)/2 - (n + 1/2) ln n - r_n - r_h.

    Lower and upper bounds are accumulated in MPFR with directed rounding,
    so a definite sign is a proof.  ``None`` means the interval straddles 0.
    """

    def __init__(self, x: int, c: Fraction, prec: int = 96):
        self.x = x
        self.dn = dn = gmpy2.context(precision=prec, round=gmpy2.RoundDown)
        self.up = up = gmpy2.context(precision=prec, round=gmpy2.RoundUp)
        cn, cd = gmpy2.mpz(c.numerator), gmpy2.mpz(c.denominator)
        k_lo = dn.add(dn.log(x), dn.sub(dn.log(cn), up.log(cd)))
        k_hi = up.add(up.log(x), up.sub(up.log(cn), dn.log(cd)))
        self.k = (k_lo, k_hi)
        two_pi_lo, two_pi_hi = dn.mul(2, dn.const_pi()), up.mul(2, up.const_pi())
        # C0 = ln x! + x - ln(2 pi)
        self.c0_lo = dn.sub(dn.add(dn.lngamma(x + 1), x), up.log(two_pi_hi))
        self.c0_hi = up.sub(up.add(up.lngamma(x + 1), x), dn.log(two_pi_lo))

    def sign(self, h: int) -> int | None:
        n = self.x - h
        if n < 1:
            return None
        dn, up = self.dn, self.up
        ln_h_lo, ln_h_hi = dn.log(h), up.log(h)
        ln_n_lo, ln_n_hi = dn.log(n), up.log(n)
        s_lo = dn.add(
            dn.add(dn.mul(h, self.k[0]), dn.div(ln_h_lo, 2)),
            dn.add(dn.div(dn.mul(2 * n + 1, ln_n_lo), 2),
                   dn.add(dn.div(1, 12 * n + 1), dn.div(1, 12 * h + 1))),
        )
        s_hi = up.add(
            up.add(up.mul(h, self.k[1]), up.div(ln_h_hi, 2)),
            up.add(up.div(up.mul(2 * n + 1, ln_n_hi), 2),
                   up.add(up.div(1, 12 * n), up.div(1, 12 * h))),
        )
        g_lo = dn.sub(self.c0_lo, s_hi)
        g_hi = up.sub(self.c0_hi, s_lo)
        if g_lo > 0:
            return 1
        if g_hi < 0:
            return -1
        return None


def region_check(x: int, h_lo: int, h_hi: int, c, method: str = "auto") -> RegionResult:
    """Whether theta(x, h) >= c for every integer h in [h_lo, h_hi].

    ``method="exact"`` compares integers at every h.  ``method="screened"``
    first bounds the log of theta^h / c^h with directed-rounding MPFR
    arithmetic and falls back to the exact comparison only where the
    interval straddles zero.  ``"auto"`` picks exact for x <= 5000.
    """
    c = as_rat(c)
    if not 1 <= h_lo <= h_hi <= x:
        raise ValueError("need 1 <= h_lo <= h_hi <= x")
    if method == "auto":
        method = "exact" if x <= 5000 else "screened"
    if method == "exact":
        for h in range(h_lo, h_hi + 1):
            if theta_cmp(x, h, c) < 0:
                return RegionResult(False, h, h - h_lo + 1)
        return RegionResult(True, None, h_hi - h_lo + 1)
    if method != "screened":
        raise ValueError(f"unknown method {method!r}")
    screen = _LogScreen(x, c)
    exact = 0
    for h in range(h_lo, h_hi + 1):
        s = screen.sign(h)
        if s is None:
            exact += 1
            s = 1 if theta_cmp(x, h, c) >= 0 else -1
        if s < 0:
            return RegionResult(False, h, exact)
    return RegionResult(True, None, exact)


def hstar_estimate(x: float) -> float:
    """Approximate maximizer h of theta(x, .) from 2h^2 = (2x - h)(ln(2 pi h) - 1)."""
    x = float(x)
    if x < 2:
        raise ValueError("x must be >= 2")

    def f(h):
        return 2 * h * h - (2 * x - h) * (math.log(2 * math.pi * h) - 1)

    return brentq(f, 1.0, x)


def xstar_estimate(h: int) -> float:
    """The x whose approximate maximizer is h: (2h^2 / (ln(2 pi h) - 1) + h) / 2."""
    if h < 2:
        raise ValueError("h must be >= 2")
    return 0.5 * (2 * h * h / (math.log(2 * math.pi * h) - 1) + h)
