"""Exact arithmetic kernel.

Everything here works on Python ints and ``fractions.Fraction``; nothing
rounds silently.  Real quantities that are not rational (roots of
binomial equations, pi, e, k-th roots) are represented by ``Enclosure``
objects whose endpoints are rationals certified to bracket the value.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

import gmpy2

__all__ = [
    "Ordering",
    "Enclosure",
    "as_rat",
    "binom_int",
    "binom_rat",
    "binom_cmp",
    "binom_floor_index",
    "cmp_rat",
    "cmp_pow",
    "iroot",
    "ceil_root",
    "root_enclosure",
    "e_enclosure",
    "pi_enclosure",
    "format_down",
    "format_up",
]


class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    @classmethod
    def of(cls, a, b) -> "Ordering":
        return cls((a > b) - (a < b))


def as_rat(value) -> Fraction:
    """Coerce ints, Fractions and decimal/ratio strings to a Fraction.

    Floats are refused: they would smuggle binary rounding into exact code.
    """
    if isinstance(value, float):
        raise TypeError("floats are not accepted as exact rationals")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    return Fraction(value)


@dataclass(frozen=True)
class Enclosure:
    """A closed rational interval [lo, hi] containing some real quantity."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", as_rat(self.lo))
        object.__setattr__(self, "hi", as_rat(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty enclosure [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, value) -> "Enclosure":
        v = as_rat(value)
        return cls(v, v)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def __contains__(self, value) -> bool:
        return self.lo <= as_rat(value) <= self.hi

    def strictly_inside(self, a, b) -> bool:
        """True if [lo, hi] lies in the open interval (a, b)."""
        return as_rat(a) < self.lo and self.hi < as_rat(b)

    def __mul__(self, other: "Enclosure | Fraction | int") -> "Enclosure":
        # Only used for nonnegative quantities.
        if not isinstance(other, Enclosure):
            other = Enclosure.point(other)
        if self.lo < 0 or other.lo < 0:
            raise ValueError("enclosure product only defined for nonnegative intervals")
        return Enclosure(self.lo * other.lo, self.hi * other.hi)

    __rmul__ = __mul__

    def decimal(self, digits: int = 6) -> tuple[str, str]:
        """Outward-rounded decimal strings with ``digits`` places."""
        return format_down(self.lo, digits), format_up(self.hi, digits)

    def __str__(self) -> str:
        lo, hi = self.decimal(12)
        return f"[{lo}, {hi}]"


def _fmt(n: int, digits: int) -> str:
    sign = "-" if n < 0 else ""
    n = abs(n)
    if digits == 0:
        return f"{sign}{n}"
    s = str(n).rjust(digits + 1, "0")
    return f"{sign}{s[:-digits]}.{s[-digits:]}"


def format_down(q, digits: int = 6) -> str:
    """Largest decimal with ``digits`` places that is <= q."""
    q = as_rat(q)
    return _fmt(math.floor(q * 10**digits), digits)


def format_up(q, digits: int = 6) -> str:
    """Smallest decimal with ``digits`` places that is >= q."""
    q = as_rat(q)
    return _fmt(math.ceil(q * 10**digits), digits)


@lru_cache(maxsize=4096)
def _comb_cached(n: int, k: int) -> int:
    return math.comb(n, k)


def binom_int(n: int, k: int) -> int:
    """C(n, k) for nonnegative integers, zero when k > n."""
    if n < 0 or k < 0:
        raise ValueError("binom_int expects nonnegative arguments")
    if n < 256:
        return _comb_cached(n, k)
    return math.comb(n, k)


def binom_rat(x, k: int) -> Fraction:
    """x(x-1)...(x-k+1)/k! for rational x, computed without intermediate gcds."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    x = as_rat(x)
    p, q = x.numerator, x.denominator
    if q == 1 and p >= 0:
        return Fraction(binom_int(p, k))
    num = 1
    for i in range(k):
        num *= p - i * q
    return Fraction(num, q**k * math.factorial(k))


def binom_cmp(x, k: int, d) -> Ordering:
    """Ordering of C(x, k) versus d, by integer cross-multiplication."""
    x, d = as_rat(x), as_rat(d)
    p, q = x.numerator, x.denominator
    num = 1
    for i in range(k):
        num *= p - i * q
    lhs = num * d.denominator
    rhs = d.numerator * q**k * math.factorial(k)
    return Ordering.of(lhs, rhs)


def binom_floor_index(r: int, k: int, hi: int | None = None) -> int:
    """Largest integer n >= k-1 with C(n, k) <= r.

    ``hi`` is an optional known upper bound on the answer.  A floating
    estimate seeds a galloping search; the final answer is decided with
    exact ``math.comb`` only.
    """
    if r < 0 or k < 1:
        raise ValueError("need r >= 0 and k >= 1")
    if r == 0:
        return k - 1
    if k == 1:
        return r
    # C(n,k) ~ (n - (k-1)/2)^k / k!
    try:
        est = int(math.exp((math.log(r) + math.lgamma(k + 1)) / k) + (k - 1) / 2)
    except OverflowError:
        est = k
    n = max(k, est)
    if hi is not None:
        n = min(n, hi)
    if math.comb(n, k) <= r:
        lo, step = n, 1
        while True:
            cand = lo + step
            if hi is not None and cand > hi:
                cand = hi
            if cand == lo or math.comb(cand, k) > r:
                top = cand
                break
            lo, step = cand, step * 2
        if top == lo:
            return lo
    else:
        top, step = n, 1
        while True:
            cand = max(k - 1, top - step)
            if math.comb(cand, k) <= r:
                lo = cand
                break
            top, step = cand, step * 2
    # invariant: C(lo,k) <= r < C(top,k)
    while top - lo > 1:
        mid = (lo + top) // 2
        if math.comb(mid, k) <= r:
            lo = mid
        else:
            top = mid
    return lo


def cmp_rat(a, b) -> Ordering:
    return Ordering.of(as_rat(a), as_rat(b))


def cmp_pow(a, p: int, b, q: int) -> Ordering:
    """Ordering of a^(1/p) versus b^(1/q) for a, b >= 0, via a^q versus b^p."""
    a, b = as_rat(a), as_rat(b)
    if a < 0 or b < 0 or p < 1 or q < 1:
        raise ValueError("cmp_pow needs a, b >= 0 and p, q >= 1")
    lhs = gmpy2.mpz(a.numerator) ** q * gmpy2.mpz(b.denominator) ** p
    rhs = gmpy2.mpz(b.numerator) ** p * gmpy2.mpz(a.denominator) ** q
    return Ordering.of(lhs, rhs)


def iroot(n: int, k: int) -> int:
    """floor(n^(1/k)) for a nonnegative integer n."""
    if n < 0:
        raise ValueError("iroot of a negative number")
    return int(gmpy2.iroot(gmpy2.mpz(n), k)[0])


def ceil_root(n: int, k: int) -> int:
    """Least integer r with r^k >= n."""
    r, exact = gmpy2.iroot(gmpy2.mpz(n), k)
    return int(r) if exact else int(r) + 1


def root_enclosure(value, k: int, digits: int = 12) -> Enclosure:
    """Enclosure of value^(1/k) with endpoints on the 10^-digits grid."""
    value = as_rat(value)
    if value < 0:
        raise ValueError("root of a negative rational")
    scale = 10 ** (digits * k)
    num = gmpy2.mpz(value.numerator) * scale
    den = gmpy2.mpz(value.denominator)
    r, exact = gmpy2.iroot(num // den, k)
    r = int(r)
    if exact and num % den == 0:
        return Enclosure(Fraction(r, 10**digits), Fraction(r, 10**digits))
    return Enclosure(Fraction(r, 10**digits), Fraction(r + 1, 10**digits))


def e_enclosure(digits: int = 60) -> Enclosure:
    """Rational enclosure of e of width < 10^-digits.

    Partial sum of 1/j! up to j=n, with tail bounded by 1/(n! n).
    """
    return _e_enclosure(digits)


@lru_cache(maxsize=None)
def _e_enclosure(digits: int) -> Enclosure:
    target = Fraction(1, 10 ** (digits + 2))
    s, term, n = Fraction(1), Fraction(1), 0
    while True:
        n += 1
        term /= n
        s += term
        tail = term / n
        if tail < target:
            break
    return _round_outward(s, s + tail, digits + 2)


def _arctan_inv(m: int, digits: int) -> tuple[Fraction, Fraction]:
    # Alternating series for arctan(1/m); consecutive partial sums bracket it.
    target = Fraction(1, 10 ** (digits + 4))
    m2 = m * m
    s = Fraction(0)
    power = Fraction(1, m)
    k = 0
    while True:
        term = power / (2 * k + 1)
        prev = s
        s = s + term if k % 2 == 0 else s - term
        if term < target:
            return (min(prev, s), max(prev, s))
        power /= m2
        k += 1


def pi_enclosure(digits: int = 60) -> Enclosure:
    """Rational enclosure of pi via Machin's formula, width < 10^-digits."""
    return _pi_enclosure(digits)


@lru_cache(maxsize=None)
def _pi_enclosure(digits: int) -> Enclosure:
    a_lo, a_hi = _arctan_inv(5, digits)
    b_lo, b_hi = _arctan_inv(239, digits)
    return _round_outward(16 * a_lo - 4 * b_hi, 16 * a_hi - 4 * b_lo, digits + 2)


def _round_outward(lo: Fraction, hi: Fraction, digits: int) -> Enclosure:
    s = 10**digits
    return Enclosure(Fraction(math.floor(lo * s), s), Fraction(math.ceil(hi * s), s))
