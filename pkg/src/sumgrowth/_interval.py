"""Outward-rounded interval arithmetic on ``decimal.Decimal``.

Sums and products use ROUND_FLOOR / ROUND_CEILING contexts.  ``ln`` and
``exp`` are correctly rounded by libmpdec, so stepping one unit in the
last place outward gives valid bounds.
"""
from __future__ import annotations

import decimal
from decimal import Decimal
from fractions import Fraction

from .arith import Enclosure, pi_enclosure


class Box:
    __slots__ = ("lo", "hi", "env")

    def __init__(self, lo: Decimal, hi: Decimal, env: "DecimalEnv"):
        self.lo, self.hi, self.env = lo, hi, env

    def __add__(self, other: "Box") -> "Box":
        e = self.env
        return Box(e.down.add(self.lo, other.lo), e.up.add(self.hi, other.hi), e)

    def __sub__(self, other: "Box") -> "Box":
        e = self.env
        return Box(e.down.subtract(self.lo, other.hi), e.up.subtract(self.hi, other.lo), e)

    def __neg__(self) -> "Box":
        return Box(-self.hi, -self.lo, self.env)

    def scale(self, k: int) -> "Box":
        """Multiply by a nonnegative integer."""
        e = self.env
        k = Decimal(k)
        return Box(e.down.multiply(self.lo, k), e.up.multiply(self.hi, k), e)

    def div(self, k: int) -> "Box":
        """Divide by a positive integer."""
        e = self.env
        k = Decimal(k)
        return Box(e.down.divide(self.lo, k), e.up.divide(self.hi, k), e)

    def exp(self) -> "Box":
        e = self.env
        return Box(e.near.exp(self.lo).next_minus(e.down), e.near.exp(self.hi).next_plus(e.up), e)

    def sign(self) -> int | None:
        """+1 / -1 when the whole box is on one side of zero, else None."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        return None

    def enclosure(self) -> Enclosure:
        return Enclosure(Fraction(self.lo), Fraction(self.hi))


class DecimalEnv:
    def __init__(self, prec: int = 30):
        self.prec = prec
        self.down = decimal.Context(prec=prec, rounding=decimal.ROUND_FLOOR)
        self.up = decimal.Context(prec=prec, rounding=decimal.ROUND_CEILING)
        self.near = decimal.Context(prec=prec, rounding=decimal.ROUND_HALF_EVEN)
        pi = pi_enclosure(prec + 5)
        self.pi = self.rational(pi.lo, pi.hi)

    def exact(self, n: int) -> Box:
        d = Decimal(n)
        if len(d.as_tuple().digits) > self.prec:
            return Box(self.down.plus(d), self.up.plus(d), self)
        return Box(d, d, self)

    def rational(self, lo, hi=None) -> Box:
        lo = Fraction(lo)
        hi = lo if hi is None else Fraction(hi)
        return Box(
            self.down.divide(Decimal(lo.numerator), Decimal(lo.denominator)),
            self.up.divide(Decimal(hi.numerator), Decimal(hi.denominator)),
            self,
        )

    def ln(self, box: Box) -> Box:
        if box.lo <= 0:
            raise ValueError("ln of a nonpositive interval")
        lo = self.near.ln(box.lo)
        hi = lo if box.hi == box.lo else self.near.ln(box.hi)
        return Box(lo.next_minus(self.down), hi.next_plus(self.up), self)

    def ln_int(self, n: int) -> Box:
        return self.ln(self.exact(n))
