"""Macaulay binomial representations and the successor a^<i>.

The i-th binomial representation of a >= 0 is the unique expansion

    a = C(a_i, i) + C(a_{i-1}, i-1) + ... + C(a_1, 1),  a_i > ... > a_1 >= 0,

found greedily.  Terms with a zero binomial are dropped, so stored terms
always satisfy a_j >= j.  Shifting every term gives the successor

    a^<i> = C(a_i + 1, i + 1) + ... + C(a_1 + 1, 2),

which bounds the next value of any Hilbert function.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .arith import binom_floor_index, binom_int

__all__ = [
    "BinRep",
    "represent",
    "successor",
    "min_predecessor",
    "OSequenceCheck",
    "is_o_sequence",
]


@dataclass(frozen=True)
class BinRep:
    degree: int
    terms: tuple[tuple[int, int], ...]  # (a_j, j), j descending

    @property
    def value(self) -> int:
        return sum(binom_int(a, j) for a, j in self.terms)

    def shifted(self) -> "BinRep":
        return BinRep(self.degree + 1, tuple((a + 1, j + 1) for a, j in self.terms))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return "+".join(f"C({a},{j})" for a, j in self.terms)


def _check_degree(i: int) -> None:
    if i < 1:
        raise ValueError("binomial representations need degree i >= 1")


def represent(a: int, i: int) -> BinRep:
    """The i-th binomial representation of ``a``."""
    _check_degree(i)
    if a < 0:
        raise ValueError("a must be nonnegative")
    terms = []
    rest, bound = a, None
    for j in range(i, 0, -1):
        if rest == 0:
            break
        aj = binom_floor_index(rest, j, hi=bound)
        terms.append((aj, j))
        rest -= binom_int(aj, j)
        bound = aj - 1
    assert rest == 0
    return BinRep(i, tuple(terms))


def successor(a: int, i: int) -> int:
    """a^<i>; zero maps to zero."""
    return represent(a, i).shifted().value


def min_predecessor(d: int, i: int) -> int:
    """Smallest m >= 1 with m^<i> >= d.

    Any Hilbert function with d_{i+1} = d must have d_i at least this value.
    The candidate sum C(b_j - 1, j - 1) over the (i+1)-th representation
    of d is accepted only if it passes the two-sided successor test;
    otherwise a binary search over [1, d] decides.
    """
    _check_degree(i)
    if d < 1:
        raise ValueError("d must be positive")
    m = sum(binom_int(b - 1, j - 1) for b, j in represent(d, i + 1).terms)
    if m >= 1 and successor(m, i) >= d and (m == 1 or successor(m - 1, i) < d):
        return m
    return _bisect_predecessor(d, i)


def _bisect_predecessor(d: int, i: int) -> int:
    # relies on successor being nondecreasing in m
    lo, hi = 1, d  # successor(d, i) >= d
    while lo < hi:
        mid = (lo + hi) // 2
        if successor(mid, i) >= d:
            hi = mid
        else:
            lo = mid + 1
    return lo


class OSequenceCheck(NamedTuple):
    ok: bool
    violation: int | None  # least i with seq[i+1] > seq[i]^<i>, or 0 if seq[0] != 1

    def __bool__(self) -> bool:
        return self.ok


def is_o_sequence(seq: Sequence[int]) -> OSequenceCheck:
    """Check d_0 = 1 and d_{i+1} <= d_i^<i> for every i >= 1 in range."""
    if not seq:
        raise ValueError("sequence must be nonempty")
    if seq[0] != 1 or any(v < 0 for v in seq):
        return OSequenceCheck(False, 0)
    for i in range(1, len(seq) - 1):
        if seq[i + 1] > successor(seq[i], i):
            return OSequenceCheck(False, i)
    return OSequenceCheck(True, None)
