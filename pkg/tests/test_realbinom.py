import math
from fractions import Fraction

import pytest
from hypothesis import given
import hypothesis.strategies as st

from sumgrowth.arith import Enclosure, binom_int, binom_rat, ceil_root, iroot
from sumgrowth.realbinom import (chain_upper, condensed_bounds, plunnecke_bounds, refine,
                                 solve_x)
from sumgrowth.sumset import FiniteSet, iterate_sumsets

F = Fraction


def test_solve_x_examples():
    enc = solve_x(100, 5, F(1, 1000))
    assert enc.strictly_inside(F(869, 100), F(87, 10))
    assert solve_x(220, 3) == Enclosure.point(12)
    for h in range(1, 8):
        assert solve_x(1, h) == Enclosure.point(h)
    with pytest.raises(ValueError):
        solve_x(0, 3)


@given(st.integers(1, 10**12), st.integers(1, 12),
       st.sampled_from([F(1, 10), F(1, 1000), F(1, 10**12)]))
def test_solve_x_certified(d, h, tol):
    enc = solve_x(d, h, tol)
    assert enc.lo >= h
    assert binom_rat(enc.lo, h) <= d <= binom_rat(enc.hi, h)
    assert enc.width <= tol


@given(st.integers(1, 200), st.integers(1, 10))
def test_solve_x_degenerate_when_exact(n, h):
    if n >= h:
        assert solve_x(binom_int(n, h), h) == Enclosure.point(n)


@given(st.integers(2, 10**6), st.integers(2, 9))
def test_refine_halves_and_stays_certified(d, h):
    enc = solve_x(d, h, F(1, 4))
    if not enc.is_point:
        r = refine(enc, d, h)
        assert r.width * 2 == enc.width
        assert binom_rat(r.lo, h) <= d <= binom_rat(r.hi, h)


@given(st.fractions(min_value=1, max_value=10**4, max_denominator=10**4), st.integers(1, 25))
def test_shift_identity(x, h):
    # C(x-1, h-1) = (h/x) C(x, h) for rational x
    assert binom_rat(x - 1, h - 1) == F(h) / x * binom_rat(x, h)


def test_condensed_examples():
    assert condensed_bounds(100, 5) == (58, 161)
    assert condensed_bounds(220, 3) == (binom_int(11, 2), binom_int(13, 4)) == (55, 715)
    for h in range(2, 9):
        assert condensed_bounds(1, h) == (1, 1)


def condensed_oracle(m, h):
    """Same bounds by bisection to a fixed tiny width, checking the rounding is unambiguous."""
    enc = solve_x(m, h, F(1, 2**60))
    lo_prev = [binom_rat(enc.lo - 1, h - 1), binom_rat(enc.hi - 1, h - 1)]
    up_next = [binom_rat(enc.lo + 1, h + 1), binom_rat(enc.hi + 1, h + 1)]
    ceil_vals = {math.ceil(v) for v in lo_prev}
    floor_vals = {math.floor(v) for v in up_next}
    if len(ceil_vals) != 1 or len(floor_vals) != 1:
        return None
    return ceil_vals.pop(), floor_vals.pop()


@given(st.integers(1, 10**7), st.integers(2, 10))
def test_condensed_matches_fine_bisection(m, h):
    expected = condensed_oracle(m, h)
    if expected is not None:
        assert condensed_bounds(m, h) == expected


def test_plunnecke_examples():
    assert plunnecke_bounds(100, 5) == (40, 251)
    assert plunnecke_bounds(64, 2) == (8, 512)
    assert plunnecke_bounds(1, 4) == (1, 1)
    assert plunnecke_bounds(7, 1)[0] is None


@given(st.integers(1, 10**9), st.integers(2, 12))
def test_plunnecke_extremal_integers(m, h):
    lo, up = plunnecke_bounds(m, h)
    # lo is the least k with k^h >= m^(h-1); up the largest with up^h <= m^(h+1)
    assert lo**h >= m ** (h - 1) and (lo - 1) ** h < m ** (h - 1)
    assert up**h <= m ** (h + 1) < (up + 1) ** h
    assert lo == ceil_root(m ** (h - 1), h) and up == iroot(m ** (h + 1), h)


def test_chain_upper_single_step():
    x = solve_x(100, 5, F(1, 10**6))
    factor = chain_upper(4, 5, {5: x})
    assert factor.lo == x.lo / 5 and factor.hi == x.hi / 5


def test_chain_upper_small_set():
    # A = {0,1}: |1A| = 2, |2A| = 3 = C(3,2), so x_2 = 3 and the factor is 3/2
    growth = iterate_sumsets(FiniteSet.of([0, 1]), 2)
    x2 = solve_x(growth[2], 2)
    assert x2 == Enclosure.point(3)
    factor = chain_upper(1, 2, {2: x2})
    assert factor == Enclosure.point(F(3, 2))
    assert growth[2] <= factor.lo * growth[1]


def test_chain_upper_pure_binomial_growth():
    # |jA| = C(n-1+j, j) for a B_h set: x_j = n-1+j exactly
    n, i, h = 4, 1, 5
    xs = {j: solve_x(binom_int(n - 1 + j, j), j) for j in range(i + 1, h + 1)}
    factor = chain_upper(i, h, xs)
    assert factor.is_point
    assert factor.lo == math.prod(F(n - 1 + j, j) for j in range(i + 1, h + 1))
    assert factor.lo * n == binom_int(n - 1 + h, h)


@given(st.lists(st.integers(0, 25), min_size=2, max_size=5, unique=True), st.integers(2, 5))
def test_chain_upper_is_a_valid_bound(elements, h):
    growth = iterate_sumsets(FiniteSet.of(elements), h)
    xs = {j: solve_x(growth[j], j, F(1, 10**9)) for j in range(2, h + 1)}
    for i in range(1, h):
        assert growth[h] <= chain_upper(i, h, xs).hi * growth[i]


def test_chain_upper_rejects_bad_range():
    with pytest.raises(ValueError):
        chain_upper(3, 3, {})
