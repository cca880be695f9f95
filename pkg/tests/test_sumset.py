import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from sumgrowth.arith import binom_int
from sumgrowth.macaulay import is_o_sequence
from sumgrowth.sumset import (Ambient, CapExceeded, FiniteSet, bound_report, check_bounds,
                              extremal_search, growth_bitmask, iterate_sumsets, parse_set)


def naive_sumset_size(elements, h, add=lambda a, b: a + b, zero=0):
    """|hA| from all h-element multisets, no incremental trick."""
    sums = set()
    for combo in itertools.combinations_with_replacement(elements, h):
        s = zero
        for a in combo:
            s = add(s, a)
        sums.add(s)
    return len(sums)


int_sets = st.lists(st.integers(-40, 40), min_size=1, max_size=6, unique=True)


def test_witness_growth():
    growth = iterate_sumsets(FiniteSet.of([0, 1, 5, 8, 49]), 6)
    assert growth == [1, 5, 15, 34, 63, 100, 145]


@given(int_sets, st.integers(0, 5))
def test_incremental_matches_naive(elements, H):
    growth = iterate_sumsets(FiniteSet.of(elements), H)
    assert growth[0] == 1
    for h in range(1, H + 1):
        assert growth[h] == naive_sumset_size(elements, h)


@given(st.lists(st.integers(0, 60), min_size=1, max_size=7, unique=True), st.integers(0, 8))
def test_bitmask_matches_sets(elements, H):
    assert growth_bitmask(elements, H) == iterate_sumsets(FiniteSet.of(elements), H)


def test_sets_flag_returns_sumsets():
    levels = iterate_sumsets(FiniteSet.of([0, 1, 3]), 2, sets=True)
    assert levels[2] == (0, 1, 2, 3, 4, 6)


def test_arithmetic_progression_law():
    for n in range(1, 11):
        growth = iterate_sumsets(FiniteSet.of(range(n)), 10)
        assert growth == [h * (n - 1) + 1 for h in range(11)]


def test_sidon_set_is_maximal_at_two():
    growth = iterate_sumsets(FiniteSet.of([0, 1, 3, 7]), 2)
    assert growth[2] == binom_int(5, 2) == 10


@given(int_sets, st.integers(1, 5))
def test_range_law(elements, h):
    n = len(elements)
    size = iterate_sumsets(FiniteSet.of(elements), h)[h]
    assert h * (n - 1) + 1 <= size <= binom_int(n - 1 + h, h)


@given(int_sets, st.integers(-5, 5).filter(bool), st.integers(-100, 100), st.integers(1, 5))
def test_translation_dilation_invariance(elements, lam, c, h):
    moved = [lam * a + c for a in elements]
    assert (iterate_sumsets(FiniteSet.of(moved), h)[h]
            == iterate_sumsets(FiniteSet.of(elements), h)[h])


@given(st.integers(1, 30), st.lists(st.integers(0, 200), min_size=1, max_size=6),
       st.integers(1, 6))
def test_cyclic_group_cap(n, elements, H):
    growth = iterate_sumsets(FiniteSet.of(elements, mod=n), H)
    assert all(g <= n for g in growth)
    for h in range(1, H + 1):
        residues = sorted({a % n for a in elements})
        assert growth[h] == naive_sumset_size(residues, h, lambda a, b: (a + b) % n)


vec_sets = st.lists(st.tuples(st.integers(-5, 5), st.integers(-5, 5)), min_size=1, max_size=5,
                    unique=True)


@given(vec_sets, st.integers(1, 4))
def test_vector_sumsets_match_naive(elements, H):
    growth = iterate_sumsets(FiniteSet.of(elements), H)
    for h in range(1, H + 1):
        assert growth[h] == naive_sumset_size(
            elements, h, lambda a, b: (a[0] + b[0], a[1] + b[1]), (0, 0))


@settings(max_examples=200)
@given(st.one_of(int_sets.map(FiniteSet.of), vec_sets.map(FiniteSet.of),
                 st.tuples(st.integers(2, 40), int_sets).map(lambda t: FiniteSet.of(t[1], t[0]))),
       st.integers(1, 6))
def test_growth_is_o_sequence(A, H):
    growth = iterate_sumsets(A, H)
    assert is_o_sequence(growth).ok, (A, growth)


def test_growth_nondecreasing_when_zero_in_set():
    rng = random.Random(1)
    for _ in range(100):
        A = FiniteSet.of([0] + rng.sample(range(1, 50), rng.randint(0, 5)))
        growth = iterate_sumsets(A, 6)
        assert all(a <= b for a, b in zip(growth, growth[1:]))


def test_cap_exceeded_carries_partial():
    with pytest.raises(CapExceeded) as info:
        iterate_sumsets(FiniteSet.of([0, 1, 5, 8, 49]), 6, cap=50)
    assert info.value.partial == [1, 5, 15, 34]


def test_parse_set():
    assert parse_set("0,1,5,8,49").elements == (0, 1, 5, 8, 49)
    assert parse_set(" 3, 1 ,3").elements == (1, 3)
    A = parse_set("(0,0),(1,2),(3,1)")
    assert A.ambient == Ambient("Zd", 2) and len(A) == 3
    B = parse_set("0,7,12", mod=5)
    assert B.ambient == Ambient("Zn", 5) and B.elements == (0, 2)
    for bad in ("", "1,,2", "a,b", "(0,0),(1)", "(0,0)x"):
        with pytest.raises(ValueError):
            parse_set(bad)
    with pytest.raises(ValueError):
        parse_set("(0,1)", mod=3)


def test_bound_report_examples():
    rep = bound_report(100, 5)
    assert rep.plunnecke == (40, 251)
    assert rep.condensed == (58, 161)
    assert rep.macaulay == (61, 152)
    assert rep.lower_chain_ok and rep.upper_chain_ok
    assert rep.x.strictly_inside(Fraction(869, 100), Fraction(87, 10))
    for h in range(2, 8):
        one = bound_report(1, h)
        assert one.plunnecke == one.condensed == one.macaulay == (1, 1)
    assert bound_report(220, 3).macaulay[1] == binom_int(13, 4) == 715
    d = rep.to_dict()
    assert d["macaulay"] == {"lower_prev": 61, "upper_next": 152}
    assert d["dominance"] is True


def test_check_bounds_witness():
    verdicts = check_bounds(FiniteSet.of([0, 1, 5, 8, 49]), 6)
    at5 = next(v for v in verdicts if v["h"] == 5)
    assert (at5["prev"], at5["m"], at5["next"]) == (63, 100, 145)
    assert at5["bounds"]["macaulay"]["lower_prev"] == 61
    assert at5["bounds"]["macaulay"]["upper_next"] == 152
    assert all(v["ok"] for v in verdicts)


def test_check_bounds_singleton():
    for v in check_bounds(FiniteSet.of([7]), 6):
        assert v["m"] == v["prev"] == v["next"] == 1
        assert all(b["lower_prev"] == b["upper_next"] == 1 for b in v["bounds"].values())


def test_check_bounds_random_sets():
    rng = random.Random(200)
    for _ in range(200):
        A = FiniteSet.of(rng.sample(range(80), rng.randint(1, 8)))
        bad = [v for v in check_bounds(A, 6) if not v["ok"]]
        assert not bad, (A, bad)


def test_check_bounds_cyclic_and_vector():
    rng = random.Random(5)
    for _ in range(50):
        n = rng.randint(2, 30)
        A = FiniteSet.of(rng.sample(range(n), rng.randint(1, min(n, 6))), mod=n)
        assert all(v["ok"] for v in check_bounds(A, 5))
        pts = {(rng.randint(0, 6), rng.randint(0, 6)) for _ in range(5)}
        assert all(v["ok"] for v in check_bounds(FiniteSet.of(sorted(pts)), 5))


def brute_extremum(h, i, m, size, max_elem):
    """Extremal |iA| over all subsets of [0, max_elem] containing 0, no normalization."""
    best = None
    for rest in itertools.combinations(range(1, max_elem + 1), size - 1):
        g = growth_bitmask((0,) + rest, max(h, i))
        if g[h] == m:
            v = g[i]
            if best is None or (v > best if i > h else v < best):
                best = v
    return best


@pytest.mark.parametrize("h,i,m,size,max_elem", [
    (2, 3, 6, 3, 20), (2, 1, 6, 3, 20), (3, 4, 18, 4, 16), (2, 3, 9, 4, 14), (3, 2, 15, 4, 15),
])
def test_search_matches_brute_force(h, i, m, size, max_elem):
    res = extremal_search(h, i, m, size, max_elem)
    assert res.exhaustive
    assert res.best == brute_extremum(h, i, m, size, max_elem)
    if res.witness is not None:
        g = growth_bitmask(res.witness, max(h, i))
        assert g[h] == m and g[i] == res.best


def test_search_examples():
    res = extremal_search(5, 6, 100, 5, 50)
    assert res.exhaustive and res.best == 145
    assert res.witness == (0, 1, 5, 8, 49) or growth_bitmask(res.witness, 6)[6] == 145
    b3 = extremal_search(2, 3, 6, 3, 50)
    assert b3.best == 10 and b3.exhaustive
    same = extremal_search(4, 4, 77, 5, 30)
    assert same.best == 77
    assert "exhaustive" in res.label


def test_search_workers_deterministic():
    a = extremal_search(3, 4, 18, 4, 25, workers=1)
    b = extremal_search(3, 4, 18, 4, 25, workers=2)
    assert a.to_dict() == b.to_dict()


def test_search_hill_climb_labelled():
    res = extremal_search(2, 3, 10, 4, 200, budget=2000, seed=3)
    assert not res.exhaustive
    assert "not exhaustive" in res.label
    if res.witness is not None:
        g = growth_bitmask(res.witness, 3)
        assert g[2] == 10 and g[3] == res.best


def test_search_cyclic():
    res = extremal_search(2, 3, 6, 3, 100, mod=11)
    assert res.group == "Z/11" and res.exhaustive
    if res.witness is not None:
        g = iterate_sumsets(FiniteSet.of(res.witness, mod=11), 3)
        assert g[2] == 6 and g[3] == res.best <= 11
