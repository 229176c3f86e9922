from math import comb

import pytest
from hypothesis import assume, given, settings, strategies as st

from linkhom.betti import nabla_enumerate, pair_poincare
from linkhom.errors import OddDimension, TooShort
from linkhom.euler import (
    BettiBound,
    betti_bounds,
    chi_filtration,
    chi_m4,
    chi_m6,
    chi_pair_even,
    kamiyama_equilateral,
)
from linkhom.lengths import LengthVector, is_generic, short_set_stats

L = LengthVector
SHAPE8 = L([1] * 7 + [6])
EXAMPLE8 = L([1, 1, 1, 1, 1, 3, 3, 6])


def test_chi_pair_small_dimensions():
    for k in range(1, 15):
        assert chi_pair_even(4, k) == (-1) ** (k + 1) * (k - 1)
    for kk in range(1, 8):
        assert chi_pair_even(6, 2 * kk) == (kk - 1) ** 2
        assert chi_pair_even(6, 2 * kk + 1) == -kk * (kk - 1)
    assert chi_pair_even(6, 0) == 1
    with pytest.raises(OddDimension):
        chi_pair_even(5, 3)


def test_chi_pair_is_poincare_at_minus_one():
    for d in (4, 6, 8):
        for k in range(15):
            assert chi_pair_even(d, k) == pair_poincare(d, k)(-1)


def test_chi_pair_consecutive_sum():
    for m in range(4):
        for k in range(m + 1, 11):
            d = 2 * m + 4
            total = chi_pair_even(d, 2 * k) + chi_pair_even(d, 2 * k + 1)
            assert total == (-1) ** m * len(nabla_enumerate(m, 2 * k - 2 * m - 1))


def test_worked_values():
    assert chi_m4(SHAPE8) == 3
    assert chi_m6(SHAPE8) == 0
    assert chi_m4(EXAMPLE8) == 3
    assert chi_m6(EXAMPLE8) == 5


def test_kamiyama():
    assert kamiyama_equilateral(2) == 0
    assert kamiyama_equilateral(3) == -10
    assert kamiyama_equilateral(4) == 70
    for m in range(2, 9):
        ell = L([1] * (2 * m + 1))
        assert chi_m4(ell) == kamiyama_equilateral(m) == (-1) ** m * (m - 2) * comb(2 * m - 1, m - 1)


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(1, 40), min_size=5, max_size=11).map(L))
def test_closed_equals_filtration_sum(ell):
    assume(is_generic(ell)[0] and short_set_stats(ell).a0_nonempty)
    assert chi_m4(ell) == chi_filtration(ell, 4)
    if ell.n >= 7:
        assert chi_m6(ell) == chi_filtration(ell, 6)


def test_bounds_example():
    bounds = {b.degree: b for b in betti_bounds(EXAMPLE8, 4)}
    assert bounds[11].lower == 5
    assert bounds[11].exact_difference == 5
    assert bounds[8].lower == 5 and bounds[8].upper == 17
    with pytest.raises(TooShort):
        betti_bounds(L([1, 1, 1, 1, 1]), 4)
    with pytest.raises(ValueError):
        BettiBound(3, 2, 1)


def test_bounds_shape_space_difference():
    # (1,...,1,n-2): a_1 = a_{n-3} = 0 and the top X^(n-3) cancels the single X^(n-4) class
    for n in range(6, 11):
        b = betti_bounds(L([1] * (n - 1) + [n - 2]), 4)[0]
        assert b.degree == 3 * (n - 1) - 10 and b.exact_difference == 0


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 40), min_size=6, max_size=11).map(L))
def test_bounds_consistent(ell):
    assume(is_generic(ell)[0] and short_set_stats(ell).a0_nonempty)
    for d in (4, 6):
        if (d == 4 and ell.n >= 6) or (d == 6 and ell.n >= 9):
            for b in betti_bounds(ell, d):
                assert 0 <= b.lower <= b.upper
