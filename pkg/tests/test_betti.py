import pytest
from hypothesis import assume, given, settings, strategies as st

from linkhom.betti import (
    NablaTuple,
    dim_and_connectivity,
    nabla_enumerate,
    p3_closed,
    p3_hausmann_knutson,
    p3_klyachko,
    p3_r_form,
    p3_recursive,
    p5_closed,
    pair_poincare,
    pair_poincare_closed,
    poincare_odd,
    u_shift,
)
from linkhom.errors import EmptyModuli, EvenDimension, NonGeneric, TooShort, UnsupportedDimension
from linkhom.lengths import LengthVector, enumerate_chambers, is_generic, morse_numbers, short_set_stats
from linkhom.poly import IntPolynomial, q_poly

L = LengthVector
P = IntPolynomial.from_degrees


def test_nabla_enumerate():
    assert nabla_enumerate(0, 3) == [NablaTuple(())]
    assert nabla_enumerate(0, 0) == []
    assert [t.j for t in nabla_enumerate(1, 6)] == [(0,), (1,), (2,)]
    assert [t.j for t in nabla_enumerate(2, 5)] == [(0, 0), (1, 0), (1, 1), (2, 0), (2, 1), (2, 2)]
    assert NablaTuple(()).norm == 1 and NablaTuple((3, 1)).norm == 7 and NablaTuple((3, 1)).size == 4
    with pytest.raises(ValueError):
        NablaTuple((1, 2))


SIX = L([1, 1, 1, 1, 1, 4])


@pytest.mark.parametrize("fn", [p3_recursive, p3_klyachko, p3_hausmann_knutson, p3_closed, p3_r_form])
def test_p3_examples(fn):
    assert fn(SIX) == P([0, 2, 4, 6])
    assert fn(L([1, 1, 1])) == P([0])
    assert fn(L([1, 1, 1, 1, 1])) == IntPolynomial([1, 0, 5, 0, 1])


def test_p3_empty_and_nongeneric():
    assert p3_recursive(L([1, 2, 4])).is_zero()
    with pytest.raises(NonGeneric):
        p3_recursive(L([1, 1, 1, 1]))
    with pytest.raises(EmptyModuli):
        p3_klyachko(L([1, 2, 4]))


def test_p3_over_all_chambers_up_to_six():
    for n in (4, 5, 6):
        for c in enumerate_chambers(n, require_nonempty=True):
            ref = p3_recursive(c.witness)
            assert p3_klyachko(c.witness) == ref
            assert p3_hausmann_knutson(c.witness) == ref
            assert p3_closed(c.witness) == ref
            assert ref(1) == sum(morse_numbers(c.witness).mu)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 40), min_size=4, max_size=9).map(L))
def test_p3_quadruple_agreement_random(ell):
    assume(is_generic(ell)[0] and short_set_stats(ell).a0_nonempty)
    ref = p3_recursive(ell)
    assert p3_klyachko(ell) == p3_hausmann_knutson(ell) == p3_closed(ell) == p3_r_form(ell) == ref


def test_pair_poincare_examples():
    assert pair_poincare(5, 3) == P([9])
    assert pair_poincare(5, 4) == P([13])
    assert pair_poincare(5, 5) == P([13, 17])
    assert pair_poincare(4, 2) == P([5])
    assert pair_poincare(6, 4) == P([14])
    assert pair_poincare(6, 6) == P([16, 20, 20, 24])
    assert pair_poincare(7, 5) == P([20])
    assert pair_poincare(5, 1).is_zero() and pair_poincare(9, 6).is_zero()
    assert pair_poincare(7, 0) == P([0])


def test_pair_poincare_matches_closed_forms():
    for d in (4, 5, 6, 7):
        for k in range(d - 2, 15):
            assert pair_poincare(d, k) == pair_poincare_closed(d, k), (d, k)
    with pytest.raises(UnsupportedDimension):
        pair_poincare_closed(8, 6)
    assert pair_poincare_closed(6, 6) == q_poly(2).compose_t_power(4).shift(16)


def test_pair_poincare_odd_degrees_share_parity_and_respect_connectivity():
    for m in range(0, 3):
        d = 2 * m + 5
        conn = dim_and_connectivity(d + 1, d).connectivity
        for k in range(d - 2, 14):
            p = pair_poincare(d, k)
            assert {e % 2 for e, _ in p.terms()} == {u_shift(k, m) % 2}
            assert p.low_degree() > conn


def test_poincare_odd_and_p5():
    assert poincare_odd(SIX, 5) == P([0, 9])
    assert p5_closed(SIX) == P([0, 9])
    assert p5_closed(L([1, 1, 1, 1, 1])) == P([0])
    with pytest.raises(EvenDimension):
        poincare_odd(SIX, 4)
    with pytest.raises(TooShort):
        p5_closed(L([1, 1, 1, 1.5]))


def test_p5_seven_gons():
    for c in enumerate_chambers(7, require_nonempty=True):
        a = c.a
        p = p5_closed(c.witness)
        assert p == poincare_odd(c.witness, 5)
        if a[4] == 0:
            assert 0 <= a[1] <= 6
            assert p == IntPolynomial.from_dict({0: 1, 9: a[1] + 1, 13: 1})


def test_dim_and_connectivity():
    assert dim_and_connectivity(6, 4).dimension == 8
    assert dim_and_connectivity(6, 5).sphere_dimension == 9
    assert dim_and_connectivity(6, 5).dimension == 9
    assert dim_and_connectivity(9, 5).connectivity == 8
    assert dim_and_connectivity(6, 3).sphere_dimension is None
