"""Exact scalar arithmetic."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from spinhecke.coeff import (CoeffError, EPS, EPS2, GR_I, GaussRat, I, L_ONE,
                             L_ZERO, Laurent, Q, QINV, epsilon, gauss_str,
                             laurent, laurent_exact_div, laurent_str)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=9)


def small_laurents():
    pair = st.tuples(st.integers(-4, 4),
                     st.tuples(rationals, rationals))
    return st.lists(pair, max_size=4).map(
        lambda ps: Laurent({e: GaussRat(a, b) for e, (a, b) in ps}))


def test_difference_of_squares():
    assert (Q - QINV) * (Q + QINV) == laurent({2: 1, -2: -1})


def test_eps_square():
    assert EPS * EPS == laurent({2: 1, 0: -2, -2: 1})


def test_i_square():
    assert I * I == laurent({0: -1})


def test_epsilon_values():
    assert epsilon() == Q - QINV
    assert epsilon() ** 2 + 2 == laurent({2: 1, -2: 1})
    assert epsilon().evaluate(GaussRat(1)) == GaussRat(0)


def test_evaluate():
    assert laurent({2: 1, -2: 1}).evaluate(GaussRat(1)) == GaussRat(2)
    assert EPS.evaluate(GaussRat(2)) == GaussRat(Fraction(3, 2))
    with pytest.raises(CoeffError):
        EPS.evaluate(GaussRat(0))


def test_zero_is_canonical():
    assert laurent({3: 0}) == L_ZERO
    assert not (Q - Q)
    assert (Q - Q).terms == {}


def test_units_and_powers():
    assert Q ** -3 == QINV ** 3
    half_q = laurent({1: Fraction(1, 2)})
    assert half_q ** -1 == laurent({-1: 2})
    with pytest.raises(CoeffError):
        (Q + QINV) ** -1


def test_exact_division():
    assert laurent_exact_div(EPS2 * Q, EPS) == EPS * Q
    assert laurent_exact_div(L_ZERO, EPS) == L_ZERO
    with pytest.raises(CoeffError):
        laurent_exact_div(Q + 1, EPS)


def test_bar_and_conj():
    assert EPS.bar() == -EPS
    assert (Q * I).conj_i() == laurent({1: -GR_I})


def test_gauss_division():
    a = GaussRat(1, 2)
    b = GaussRat(Fraction(3, 4), -1)
    assert (a * b) / b == a
    with pytest.raises(CoeffError):
        a / GaussRat(0)


def test_printing():
    assert laurent_str(laurent({-1: Fraction(3, 2), 2: GR_I})) \
        == "3/2*q^-1 + i*q^2"
    assert laurent_str(EPS) == "-q^-1 + q"
    assert laurent_str(L_ZERO) == "0"
    assert laurent_str(L_ONE) == "1"
    assert gauss_str(GaussRat(1, -2)) == "1 - 2*i"


@settings(max_examples=60, deadline=None)
@given(small_laurents(), small_laurents(), small_laurents())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c


@settings(max_examples=60, deadline=None)
@given(small_laurents())
def test_canonical_form(a):
    assert all(v for v in a.terms.values())
    assert a - a == L_ZERO
    assert a.bar().bar() == a
