"""Expression grammar: parsing, evaluation, canonical round trips."""

import random
from fractions import Fraction

import pytest

from spinhecke.coeff import GR_I, laurent
from spinhecke.engine import Element, element_str
from spinhecke.exprs import (ALGEBRAS, ParseError, evaluate, get_algebra,
                             parse, parse_element)
from spinhecke.suites import random_element


def test_braid_expression():
    lhs = parse_element("R2*R1*R2", "spin", 3)
    rhs = parse_element("R1*R2*R1 - e^2*(R2 - R1)", "spin", 3)
    assert lhs == rhs


def test_loop_relation_expression():
    assert parse_element("p1^2+q1^2", "spin-aff", 2) \
        == parse_element("1", "spin-aff", 2)


def test_scalar_literals():
    ops = get_algebra("spin", 2)
    x = parse_element("3/2*q^-1 + i*q^2", "spin", 2)
    assert x.coeff(ops.one_word()) == laurent({-1: Fraction(3, 2), 2: GR_I})
    assert parse_element("e", "spin", 2) == parse_element("q - q^-1", "spin", 2)


def test_index_out_of_range():
    with pytest.raises(ParseError) as err:
        parse_element("R5", "spin", 3)
    assert "out of range" in str(err.value)


def test_unknown_symbol_offset():
    with pytest.raises(ParseError) as err:
        parse_element("R1 + w2", "spin", 3)
    assert err.value.offset == 5


def test_syntax_errors():
    for bad in ("", "R1 +* R2", "(R1", "R1^", "2/"):
        with pytest.raises(ParseError):
            parse_element(bad, "spin", 3)


def test_unknown_algebra():
    with pytest.raises(ParseError):
        get_algebra("quantum", 2)


def test_negative_powers():
    assert parse_element("X1^-2*X1^2", "hc-aff", 2) \
        == parse_element("1", "hc-aff", 2)
    assert parse_element("Xi1^2", "hc-aff", 2) \
        == parse_element("X1^-2", "hc-aff", 2)
    assert parse_element("z^-1", "cover", 2) == parse_element("z", "cover", 2)
    with pytest.raises(Exception):
        parse_element("p1^-1", "spin-aff", 2)


def test_unary_minus():
    assert parse_element("-R1", "spin", 2) == -parse_element("R1", "spin", 2)


def test_round_trip_all_algebras():
    rng = random.Random(8)
    cases = [("spin", 3), ("cover", 3), ("thecke", 3), ("hc", 3),
             ("hc-aff", 2), ("hecke-aff", 2), ("spin-aff", 2), ("pq-aff", 2),
             ("cover-aff", 2), ("tensor", 3), ("tensor-aff", 2)]
    for alg, n in cases:
        ops = get_algebra(alg, n)
        for _ in range(10):
            x = random_element(ops, rng)
            text = element_str(x)
            assert evaluate(parse(text, ops), ops) == x, (alg, text)


def test_registry_contains_hecke_aff():
    assert "hecke-aff" in ALGEBRAS
