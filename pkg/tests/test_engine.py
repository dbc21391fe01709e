"""Engine-level contracts: normalization, parity, budget, errors."""

import random

import pytest

from spinhecke.coeff import EPS2, L_ONE, laurent
from spinhecke.engine import (AlgebraMismatchError, Element, element_str,
                              mul, normalize, word_str)
from spinhecke.finite import cover_ops, spin_ops
from spinhecke.affine import spin_aff_ops
from spinhecke.heckecliff import hc_ops
from spinhecke.exprs import get_algebra


def test_normalize_idempotent_on_basis():
    for alg, n in (("spin", 4), ("cover", 3), ("thecke", 3), ("hc", 3)):
        ops = get_algebra(alg, n)
        for w in ops.basis():
            e = normalize(ops, ops.word_atoms(w))
            assert e.terms == {w: L_ONE}


def test_normalize_idempotent_affine_random():
    rng = random.Random(17)
    for alg in ("spin-aff", "pq-aff", "cover-aff", "hc-aff", "tensor-aff"):
        ops = get_algebra(alg, 2)
        for _ in range(40):
            w = ops.random_word(rng)
            e = normalize(ops, ops.word_atoms(w))
            assert e.terms == {w: L_ONE}


def test_parity_values():
    s3 = spin_ops(3)
    assert (s3.gen("R1") * s3.gen("R2")).parity() == "even"
    assert s3.gen("R1").parity() == "odd"
    assert (s3.one() + s3.gen("R1")).parity() == "mixed"
    assert s3.zero().parity() == "even"
    a2 = spin_aff_ops(2)
    assert (a2.gen("q1") * a2.gen("R1")).parity() == "even"
    hc2 = hc_ops(2)
    assert (hc2.gen("c1") * hc2.gen("T1")).parity() == "odd"


def test_algebra_mismatch():
    with pytest.raises(AlgebraMismatchError):
        spin_ops(3).gen("R1") * spin_ops(4).gen("R1")
    with pytest.raises(AlgebraMismatchError):
        spin_ops(3).gen("R1") + cover_ops(3).gen("Tt1")


def test_scalar_promotion():
    s = spin_ops(2)
    r1 = s.gen("R1")
    assert 2 * r1 == r1 + r1
    assert r1 * 2 == r1.scale(2)
    assert r1 - 0 == r1
    assert (r1 * r1) + laurent({2: 1, -2: 1}) == s.zero()


def test_mul_bilinear():
    s = spin_ops(3)
    a, b, c = s.gen("R1"), s.gen("R2"), s.gen("R1") * s.gen("R2")
    assert (a + b) * c == a * c + b * c
    assert c * (a + b) == c * a + c * b


def test_word_and_element_text():
    s = spin_ops(3)
    assert word_str(s, (1, 2)) == "R1*R2*R1"
    assert word_str(s, (0, 0)) == "1"
    assert element_str(s.zero()) == "0"
    a = spin_aff_ops(2)
    w = a.word((2, 0), (1, 0), (1,))
    assert word_str(a, w) == "p1^2*q1*R1"


def test_power_operator():
    s = spin_ops(3)
    r1 = s.gen("R1")
    assert r1 ** 2 == r1 * r1
    assert r1 ** 0 == s.one()


def test_step_budget_counter_resets():
    s = spin_ops(4)
    x = s.gen("R3") * s.gen("R2") * s.gen("R1")
    y = x * x
    assert s._steps < 10_000  # desk-scale products stay far under budget
    assert y == mul(x, x)
