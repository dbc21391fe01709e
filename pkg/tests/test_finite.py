"""Finite staircase families: spin, covering, symmetrized Hecke."""

import math
import random

import pytest

from spinhecke.coeff import EPS2, L_ONE, laurent
from spinhecke.engine import (BudgetExceededError, Element,
                              InvalidGeneratorError, mul, normalize, word_str)
from spinhecke.finite import (cover_ops, cover_quotient, spin_ops,
                              spin_rewrite, staircase_letters, thecke_ops)

MQ2 = laurent({2: -1, -2: -1})


def test_square_relation():
    s = spin_ops(3)
    r1 = s.gen("R1")
    assert r1 * r1 == s.scalar(MQ2)


def test_distant_anticommute():
    s = spin_ops(5)
    assert s.gen("R3") * s.gen("R1") == -(s.gen("R1") * s.gen("R3"))


def test_braid_defect():
    s = spin_ops(3)
    r1, r2 = s.gen("R1"), s.gen("R2")
    assert r1 * r2 * r1 - r2 * r1 * r2 == (r2 - r1).scale(EPS2)


def test_normalize_standard_word_unchanged():
    s = spin_ops(3)
    e = normalize(s, [("R", 2), ("R", 1)])
    assert e.terms == {(0, 2): L_ONE}


def test_mul_worked_example():
    # (R2 R1 R2) R1 in rank 3
    s = spin_ops(3)
    r1, r2 = s.gen("R1"), s.gen("R2")
    got = (r2 * r1 * r2) * r1
    want = (r1 * r2).scale(MQ2) + (r2 * r1).scale(-EPS2) \
        + s.scalar(-EPS2 * (EPS2 + 2))
    assert got == want


def test_basis_counts():
    for n in (1, 2, 3, 4, 5):
        assert len(spin_ops(n).basis()) == math.factorial(n)
        assert len(thecke_ops(n).basis()) == math.factorial(n)
        assert len(cover_ops(n).basis()) == 2 * math.factorial(n)


def test_basis_words_rank3():
    s = spin_ops(3)
    words = {word_str(s, w) for w in s.basis()}
    assert words == {"1", "R1", "R2", "R2*R1", "R1*R2", "R1*R2*R1"}


def test_even_basis():
    s3 = spin_ops(3)
    evens = {word_str(s3, w) for w in s3.even_basis()}
    assert evens == {"1", "R2*R1", "R1*R2"}
    assert len(spin_ops(2).even_basis()) == 1
    assert len(cover_ops(3).even_basis()) == 6
    for n in (2, 3, 4, 5):
        assert len(spin_ops(n).even_basis()) == math.factorial(n) // 2
        assert len(cover_ops(n).even_basis()) == math.factorial(n)


def test_even_subalgebra_closure():
    s = spin_ops(3)
    evens = s.even_basis()
    allowed = set(evens)
    for wa in evens:
        for wb in evens:
            prod = mul(s.element(wa), s.element(wb))
            assert set(prod.terms) <= allowed


def test_staircase_letters():
    assert staircase_letters((1, 2)) == (1, 2, 1)
    assert staircase_letters((0, 0)) == ()


def test_spin_rewrite_outcomes():
    out = spin_rewrite((1, 1), 3)
    assert dict(out.replacement) == {(0, 0): MQ2}
    out = spin_rewrite((3, 1), 5)
    assert dict(out.replacement) == {(1, 0, 1, 0): -L_ONE}
    out = spin_rewrite((2, 1, 2), 3)
    assert dict(out.replacement) == {(1, 2): L_ONE, (0, 1): -EPS2,
                                     (1, 0): EPS2}
    with pytest.raises(InvalidGeneratorError):
        spin_rewrite((1, 2), 3)  # already standard


def test_cover_square_and_quotients():
    c = cover_ops(2)
    t = c.gen("Tt1")
    sq = t * t
    assert cover_quotient(1, sq) == thecke_ops(2).scalar(
        laurent({2: 1, -2: 1, 0: 2}))
    assert cover_quotient(-1, sq) == spin_ops(2).scalar(MQ2)
    z = c.gen("z")
    x = z * t + t
    assert cover_quotient(1, z * x) == cover_quotient(1, x)
    assert cover_quotient(-1, z * t) == -cover_quotient(-1, t)


def test_thecke_square():
    t = thecke_ops(2).gen("Tc1")
    assert t * t == thecke_ops(2).scalar(laurent({2: 1, -2: 1, 0: 2}))


def test_closure_rank4():
    s = spin_ops(4)
    words = s.basis()
    allowed = set(words)
    for wa in words:
        ea = s.element(wa)
        for wb in words:
            assert set(mul(ea, s.element(wb)).terms) <= allowed


def test_invalid_generator():
    s = spin_ops(3)
    with pytest.raises(InvalidGeneratorError):
        s.gen("R7")
    with pytest.raises(InvalidGeneratorError):
        normalize(s, [("R", 0)])


def test_associativity_random():
    rng = random.Random(20060515)
    for ops in (spin_ops(3), cover_ops(3), thecke_ops(3)):
        ws = ops.basis()
        for _ in range(60):
            x, y, z = (Element(ops, {rng.choice(ws): L_ONE}) for _ in range(3))
            assert (x * y) * z == x * (y * z)
