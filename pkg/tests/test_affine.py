"""Affine families: loop relations, recursions, center, covering quotients."""

import random

import pytest

from spinhecke.coeff import EPS, EPS2, L_ONE
from spinhecke.engine import Element, InvalidGeneratorError, mul
from spinhecke.affine import (cover_aff_ops, cover_aff_quotient,
                              elementary_symmetric, odd_center_candidate,
                              pq_aff_ops, recursion_images, spin_aff_ops,
                              spin_aff_rewrite)


def test_defining_relations_rank2():
    a = spin_aff_ops(2)
    r1, p1, p2, q1, q2 = (a.gen(g) for g in ("R1", "p1", "p2", "q1", "q2"))
    assert r1 * p1 == p2 * r1 + (q1 - q2).scale(EPS)
    assert r1 * q1 == -(q2 * r1) - (p1 + p2).scale(EPS)
    assert r1 * p2 == p1 * r1 - (q1 - q2).scale(EPS)
    assert r1 * q2 == -(q1 * r1) - (p1 + p2).scale(EPS)
    assert p1 * p2 == p2 * p1
    assert q1 * q2 == -(q2 * q1)
    assert p1 * q1 == q1 * p1
    assert p1 * p1 + q1 * q1 == a.one()


def test_q_square_eliminated():
    a = spin_aff_ops(2)
    q1, p1 = a.gen("q1"), a.gen("p1")
    assert q1 * q1 == a.one() - p1 * p1


def test_distant_commutation_rank3():
    a = spin_aff_ops(3)
    r1 = a.gen("R1")
    assert r1 * a.gen("p3") == a.gen("p3") * r1
    assert r1 * a.gen("q3") == -(a.gen("q3") * r1)


def test_worked_product():
    a = spin_aff_ops(2)
    r1, p1, p2, q1, q2 = (a.gen(g) for g in ("R1", "p1", "p2", "q1", "q2"))
    got = r1 * (p1 * r1)
    want = p2.scale(-(EPS2 + 2)) + (q1 * r1).scale(EPS) - (q2 * r1).scale(EPS)
    assert got == want


def test_recursions():
    a2 = spin_aff_ops(2)
    pn, qn = recursion_images(1, 2)
    assert pn == a2.gen("p2") and qn == a2.gen("q2")
    a3 = spin_aff_ops(3)
    pn, qn = recursion_images(2, 3)
    assert pn == a3.gen("p3") and qn == a3.gen("q3")
    with pytest.raises(InvalidGeneratorError):
        recursion_images(2, 2)


def test_rewrite_pair():
    out = spin_aff_rewrite(("R", 1), ("p", 1), 2)
    terms = dict(out.replacement)
    a = spin_aff_ops(2)
    want = a.gen("p2") * a.gen("R1") + (a.gen("q1") - a.gen("q2")).scale(EPS)
    assert terms == want.terms
    out = spin_aff_rewrite(("q", 1), ("q", 1), 2)
    assert dict(out.replacement) == (a.one() - a.gen("p1") ** 2).terms


def test_center():
    a3 = spin_aff_ops(3)
    gens = [a3.gen(g) for g in a3.gen_atoms()]
    for k in (1, 2, 3):
        ek = elementary_symmetric(a3, k)
        assert all(ek * g == g * ek for g in gens), k
    a2 = spin_aff_ops(2)
    p1, r1 = a2.gen("p1"), a2.gen("R1")
    diff = r1 * p1 - p1 * r1
    expect = (a2.gen("p2") - p1) * r1 + (a2.gen("q1") - a2.gen("q2")).scale(EPS)
    assert diff == expect and diff


def test_odd_center():
    a3 = spin_aff_ops(3)
    cand = odd_center_candidate(a3)
    assert cand.parity() == "odd"
    assert all(cand * a3.gen(g) == a3.gen(g) * cand for g in a3.gen_atoms())
    a1 = spin_aff_ops(1)
    c1 = odd_center_candidate(a1)
    assert all(c1 * a1.gen(g) == a1.gen(g) * c1 for g in a1.gen_atoms())
    a2 = spin_aff_ops(2)
    c2 = odd_center_candidate(a2)
    assert c2 * a2.gen("R1") != a2.gen("R1") * c2


def test_covering_equivalences_rank2():
    c = cover_aff_ops(2)
    tt, pt1, pt2, qt1, qt2, z = (c.gen(g) for g in
                                 ("Tt1", "Pt1", "Pt2", "Qt1", "Qt2", "z"))
    assert tt * pt1 == pt2 * tt - (qt2 + z * qt1).scale(EPS)
    assert tt * qt1 == z * qt2 * tt - (pt1 + pt2).scale(EPS)
    assert tt * pt2 == pt1 * tt + (qt2 + z * qt1).scale(EPS)
    assert tt * qt2 == z * qt1 * tt + (z * (pt1 + pt2)).scale(EPS)
    assert pt1 * pt1 - z * qt1 * qt1 == c.one()
    assert qt1 * qt2 == z * qt2 * qt1


def test_covering_recursions_rank2():
    from fractions import Fraction
    c = cover_aff_ops(2)
    tt, pt1, qt1, z = (c.gen(g) for g in ("Tt1", "Pt1", "Qt1", "z"))
    factor = c.scalar(Fraction(3, 8)) - z.scale(Fraction(1, 8))
    rhs_p = factor * (z * tt * pt1 * tt + (tt * qt1 + qt1 * tt).scale(EPS)
                      + pt1.scale(EPS2))
    assert rhs_p == c.gen("Pt2")
    rhs_q = factor * (tt * qt1 * tt + (tt * pt1 + pt1 * tt).scale(EPS)
                      + (z * qt1).scale(EPS2))
    assert rhs_q == c.gen("Qt2")


def test_cover_aff_quotients():
    c = cover_aff_ops(2)
    tt, pt1, qt1, z = (c.gen(g) for g in ("Tt1", "Pt1", "Qt1", "z"))
    spin = spin_aff_ops(2)
    got = cover_aff_quotient(-1, tt * qt1)
    want = -(spin.gen("q2") * spin.gen("R1")) \
        - (spin.gen("p1") + spin.gen("p2")).scale(EPS)
    assert got == want
    pq = pq_aff_ops(2)
    got = cover_aff_quotient(1, tt * pt1)
    want = pq.gen("P2") * pq.gen("Tc1") \
        - (pq.gen("Q2") + pq.gen("Q1")).scale(EPS)
    assert got == want
    assert cover_aff_quotient(1, pt1 * pt1 - z * qt1 * qt1) == pq.one()


def test_pq_family_relations():
    pq = pq_aff_ops(2)
    t, P1, P2, Q1, Q2 = (pq.gen(g) for g in ("Tc1", "P1", "P2", "Q1", "Q2"))
    assert P1 * P1 - Q1 * Q1 == pq.one()
    assert Q1 * Q2 == Q2 * Q1
    assert t * P1 == P2 * t - (Q2 + Q1).scale(EPS)
    assert t * Q1 == Q2 * t - (P1 + P2).scale(EPS)


def test_parity():
    a = spin_aff_ops(2)
    assert (a.gen("q1") * a.gen("R1")).parity() == "even"
    assert a.gen("p1").parity() == "even"
    assert a.gen("q1").parity() == "odd"
    assert (a.gen("q1") + a.gen("p1")).parity() == "mixed"


def test_associativity_random():
    rng = random.Random(99)
    for ops in (spin_aff_ops(3), cover_aff_ops(2), pq_aff_ops(2)):
        for _ in range(50):
            x, y, z = (Element(ops, {ops.random_word(rng): L_ONE})
                       for _ in range(3))
            assert mul(mul(x, y), z) == mul(x, mul(y, z))
