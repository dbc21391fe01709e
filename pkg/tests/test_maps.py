"""Morita super-equivalences and (anti-)involutions."""

import random

import pytest

from spinhecke.coeff import EPS, EPS2, Q, QINV, laurent
from spinhecke.engine import InvalidGeneratorError
from spinhecke.finite import spin_ops
from spinhecke.affine import spin_aff_ops
from spinhecke.heckecliff import hc_aff_ops, hc_ops
from spinhecke.tensor import tensor_ops
from spinhecke.maps import (affine_involution, named_map, phi_affine,
                            phi_finite, psi_affine, psi_finite,
                            spin_involution)

MQ2 = laurent({2: -1, -2: -1})


def test_phi_psi_on_generators():
    phi, psi = phi_finite(3), psi_finite(3)
    hc = hc_ops(3)
    tens = tensor_ops(spin_ops(3))
    assert phi(hc.gen("c1")) == tens.gen("c1")
    # T_i image satisfies the quadratic relation
    pt = phi(hc.gen("T1"))
    assert pt * pt - pt.scale(EPS) - tens.one() == tens.zero()
    # R_i image and its square
    rp = psi(tens.gen("R1"))
    c1, c2, t1 = hc.gen("c1"), hc.gen("c2"), hc.gen("T1")
    assert rp == (c1 - c2) * t1 + c2.scale(EPS)
    assert rp * rp == hc.scalar(MQ2)


def test_equivalent_expressions():
    hc = hc_ops(2)
    psi = psi_finite(2)
    rp = psi(tensor_ops(spin_ops(2)).gen("R1"))
    t1, c1, c2 = hc.gen("T1"), hc.gen("c1"), hc.gen("c2")
    t1inv = t1 - hc.scalar(EPS)
    assert t1 * t1inv == hc.one()
    assert rp == c1 * t1 - c2 * t1inv
    assert rp == t1 * c2 - t1inv * c1
    assert rp == -(t1 * (c1 - c2)) + c1.scale(EPS)


def test_supercommutation():
    psi = psi_finite(3)
    hc = hc_ops(3)
    rp = psi(tensor_ops(spin_ops(3)).gen("R2"))
    for j in (1, 2, 3):
        cj = hc.gen(f"c{j}")
        assert rp * cj == -(cj * rp)


def test_braid_transported():
    psi = psi_finite(3)
    tens = tensor_ops(spin_ops(3))
    r1, r2 = psi(tens.gen("R1")), psi(tens.gen("R2"))
    assert r1 * r2 * r1 - r2 * r1 * r2 == (r2 - r1).scale(EPS2)


def test_inverse_pair_finite():
    phi, psi = phi_finite(3), psi_finite(3)
    hc = hc_ops(3)
    tens = tensor_ops(spin_ops(3))
    for g in hc.gen_atoms():
        assert psi(phi(hc.gen(g))) == hc.gen(g)
    for g in tens.gen_atoms():
        assert phi(psi(tens.gen(g))) == tens.gen(g)
    rng = random.Random(4)
    for _ in range(40):
        x = _rand(hc, rng)
        assert psi(phi(x)) == x


def test_affine_images():
    phi, psi = phi_affine(2), psi_affine(2)
    hca = hc_aff_ops(2)
    tens = tensor_ops(spin_aff_ops(2))
    assert phi(hca.gen("X1")) * phi(hca.gen("Xi1")) == tens.one()
    p1, q1 = psi(tens.gen("p1")), psi(tens.gen("q1"))
    assert p1 * q1 == q1 * p1
    for g in hca.gen_atoms():
        assert psi(phi(hca.gen(g))) == hca.gen(g)
    for g in tens.gen_atoms():
        assert phi(psi(tens.gen(g))) == tens.gen(g)


def test_multiplicativity_random():
    rng = random.Random(5)
    phi = phi_finite(3)
    hc = hc_ops(3)
    for _ in range(30):
        x, y = _rand(hc, rng), _rand(hc, rng)
        assert phi(x * y) == phi(x) * phi(y)


def _rand(ops, rng):
    from spinhecke.suites import random_element
    return random_element(ops, rng)


def test_finite_involutions():
    s3 = spin_ops(3)
    sig = spin_involution("sigma", 3)
    assert sig(s3.gen("R1")) == s3.gen("R2")
    s = spin_involution("s", 3)
    rng = random.Random(6)
    for _ in range(10):
        x = _rand(s3, rng)
        assert s(s(x)) == x
    tau = spin_involution("tau", 3)
    assert tau(s3.gen("R1") * s3.gen("R2")) == s3.gen("R2") * s3.gen("R1")
    bar = spin_involution("bar", 3)
    assert bar(s3.gen("R1").scale(Q)) == s3.gen("R1").scale(QINV)
    with pytest.raises(InvalidGeneratorError):
        spin_involution("nope", 3)


def test_affine_involutions():
    a3 = spin_aff_ops(3)
    sp = affine_involution("sigma+", 3)
    assert sp(a3.gen("p1")) == a3.gen("p3")
    assert sp(a3.gen("R1")) == a3.gen("R2")
    sm = affine_involution("sigma-", 3)
    assert sm(a3.gen("q2")) == -a3.gen("q2")
    tau = affine_involution("tau", 2)
    a2 = spin_aff_ops(2)
    x = a2.gen("p1") * a2.gen("q1")
    assert tau(x) == -x
    rng = random.Random(7)
    for name in ("sp", "sq", "barp", "barq"):
        f = affine_involution(name, 2)
        for _ in range(6):
            y = _rand(a2, rng)
            assert f(f(y)) == y


def test_named_map_lookup():
    assert named_map("phi", 2).name == "phi"
    assert named_map("sigma+", 2).name == "sigma+"
    with pytest.raises(InvalidGeneratorError):
        named_map("zeta", 2)


def test_parity_preserved():
    phi = phi_finite(2)
    hc = hc_ops(2)
    for w in hc.basis():
        x = hc.element(w)
        img = phi(x)
        assert img.parity() != "mixed"
        assert (img.parity() == "odd") == bool(hc.word_parity(w))
