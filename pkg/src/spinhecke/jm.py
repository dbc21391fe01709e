"""Jucys-Murphy elements and the cyclotomic-ideal machinery.

The evaluation homomorphism of the spin affine algebra onto its finite
part sends p_1 -> 1, q_1 -> 0, and the images of the higher loop
generators follow from the recursions

    p_{i+1} = -1/2 R_i p_i R_i + eps/2 (q_i R_i + R_i q_i) + eps^2/2 p_i
    q_{i+1} =  1/2 R_i q_i R_i + eps/2 (p_i R_i + R_i p_i) - eps^2/2 q_i,

computed entirely inside the finite algebra.  An independent route goes
through the Hecke-Clifford side: J_1 = 1, J_{i+1} = (T_i + eps c_i c_{i+1})
J_i T_i, and

    jm_p_i = 1/2 Phi(J_i + J_i^{-1}),   jm_q_i = 1/2 Phi((J_i - J_i^{-1}) c_i).

Cyclotomic ideals live in A_1 = k[p_1, q_1]/(p_1^2 + q_1^2 - 1): every
nonzero graded ideal is generated by minimal monic f(p_1) and g(p_1) q_1
with g | f | (p_1^2 - 1) g, which sorts ideals into four shapes; the
matching quotients have dimension (deg f + deg g)^n n!.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .coeff import (EPS, EPS2, HALF, L_ONE, L_ZERO, Laurent, as_laurent,
                    laurent_exact_div, laurent_str)
from .engine import Element, EngineError, element_str
from .finite import spin_ops
from .affine import spin_aff_ops
from .heckecliff import hc_aff_ops, hc_ops
from .maps import phi_affine, phi_finite
from .tensor import tensor_ops


class CyclotomicError(EngineError):
    """Invalid ideal data or a polynomial violating the palindromic condition."""


# -- Jucys-Murphy elements ------------------------------------------------------


def jm_images(n: int) -> tuple:
    """The Jucys-Murphy elements (p-images, q-images), 1-indexed lists.

    jm_p[1] = 1 and jm_q[1] = 0; the rest follow from the recursions,
    normalized inside the finite spin algebra at every step.
    """
    ops = spin_ops(n)
    ps = [None, ops.one()]
    qs = [None, ops.zero()]
    half_eps = HALF * EPS
    half_eps2 = HALF * EPS2
    for i in range(1, n):
        r = ops.gen(f"R{i}")
        p, q = ps[i], qs[i]
        ps.append((-(r * p * r)).scale(HALF) + (q * r + r * q).scale(half_eps)
                  + p.scale(half_eps2))
        qs.append((r * q * r).scale(HALF) + (p * r + r * p).scale(half_eps)
                  - q.scale(half_eps2))
    return ps, qs


def jm_paper_formulas() -> dict:
    """The displayed low-rank Jucys-Murphy values, built independently."""
    ops = spin_ops(3)
    r1, r2 = ops.gen("R1"), ops.gen("R2")
    one = ops.one()
    p2 = one + one.scale(EPS2)
    q2 = r1.scale(EPS)
    p3 = (r1 * r2 + r2 * r1).scale(HALF * EPS2) + (one + one.scale(EPS2)) ** 2
    q3 = (r1 * r2 * r1 + r2.scale(EPS2 + 2)).scale(HALF * EPS)
    return {"p2": p2, "q2": q2, "p3": p3, "q3": q3}


def jm_relation_checks(n: int) -> list:
    """Every p/q defining relation with the JM images substituted."""
    ops = spin_ops(n)
    ps, qs = jm_images(n)
    checks = []

    def add(name, lhs, rhs):
        checks.append((name, lhs == rhs))

    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i < j:
                add(f"p{i} p{j} commute", ps[i] * ps[j], ps[j] * ps[i])
                add(f"q{i} q{j} anticommute", qs[i] * qs[j], -(qs[j] * qs[i]))
            add(f"p{i} q{j} commute", ps[i] * qs[j], qs[j] * ps[i])
        add(f"p{i}^2 + q{i}^2 = 1", ps[i] * ps[i] + qs[i] * qs[i], ops.one())
    for i in range(1, n):
        r = ops.gen(f"R{i}")
        add(f"R{i} p{i}", r * ps[i],
            ps[i + 1] * r + (qs[i] - qs[i + 1]).scale(EPS))
        add(f"R{i} q{i}", r * qs[i],
            -(qs[i + 1] * r) - (ps[i] + ps[i + 1]).scale(EPS))
        add(f"R{i} p{i+1}", r * ps[i + 1],
            ps[i] * r - (qs[i] - qs[i + 1]).scale(EPS))
        add(f"R{i} q{i+1}", r * qs[i + 1],
            -(qs[i] * r) - (ps[i] + ps[i + 1]).scale(EPS))
        for j in range(1, n + 1):
            if j in (i, i + 1):
                continue
            add(f"R{i} p{j} commute", r * ps[j], ps[j] * r)
            add(f"R{i} q{j} anticommute", r * qs[j], -(qs[j] * r))
    return checks


def jm_hc_route(n: int) -> tuple:
    """JM elements through the Hecke-Clifford side, as an exact cross-check.

    Returns (p-images, q-images) computed as Phi-images of the J_i; the
    commutative square forces these to agree with jm_images.
    """
    ops = hc_ops(n)
    phi = phi_finite(n)
    tens = tensor_ops(spin_ops(n))
    js = [None, ops.one()]
    jinvs = [None, ops.one()]
    for i in range(1, n):
        ti = ops.gen(f"T{i}")
        cc = ops.gen(f"c{i}") * ops.gen(f"c{i + 1}")
        front = ti + cc.scale(EPS)
        js.append(front * js[i] * ti)
        jinvs.append((ti - ops.scalar(EPS)) * jinvs[i]
                     * (front - ops.scalar(EPS)))
    ps = [None]
    qs = [None]
    for i in range(1, n + 1):
        if js[i] * jinvs[i] != ops.one():
            raise EngineError(f"J_{i} inverse recursion failed")
        ci = ops.gen(f"c{i}")
        ps.append(tens.right_component(phi(js[i] + jinvs[i])).scale(HALF))
        qs.append(tens.right_component(phi((js[i] - jinvs[i]) * ci)).scale(HALF))
    return ps, qs


# -- exact fractions of Laurent polynomials ----------------------------------------


class LFrac:
    """num/den with Laurent entries; equality by cross-multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=L_ONE):
        num = as_laurent(num)
        den = as_laurent(den)
        if not den:
            raise CyclotomicError("zero denominator")
        if not num:
            den = L_ONE
        else:
            try:
                num = laurent_exact_div(num, den)
                den = L_ONE
            except Exception:
                pass
        self.num = num
        self.den = den

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if not isinstance(other, LFrac):
            other = LFrac(as_laurent(other))
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        raise TypeError("LFrac is unhashable")

    def __add__(self, other):
        return LFrac(self.num * other.den + other.num * self.den,
                     self.den * other.den)

    def __sub__(self, other):
        return LFrac(self.num * other.den - other.num * self.den,
                     self.den * other.den)

    def __neg__(self):
        return LFrac(-self.num, self.den)

    def __mul__(self, other):
        return LFrac(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        if not other:
            raise CyclotomicError("division by zero fraction")
        return LFrac(self.num * other.den, self.den * other.num)

    def __str__(self):
        if self.den == L_ONE:
            return laurent_str(self.num)
        return f"({laurent_str(self.num)})/({laurent_str(self.den)})"


LF_ZERO = LFrac(L_ZERO)
LF_ONE = LFrac(L_ONE)


class UPoly:
    """Univariate polynomial over LFrac, dense ascending coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = cs

    @staticmethod
    def from_laurent_map(d: dict) -> "UPoly":
        if not d:
            return UPoly([])
        top = max(d)
        return UPoly([LFrac(d.get(k, L_ZERO)) for k in range(top + 1)])

    @staticmethod
    def constant(c) -> "UPoly":
        return UPoly([LFrac(as_laurent(c))])

    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, UPoly):
            return NotImplemented
        if len(self.coeffs) != len(other.coeffs):
            return False
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        raise TypeError("UPoly is unhashable")

    def __add__(self, other):
        m = max(len(self.coeffs), len(other.coeffs))
        return UPoly([self._at(k) + other._at(k) for k in range(m)])

    def __sub__(self, other):
        m = max(len(self.coeffs), len(other.coeffs))
        return UPoly([self._at(k) - other._at(k) for k in range(m)])

    def __neg__(self):
        return UPoly([-c for c in self.coeffs])

    def __mul__(self, other):
        if self.is_zero() or other.is_zero():
            return UPoly([])
        out = [LF_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return UPoly(out)

    def _at(self, k):
        return self.coeffs[k] if k < len(self.coeffs) else LF_ZERO

    def monic(self) -> "UPoly":
        if self.is_zero():
            return self
        lead = self.coeffs[-1]
        return UPoly([c / lead for c in self.coeffs])

    def divmod(self, other) -> tuple:
        if other.is_zero():
            raise CyclotomicError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UPoly([]), self
        quo = [LF_ZERO] * (dq + 1)
        lead = other.coeffs[-1]
        for k in range(dq, -1, -1):
            c = rem[k + other.degree()] / lead
            quo[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] = rem[k + j] - c * b
        return UPoly(quo), UPoly(rem[: other.degree()])

    def __str__(self):
        return self.format("x")

    def format(self, var: str) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k in range(self.degree(), -1, -1):
            c = self._at(k)
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                head = f"{var}^{k}" if k > 1 else var
                ctxt = str(c)
                if ctxt == "1":
                    parts.append(head)
                elif ctxt == "-1":
                    parts.append(f"-{head}")
                elif "/" in ctxt or " " in ctxt:
                    parts.append(f"({ctxt})*{head}")
                else:
                    parts.append(f"{ctxt}*{head}")
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out


def poly_gcd(a: UPoly, b: UPoly) -> UPoly:
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic()


P_VAR = UPoly([LF_ZERO, LF_ONE])
P2_MINUS_1 = UPoly([-LF_ONE, LF_ZERO, LF_ONE])


# -- the rank-one graded subalgebra and its ideals ------------------------------------


def a1_decompose(x: Element) -> tuple:
    """Split an element of the rank-1 affine algebra as h0(p1) + h1(p1) q1."""
    ops = spin_aff_ops(1)
    if x.ops.key != ops.key:
        raise CyclotomicError("expected an element of the rank-1 spin affine algebra")
    even: dict = {}
    odd: dict = {}
    for w, c in x.terms.items():
        p, q, _ = w
        (odd if q else even)[p] = c
    return UPoly.from_laurent_map(even), UPoly.from_laurent_map(odd)


@dataclass(frozen=True)
class CycIdeal:
    """A graded ideal of A_1, in one of the four classified shapes."""

    case: int
    f: UPoly
    g: UPoly


def _classify_fg(f: UPoly, g: UPoly) -> CycIdeal:
    if g.is_zero() or f.is_zero():
        raise CyclotomicError("zero ideal")
    if poly_gcd(f, g) != g:
        raise CyclotomicError("inconsistent pair: g does not divide f")
    quo, rem = ((P2_MINUS_1 * g).divmod(f))
    if not rem.is_zero():
        raise CyclotomicError("inconsistent pair: f does not divide (p^2-1) g")
    dd = f.degree() - g.degree()
    if dd == 0:
        return CycIdeal(1, f, g)
    if dd == 2:
        return CycIdeal(2, f, g)
    if dd == 1:
        h, rem = f.divmod(g)
        if not rem.is_zero():
            raise CyclotomicError("inconsistent pair: g does not divide f")
        c = h._at(0)
        if c == LF_ONE:
            return CycIdeal(3, f, g)
        if c == -LF_ONE:
            return CycIdeal(4, f, g)
        raise CyclotomicError(
            "inconsistent pair: linear cofactor is not p +- 1 (empty subcase)")
    raise CyclotomicError("inconsistent degrees")


def classify_ideal(gens: list) -> CycIdeal:
    """Classify the graded ideal generated by (polynomial, q-flag) pairs.

    Each generator is h(p_1) (flag 0) or h(p_1) q_1 (flag 1).  Returns the
    minimal monic pair (f, g) and the case number of the four shapes.
    """
    evens: list = []
    odds: list = []
    for h, flag in gens:
        if h.is_zero():
            continue
        (odds if flag else evens).append(h)
    if not evens and not odds:
        raise CyclotomicError("zero ideal")
    acc_a = UPoly([])
    for h in evens:
        acc_a = h.monic() if acc_a.is_zero() else poly_gcd(acc_a, h)
    acc_b = UPoly([])
    for h in odds:
        acc_b = h.monic() if acc_b.is_zero() else poly_gcd(acc_b, h)
    if acc_b.is_zero():
        f = acc_a
        g = acc_a
    elif acc_a.is_zero():
        f = (P2_MINUS_1 * acc_b).monic()
        g = acc_b
    else:
        f = poly_gcd(acc_a, P2_MINUS_1 * acc_b)
        g = poly_gcd(acc_a, acc_b)
    return _classify_fg(f, g)


def cyclotomic_dim(ideal: CycIdeal, n: int) -> int:
    """(deg f + deg g)^n * n!."""
    return (ideal.f.degree() + ideal.g.degree()) ** n * math.factorial(n)


# -- the four-case correspondence ---------------------------------------------------------


@dataclass(frozen=True)
class Theorem63Result:
    case: int
    f: "UPoly | None"
    g: "UPoly | None"
    d: int
    k: int

    def ideal(self) -> CycIdeal:
        if self.case == 1:
            return CycIdeal(1, self.f, self.f)
        if self.case == 2:
            return CycIdeal(2, (P2_MINUS_1 * self.g).monic(), self.g)
        sign = LF_ONE if self.case == 3 else -LF_ONE
        lin = UPoly([sign, LF_ONE])
        return CycIdeal(self.case, (lin * self.g).monic(), self.g)


def poly_from_hc1(x: Element) -> dict:
    """Read off {exponent: coefficient} from a polynomial in X_1 (rank 1)."""
    ops = hc_aff_ops(1)
    if x.ops.key != ops.key:
        raise CyclotomicError("expected an element of the rank-1 affine "
                              "Hecke-Clifford algebra")
    out = {}
    for (xv, cm, _), c in x.terms.items():
        if any(cm):
            raise CyclotomicError("polynomial must not involve Clifford generators")
        out[xv[0]] = c
    return out


def theorem63_map(coeffs: dict) -> Theorem63Result:
    """Classify Phi(X_1^{-k} F(X_1)) for a palindromic F.

    coeffs maps exponents to Laurent coefficients of F.  The palindromic
    condition a_d = 1, a_i = a_0 a_{d-i} (so a_0 = +-1) is enforced; its
    failure raises CyclotomicError.
    """
    coeffs = {k: as_laurent(v) for k, v in coeffs.items() if as_laurent(v)}
    if not coeffs:
        raise CyclotomicError("zero polynomial")
    if min(coeffs) < 0:
        raise CyclotomicError("F must be a polynomial in X_1 (no negative powers)")
    d = max(coeffs)
    a = [coeffs.get(k, L_ZERO) for k in range(d + 1)]
    if a[d] != L_ONE:
        raise CyclotomicError("F must be monic")
    a0 = a[0]
    if a0 != L_ONE and a0 != -L_ONE:
        raise CyclotomicError("constant coefficient must be +-1")
    for i in range(d + 1):
        if a[i] != a0 * a[d - i]:
            raise CyclotomicError(f"palindromic condition fails at degree {i}")
    k = d // 2
    hc1 = hc_aff_ops(1)
    elt = Element(hc1, {((i - k,), (0,), (1,)): c
                        for i, c in enumerate(a) if c})
    image = phi_affine(1)(elt)
    comps = {(0, 0): {}, (0, 1): {}, (1, 0): {}, (1, 1): {}}
    aff1 = spin_aff_ops(1)
    for (cm, rw), c in image.terms.items():
        p, q, _ = rw
        comps[(cm[0], q & 1)][aff1.p_decode(p)[0]] = c
    pa = UPoly.from_laurent_map(comps[(0, 0)])
    pb = UPoly.from_laurent_map(comps[(0, 1)])
    pc = UPoly.from_laurent_map(comps[(1, 1)])
    pd = UPoly.from_laurent_map(comps[(1, 0)])
    if not pb.is_zero() or not pd.is_zero():
        raise CyclotomicError("image does not match any cyclotomic shape")
    if pc.is_zero() and not pa.is_zero():
        res = Theorem63Result(1, pa.monic(), None, d, k)
        if res.f.degree() != k:
            raise CyclotomicError("case 1 degree bookkeeping failed")
        return res
    if pa.is_zero() and not pc.is_zero():
        res = Theorem63Result(2, None, pc.monic(), d, k)
        if res.g.degree() != k - 1:
            raise CyclotomicError("case 2 degree bookkeeping failed")
        return res
    graw = -pc
    for case, sign in ((3, LF_ONE), (4, -LF_ONE)):
        lin = UPoly([sign, LF_ONE])
        if pa == lin * graw:
            res = Theorem63Result(case, None, graw.monic(), d, k)
            if res.g.degree() != k:
                raise CyclotomicError(f"case {case} degree bookkeeping failed")
            return res
    raise CyclotomicError("image does not match any cyclotomic shape")
