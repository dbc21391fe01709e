"""Localization of the spin affine Hecke algebra at the central element

    delta = prod_{1 <= i < j <= n} (p_i - p_j)^2,

and the intertwiners built from it:

    gimel_i = R_i - eps (p_i - p_{i+1})^{-1} (q_i - q_{i+1}),

with the convention that a fraction A/B means B^{-1} A.  A localized
element is a pair (numerator, k) representing numerator * delta^{-k};
since delta is central the fraction calculus is one-sided.  Equality never
divides: it cross-multiplies by delta powers and compares normal forms.
Left multiplication by a polynomial in the p's alone is component-wise on
the standard basis, which keeps the delta bookkeeping cheap.
"""

from __future__ import annotations

from .coeff import EPS, EPS2, L_ONE, Laurent, laurent_exact_div
from .engine import Element, EngineError, mul
from .affine import SpinAffineOps, spin_aff_ops

_DELTA_CACHE: dict = {}
_DPOW_CACHE: dict = {}


def p_poly(ops: SpinAffineOps, terms: dict) -> Element:
    """Element from a {p-exponent tuple: Laurent} polynomial in the p's."""
    n = ops.n
    zq = (0,) * n
    za = (0,) * (n - 1)
    return Element(ops, {ops.word(pe, zq, za): c for pe, c in terms.items() if c})


def _as_p_poly(x: Element) -> dict:
    """Packed-monomial view of a polynomial in the p's."""
    out = {}
    for w, c in x.terms.items():
        _, p, q, a = x.ops._dec(w)
        if q or any(a):
            raise EngineError("element is not a polynomial in the p's")
        out[p] = c
    return out


def p_diff(ops: SpinAffineOps, i: int, j: int) -> Element:
    """p_i - p_j."""
    n = ops.n
    ei = tuple(1 if k == i else 0 for k in range(1, n + 1))
    ej = tuple(1 if k == j else 0 for k in range(1, n + 1))
    return p_poly(ops, {ei: L_ONE, ej: -L_ONE})


def pmul_left(poly: Element, x: Element) -> Element:
    """poly * x for poly a polynomial in the p's (component-wise)."""
    ops = x.ops
    pp = _as_p_poly(poly)
    dec, mkw = ops._dec, ops._mkw
    out: dict = {}
    for w, c in x.terms.items():
        z, p, q, a = dec(w)
        for pe, c2 in pp.items():
            w2 = mkw(z, p + pe, q, a)
            cc = c * c2
            s = out.get(w2)
            s = cc if s is None else s + cc
            if s:
                out[w2] = s
            elif w2 in out:
                del out[w2]
    return Element(ops, out)


def delta(n: int) -> Element:
    """The central element prod_{i<j} (p_i - p_j)^2; centrality is checked
    against every generator the first time it is built for a given rank."""
    if n < 2:
        raise EngineError("delta requires n >= 2")
    hit = _DELTA_CACHE.get(n)
    if hit is not None:
        return hit
    ops = spin_aff_ops(n)
    d = ops.one()
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            f = p_diff(ops, i, j)
            d = pmul_left(f, pmul_left(f, d))
    for name in ops.gen_atoms():
        g = ops.gen(name)
        if mul(d, g) != mul(g, d):
            raise EngineError(f"delta failed centrality against {name}")
    _DELTA_CACHE[n] = d
    return d


def delta_power(n: int, k: int) -> Element:
    key = (n, k)
    hit = _DPOW_CACHE.get(key)
    if hit is None:
        if k == 0:
            hit = spin_aff_ops(n).one()
        else:
            hit = pmul_left(delta(n), delta_power(n, k - 1))
        _DPOW_CACHE[key] = hit
    return hit


def cofactor(n: int, i: int) -> Element:
    """(p_i - p_{i+1}) * prod of the other squared differences.

    Satisfies (p_i - p_{i+1}) * cofactor = delta.
    """
    ops = spin_aff_ops(n)
    out = p_diff(ops, i, i + 1)
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            if (a, b) == (i, i + 1):
                continue
            f = p_diff(ops, a, b)
            out = pmul_left(f, pmul_left(f, out))
    return out


class LocElement:
    """numerator * delta^{-dpow} in the localized spin affine algebra."""

    __slots__ = ("num", "dpow")

    def __init__(self, num: Element, dpow: int = 0):
        if dpow < 0:
            raise EngineError("dpow must be nonnegative")
        self.num = num
        self.dpow = dpow

    @property
    def n(self) -> int:
        return self.num.ops.n

    def _lift(self, k: int) -> Element:
        """Numerator after raising the denominator power to k."""
        if k == self.dpow:
            return self.num
        return pmul_left(delta_power(self.n, k - self.dpow), self.num)

    def __add__(self, other: "LocElement") -> "LocElement":
        k = max(self.dpow, other.dpow)
        return LocElement(self._lift(k) + other._lift(k), k)

    def __sub__(self, other: "LocElement") -> "LocElement":
        return self + (-other)

    def __neg__(self) -> "LocElement":
        return LocElement(-self.num, self.dpow)

    def __mul__(self, other) -> "LocElement":
        if isinstance(other, LocElement):
            return LocElement(mul(self.num, other.num), self.dpow + other.dpow)
        if isinstance(other, Element):
            return LocElement(mul(self.num, other), self.dpow)
        return LocElement(self.num.scale(other), self.dpow)

    def __rmul__(self, other) -> "LocElement":
        if isinstance(other, Element):
            return LocElement(mul(other, self.num), self.dpow)
        return LocElement(self.num.scale(other), self.dpow)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LocElement):
            return NotImplemented
        k = max(self.dpow, other.dpow)
        return self._lift(k) == other._lift(k)

    def __hash__(self):
        raise TypeError("LocElement is not hashable; compare with ==")

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def reduced(self) -> "LocElement":
        """Remove common delta factors from the numerator, when exact."""
        num, k = self.num, self.dpow
        dpoly = _as_p_poly(delta(self.n))
        while k > 0 and num:
            quo = _divide_by_p_poly(num, dpoly)
            if quo is None:
                break
            num, k = quo, k - 1
        return LocElement(num, k)

    def __str__(self):
        return f"({self.num}) * delta^-{self.dpow}"


def _mono_divides(lead: tuple, t: tuple) -> bool:
    return all(u <= v for u, v in zip(lead, t))


def _divide_by_p_poly(x: Element, dpoly: dict):
    """Exact quotient of x by a polynomial in the p's with invertible
    leading coefficient, or None when the division is not exact."""
    ops = x.ops
    lead = max(dpoly)
    lead_c = dpoly[lead]
    lead_t = ops.p_decode(lead)
    groups: dict = {}
    for w, c in x.terms.items():
        z, p, q, a = ops._dec(w)
        groups.setdefault((z, q, a), {})[p] = c
    out: dict = {}
    for (z, q, a), f in groups.items():
        quo: dict = {}
        f = dict(f)
        while f:
            t = max(f)
            if not _mono_divides(lead_t, ops.p_decode(t)):
                return None
            mono = t - lead
            try:
                cq = laurent_exact_div(f[t], lead_c)
            except Exception:
                return None
            quo[mono] = cq
            for pe2, c2 in dpoly.items():
                key = mono + pe2
                s = f.get(key)
                s = -(cq * c2) if s is None else s - cq * c2
                if s:
                    f[key] = s
                elif key in f:
                    del f[key]
        for mono, cq in quo.items():
            out[ops._mkw(z, mono, q, a)] = cq
    return Element(ops, out)


def invert_p_diff(i: int, n: int) -> LocElement:
    """(p_i - p_{i+1})^{-1} as a cofactor over one power of delta."""
    if not 1 <= i <= n - 1:
        raise EngineError(f"index {i} out of range for rank {n}")
    return LocElement(cofactor(n, i), 1)


def gimel(i: int, n: int) -> LocElement:
    """The intertwiner R_i - eps (p_i - p_{i+1})^{-1} (q_i - q_{i+1})."""
    if not 1 <= i <= n - 1:
        raise EngineError(f"index {i} out of range for rank {n}")
    ops = spin_aff_ops(n)
    r = ops.gen(f"R{i}")
    qdiff = ops.gen(f"q{i}") - ops.gen(f"q{i + 1}")
    num = pmul_left(delta(n), r) - pmul_left(cofactor(n, i), qdiff).scale(EPS)
    return LocElement(num, 1)


def gimel_square_rhs(i: int, n: int) -> LocElement:
    """-2 + 2 eps^2 (p_i p_{i+1} - 1) / (p_i - p_{i+1})^2."""
    ops = spin_aff_ops(n)
    eij = tuple(1 if k in (i, i + 1) else 0 for k in range(1, n + 1))
    pp1 = p_poly(ops, {eij: L_ONE, (0,) * n: -L_ONE})
    cof2 = pmul_left(cofactor(n, i), cofactor(n, i))
    num = pmul_left(delta_power(n, 2), ops.scalar(-2)) \
        + pmul_left(cof2, pp1).scale(2 * EPS2)
    return LocElement(num, 2)


def intertwiner_checks(n: int, which: str = "all") -> list:
    """The displayed intertwiner relations as (name, thunk) pairs.

    Each thunk returns True iff the relation holds by exact LocElement
    equality.  The braid relation is only emitted for n >= 3 and the
    disjoint anticommutation for n >= 4.
    """
    ops = spin_aff_ops(n)
    checks = []

    def conj(name, i, g, h, sign):
        checks.append((name, lambda i=i, g=g, h=h, sign=sign:
                       gimel(i, n) * g == sign * (h * gimel(i, n))))

    for i in range(1, n):
        checks.append((f"(gimel2) i={i}",
                       lambda i=i: gimel(i, n) * gimel(i, n)
                       == gimel_square_rhs(i, n)))
        conj(f"gimel{i} p{i} = p{i+1} gimel{i}", i,
             ops.gen(f"p{i}"), ops.gen(f"p{i + 1}"), 1)
        conj(f"gimel{i} p{i+1} = p{i} gimel{i}", i,
             ops.gen(f"p{i + 1}"), ops.gen(f"p{i}"), 1)
        conj(f"gimel{i} q{i} = -q{i+1} gimel{i}", i,
             ops.gen(f"q{i}"), ops.gen(f"q{i + 1}"), -1)
        conj(f"gimel{i} q{i+1} = -q{i} gimel{i}", i,
             ops.gen(f"q{i + 1}"), ops.gen(f"q{i}"), -1)
        for j in range(1, n + 1):
            if j in (i, i + 1):
                continue
            conj(f"gimel{i} p{j} = p{j} gimel{i}", i,
                 ops.gen(f"p{j}"), ops.gen(f"p{j}"), 1)
            conj(f"gimel{i} q{j} = -q{j} gimel{i}", i,
                 ops.gen(f"q{j}"), ops.gen(f"q{j}"), -1)
    for i in range(1, n):
        for j in range(i + 2, n):
            checks.append((f"gimel{i} gimel{j} = -gimel{j} gimel{i}",
                           lambda i=i, j=j: gimel(i, n) * gimel(j, n)
                           == -(gimel(j, n) * gimel(i, n))))
    for i in range(1, n - 1):
        checks.append((f"(braidgimel) i={i}",
                       lambda i=i: gimel(i, n) * gimel(i + 1, n) * gimel(i, n)
                       == gimel(i + 1, n) * gimel(i, n) * gimel(i + 1, n)))
    if which != "all":
        checks = [c for c in checks if which in c[0]]
    return checks
