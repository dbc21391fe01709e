"""Finite-type staircase families: spin, covering, and T-presented Hecke.

Normal-form words are the staircase monomials

    G_{1,a_1} G_{2,a_2} ... G_{n-1,a_{n-1}},   G_{i,a} = G_i G_{i-1} ... G_{i-a+1},

with 0 <= a_i <= i, where G is R (spin), T~ (covering, with a central flag z)
or the symmetrized Hecke generator.  There are n! such words (2n! with z).
The three families share one straightening core; they differ only in the
square of a generator and in the unit picked up when two distant generators
pass each other (-1, z, or +1).  The braid defect is the same in all three:

    G_{i+1} G_i G_{i+1} = G_i G_{i+1} G_i - eps^2 (G_{i+1} - G_i).

The straightening strategy follows the spanning argument for standard
monomials: multiplying a standard word by one generator either extends the
last descending run, squares away its tail, commutes past it, or braids
inside it; every recursion strictly shortens the word being reduced.
"""

from __future__ import annotations

import itertools

from .coeff import EPS2, L_ONE, Laurent, laurent
from .engine import (AlgebraOps, Element, InvalidGeneratorError,
                     RewriteOutcome, normalize)

Staircase = tuple


def staircase_letters(a: Staircase) -> tuple:
    """Generator indices of the staircase word, leftmost first."""
    out = []
    for k, ak in enumerate(a):
        start = k + 1
        out.extend(range(start, start - ak, -1))
    return tuple(out)


def _set(a: Staircase, t: int, v: int) -> Staircase:
    return a[: t - 1] + (v,) + a[t:]


class StaircaseOps(AlgebraOps):
    """Common core for the three finite staircase families."""

    letter = "G"
    has_z = False
    swap = "minus"  # "minus", "plus" or "z"

    def __init__(self, n: int):
        if n < 1:
            raise InvalidGeneratorError("rank n must be >= 1")
        super().__init__(n)
        self._memo: dict = {}
        self._sq = self._square_terms()

    # -- family knobs ------------------------------------------------------

    def _square_terms(self) -> tuple:
        """G_i^2 as ((z-shift, Laurent), ...)."""
        raise NotImplementedError

    def _swap_unit(self, k: int) -> tuple:
        """Unit picked up by k distant transpositions: (z-shift, +-1)."""
        if k % 2 == 0:
            return 0, 1
        if self.swap == "minus":
            return 0, -1
        if self.swap == "z":
            return 1, 1
        return 0, 1

    # -- word embedding ------------------------------------------------------

    def _za(self, word):
        return word if self.has_z else (0, word)

    def _mk(self, z: int, a: Staircase):
        return (z, a) if self.has_z else a

    def one_word(self):
        return self._mk(0, (0,) * (self.n - 1))

    # -- the straightening table ----------------------------------------------

    def _letter_mul(self, a: Staircase, j: int) -> tuple:
        """(a as word) * G_j in normal form, as ((z-shift, word, coeff), ...)."""
        key = (a, j)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        self._tick()
        t = 0
        for k in range(self.n - 1, 0, -1):
            if a[k - 1]:
                t = k
                break
        if t == 0:
            res = ((0, _set(a, j, 1), L_ONE),)
        else:
            at = a[t - 1]
            m = t - at + 1
            if j > t:
                res = ((0, _set(a, j, 1), L_ONE),)
            elif j == m - 1:
                res = ((0, _set(a, t, at + 1), L_ONE),)
            elif j == m:
                popped = _set(a, t, at - 1)
                res = tuple((dz, popped, c) for dz, c in self._sq)
            elif j < m - 1:
                # G_j anticommutes past the whole run [t..m]
                w0 = _set(a, t, 0)
                dz0, s0 = self._swap_unit(at)
                acc: dict = {}
                for dz, u, c in self._letter_mul(w0, j):
                    assert sum(u) <= sum(w0) + 1 < sum(a) + 1
                    self._acc(acc, dz ^ dz0, _set(u, t, at), c if s0 == 1 else -c)
                res = tuple((dz, u, c) for (dz, u), c in acc.items())
            else:
                # m+1 <= j <= t: braid inside the run after commuting G_j in
                w0 = _set(a, t, 0)
                dz0, s0 = self._swap_unit(j - m - 1)
                dz1, s1 = self._swap_unit(t - j)
                acc = {}
                for dz, u, c in self._letter_mul(w0, j - 1):
                    self._acc(acc, dz ^ dz0 ^ dz1, _set(u, t, at),
                              c if s0 * s1 == 1 else -c)
                eps2 = EPS2
                run_b = tuple(range(t, j - 1, -1)) + tuple(range(j - 2, m - 1, -1))
                run_c = tuple(range(t, j, -1)) + tuple(range(j - 1, m - 1, -1))
                for letters, cf in ((run_b, -eps2), (run_c, eps2)):
                    cur = {(0, w0): L_ONE}
                    for ell in letters:
                        nxt: dict = {}
                        for (zz, u), c in cur.items():
                            assert sum(u) <= sum(a) - 2
                            for dz, u2, c2 in self._letter_mul(u, ell):
                                self._acc(nxt, zz ^ dz, u2, c * c2)
                        cur = nxt
                    cff = cf if s0 == 1 else -cf
                    for (zz, u), c in cur.items():
                        self._acc(acc, zz ^ dz0, u, c * cff)
                res = tuple((dz, u, c) for (dz, u), c in acc.items())
        self._memo[key] = res
        return res

    @staticmethod
    def _acc(d: dict, dz: int, u: Staircase, c: Laurent):
        k = (dz, u)
        s = d.get(k)
        s = c if s is None else s + c
        if s:
            d[k] = s
        elif k in d:
            del d[k]

    # -- AlgebraOps interface -------------------------------------------------

    def rmul_atom(self, word, atom):
        z, a = self._za(word)
        if atom[0] == "z":
            if not self.has_z:
                raise InvalidGeneratorError(f"no z generator in {self!r}")
            return [(self._mk(z ^ 1, a), L_ONE)]
        tag, j = atom
        if tag != self.letter or not 1 <= j <= self.n - 1:
            raise InvalidGeneratorError(f"bad generator {atom!r} in {self!r}")
        return [(self._mk(z ^ dz, u), c) for dz, u, c in self._letter_mul(a, j)]

    def word_atoms(self, word):
        z, a = self._za(word)
        atoms = [("z",)] * z
        atoms.extend((self.letter, ell) for ell in staircase_letters(a))
        return tuple(atoms)

    def word_parity(self, word):
        _, a = self._za(word)
        return sum(a) % 2

    def gen_atoms(self):
        d = {f"{self.letter}{i}": (self.letter, i) for i in range(1, self.n)}
        if self.has_z:
            d["z"] = ("z",)
        return d

    def atom_label(self, atom):
        return "z" if atom[0] == "z" else f"{atom[0]}{atom[1]}"

    # -- bases ------------------------------------------------------------------

    def _staircases(self):
        return itertools.product(*(range(k + 2) for k in range(self.n - 1)))

    def basis(self) -> list:
        """All standard words in canonical (sort_key) order."""
        if self.has_z:
            return [(z, a) for z in (0, 1) for a in self._staircases()]
        return list(self._staircases())

    def even_basis(self) -> list:
        """Standard words of even length a_1 + ... + a_{n-1}."""
        return [w for w in self.basis() if self.word_parity(w) == 0]

    def dimension(self) -> int:
        return len(self.basis())

    def random_word(self, rng):
        a = tuple(rng.randint(0, k + 1) for k in range(self.n - 1))
        return (rng.randint(0, 1), a) if self.has_z else a

    # -- the local rule table, as documented rewrite outcomes --------------------

    def rewrite_pattern(self, pattern: tuple) -> RewriteOutcome:
        """Replacement for a short non-standard letter pattern.

        Patterns: (j, j) squares; (j, k) with k <= j-2 distant inversions;
        (j+1, j, j+1) braid defects.  Anything already standard is rejected.
        """
        if len(pattern) == 2:
            j, k = pattern
            if j == k:
                return RewriteOutcome(tuple(
                    (self._mk(dz, (0,) * (self.n - 1)), c) for dz, c in self._sq))
            if k <= j - 2:
                dz, s = self._swap_unit(1)
                w = normalize(self, [(self.letter, k), (self.letter, j)],
                              coeff=laurent({0: s}))
                if dz:
                    w = mul_z(w)
                return RewriteOutcome(tuple(w.terms.items()))
        elif len(pattern) == 3 and pattern[0] == pattern[2] == pattern[1] + 1:
            j = pattern[0]
            main = normalize(self, [(self.letter, j - 1), (self.letter, j),
                                    (self.letter, j - 1)])
            lower = normalize(self, [(self.letter, j)], coeff=-EPS2) + \
                normalize(self, [(self.letter, j - 1)], coeff=EPS2)
            return RewriteOutcome(tuple((main + lower).terms.items()))
        raise InvalidGeneratorError(f"pattern {pattern!r} is standard or unsupported")


def mul_z(x: Element) -> Element:
    """Multiply an element of a covering family by the central flag z."""
    ops = x.ops
    return Element(ops, {(z ^ 1, a): c for (z, a), c in x.terms.items()})


class SpinHeckeOps(StaircaseOps):
    """The spin Hecke algebra: odd generators R_i, R_i^2 = -(q^2 + q^-2)."""

    family = "spin"
    letter = "R"
    swap = "minus"

    def _square_terms(self):
        return ((0, laurent({2: -1, -2: -1})),)


class THeckeOps(StaircaseOps):
    """The Hecke algebra in the nonstandard presentation via T_i + T_i^{-1}."""

    family = "thecke"
    letter = "Tc"
    swap = "plus"

    def _square_terms(self):
        return ((0, laurent({2: 1, -2: 1, 0: 2})),)


class CoverHeckeOps(StaircaseOps):
    """The covering Hecke algebra: odd T~_i and a central order-2 flag z."""

    family = "cover"
    letter = "Tt"
    has_z = True
    swap = "z"

    def _square_terms(self):
        return ((1, laurent({2: 1, -2: 1, 0: 1})), (0, L_ONE))


_CACHE: dict = {}


def _cached(cls, n: int):
    key = (cls.family, n)
    ops = _CACHE.get(key)
    if ops is None:
        ops = _CACHE[key] = cls(n)
    return ops


def spin_ops(n: int) -> SpinHeckeOps:
    return _cached(SpinHeckeOps, n)


def thecke_ops(n: int) -> THeckeOps:
    return _cached(THeckeOps, n)


def cover_ops(n: int) -> CoverHeckeOps:
    return _cached(CoverHeckeOps, n)


def spin_rewrite(pattern: tuple, n: int) -> RewriteOutcome:
    """Rule-table entry for a non-standard 2- or 3-letter R-pattern."""
    return spin_ops(n).rewrite_pattern(pattern)


def cover_quotient(sign: int, x: Element) -> Element:
    """Quotient of the covering algebra by <z -+ 1>: substitute z := sign.

    sign=+1 lands in the nonstandard Hecke presentation (T~ -> script T),
    sign=-1 lands in the spin Hecke algebra (T~ -> R).
    """
    if sign not in (1, -1):
        raise InvalidGeneratorError("sign must be +1 or -1")
    ops = x.ops
    if not getattr(ops, "has_z", False):
        raise InvalidGeneratorError("cover_quotient expects a covering element")
    target = thecke_ops(ops.n) if sign == 1 else spin_ops(ops.n)
    out: dict = {}
    for (z, a), c in x.terms.items():
        if sign == -1 and z:
            c = -c
        s = out.get(a)
        s = c if s is None else s + c
        if s:
            out[a] = s
        elif a in out:
            del out[a]
    return Element(target, out)
