"""Affine staircase families: loop generators p_i, q_i on top of the
finite staircase part.

Normal-form words are

    p_1^{k_1} ... p_n^{k_n} q_1^{e_1} ... q_n^{e_n} * (staircase word),

with k_i >= 0 and e_i in {0,1}; squares of q's are eliminated through
p_i^2 + q_i^2 = 1 (and its covering version P~_i^2 - z Q~_i^2 = 1).  The
spin (zeta = -1), nonstandard-Hecke (zeta = +1) and covering (zeta = z)
variants share the rule set

    T P_i     = P_{i+1} T - eps (Q_{i+1} + zeta Q_i)
    T P_{i+1} = P_i T     + eps (Q_{i+1} + zeta Q_i)
    T Q_i     = zeta Q_{i+1} T - eps (P_i + P_{i+1})
    T Q_{i+1} = zeta Q_i T     + zeta eps (P_i + P_{i+1})
    Q_i Q_j   = zeta Q_j Q_i   (i != j),   Q_i^2 = zeta (P_i^2 - 1),

with P's central among loop generators and distant indices commuting up to
zeta.  Moving a loop generator leftward through the staircase part either
swaps it across a letter or consumes the letter into an eps-correction, so
the recursion strictly reduces the staircase length.

Storage: inside a word the p-exponent vector is packed into one integer
(8 bits per index; intertwiner checks stay far below 255) and the q-flags
into a bit mask, so the heavy commutative part of a product is plain
integer addition.
"""

from __future__ import annotations

import itertools

from .coeff import EPS, EPS2, HALF, L_ONE, Laurent
from .engine import (Element, InvalidGeneratorError, RewriteOutcome, mul,
                     normalize)
from .finite import StaircaseOps, _set, staircase_letters

PBITS = 8
PCAP = (1 << PBITS) - 1


def _accw(d: dict, w, c):
    s = d.get(w)
    s = c if s is None else s + c
    if s:
        d[w] = s
    elif w in d:
        del d[w]


class AffinePQOps(StaircaseOps):
    """Common core for the three affine families."""

    pletter = "P"
    qletter = "Q"
    affine = True

    def __init__(self, n: int):
        super().__init__(n)
        self._pmemo: dict = {}
        self._qmemo: dict = {}
        self._mono_memo: dict = {}
        self._qmerge_memo: dict = {}

    # -- packed p-vectors and q-masks ----------------------------------------

    def p_encode(self, exps) -> int:
        out = 0
        for i, k in enumerate(exps):
            if not 0 <= k <= PCAP:
                raise InvalidGeneratorError(f"p-exponent {k} out of range")
            out |= k << (PBITS * i)
        return out

    def p_decode(self, p: int) -> tuple:
        return tuple((p >> (PBITS * i)) & PCAP for i in range(self.n))

    def q_encode(self, bits) -> int:
        out = 0
        for i, b in enumerate(bits):
            if b:
                out |= 1 << i
        return out

    def q_decode(self, q: int) -> tuple:
        return tuple((q >> i) & 1 for i in range(self.n))

    @staticmethod
    def _punit(idx: int) -> int:
        return 1 << (PBITS * (idx - 1))

    # -- word embedding: (z?, p, q, staircase) ---------------------------------

    def _dec(self, word):
        if self.has_z:
            return word
        return (0,) + word

    def _mkw(self, z, p, q, a):
        return (z, p, q, a) if self.has_z else (p, q, a)

    def one_word(self):
        return self._mkw(0, 0, 0, (0,) * (self.n - 1))

    def word(self, pexps, qbits, a, z=0):
        """Build a normal-form word from human-readable components."""
        return self._mkw(z, self.p_encode(pexps), self.q_encode(qbits), tuple(a))

    # -- moving loop generators through the staircase part ----------------------

    def _move_p(self, a: tuple, i: int) -> tuple:
        """(a as word) * p_i as ((kind, idx, z-shift, word, coeff), ...)."""
        key = (a, i)
        hit = self._pmemo.get(key)
        if hit is not None:
            return hit
        self._tick()
        res = self._move(a, i, is_q=False)
        self._pmemo[key] = res
        return res

    def _move_q(self, a: tuple, i: int) -> tuple:
        key = (a, i)
        hit = self._qmemo.get(key)
        if hit is not None:
            return hit
        self._tick()
        res = self._move(a, i, is_q=True)
        self._qmemo[key] = res
        return res

    def _move(self, a: tuple, i: int, is_q: bool) -> tuple:
        t = 0
        for k in range(self.n - 1, 0, -1):
            if a[k - 1]:
                t = k
                break
        if t == 0:
            return (("q" if is_q else "p", i, 0, a, L_ONE),)
        at = a[t - 1]
        ell = t - at + 1  # last letter of the word
        v = _set(a, t, at - 1)
        assert sum(v) < sum(a)
        dzz, sz = self._swap_unit(1)  # the zeta unit
        acc: dict = {}

        def put(kind, idx, dz, u, c):
            k2 = (kind, idx, dz, u)
            s = acc.get(k2)
            s = c if s is None else s + c
            if s:
                acc[k2] = s
            elif k2 in acc:
                del acc[k2]

        def emit(entries, append_letter, dz0=0, cf=L_ONE):
            for kind, idx, dz, u, c in entries:
                c = c * cf
                if append_letter:
                    for dz2, u2, c2 in self._letter_mul(u, ell):
                        put(kind, idx, dz ^ dz2 ^ dz0, u2, c * c2)
                else:
                    put(kind, idx, dz ^ dz0, u, c)

        if not is_q:
            if i != ell and i != ell + 1:
                emit(self._move_p(v, i), True)
            elif i == ell:
                emit(self._move_p(v, ell + 1), True)
                emit(self._move_q(v, ell + 1), False, 0, -EPS)
                emit(self._move_q(v, ell), False, dzz, -EPS if sz == 1 else EPS)
            else:
                emit(self._move_p(v, ell), True)
                emit(self._move_q(v, ell + 1), False, 0, EPS)
                emit(self._move_q(v, ell), False, dzz, EPS if sz == 1 else -EPS)
        else:
            zc = L_ONE if sz == 1 else -L_ONE
            if i != ell and i != ell + 1:
                emit(self._move_q(v, i), True, dzz, zc)
            elif i == ell:
                emit(self._move_q(v, ell + 1), True, dzz, zc)
                emit(self._move_p(v, ell), False, 0, -EPS)
                emit(self._move_p(v, ell + 1), False, 0, -EPS)
            else:
                emit(self._move_q(v, ell), True, dzz, zc)
                emit(self._move_p(v, ell), False, dzz, EPS if sz == 1 else -EPS)
                emit(self._move_p(v, ell + 1), False, dzz, EPS if sz == 1 else -EPS)
        return tuple((k, idx, dz, u, c) for (k, idx, dz, u), c in acc.items())

    # -- assembling the loop prefix -----------------------------------------------

    def _attach(self, z, p, q, kind, idx, u, c, out):
        """Append p_idx or q_idx to the loop prefix p^p q^q, then word u."""
        if kind == "p":
            _accw(out, self._mkw(z, p + self._punit(idx), q, u), c)
            return
        bit = 1 << (idx - 1)
        b = bin(q >> idx).count("1")  # larger-index q's crossed on the way in
        dzb, sb = self._swap_unit(b)
        z ^= dzb
        if sb != 1:
            c = -c
        if not q & bit:
            _accw(out, self._mkw(z, p, q | bit, u), c)
        else:
            dz1, s1 = self._swap_unit(1)  # q_idx^2 = zeta (p_idx^2 - 1)
            z ^= dz1
            if s1 != 1:
                c = -c
            q2 = q & ~bit
            _accw(out, self._mkw(z, p + 2 * self._punit(idx), q2, u), c)
            _accw(out, self._mkw(z, p, q2, u), -c)

    # -- AlgebraOps interface --------------------------------------------------------

    def rmul_atom(self, word, atom):
        z, p, q, a = self._dec(word)
        tag = atom[0]
        if tag == "z":
            if not self.has_z:
                raise InvalidGeneratorError(f"no z generator in {self!r}")
            return [(self._mkw(z ^ 1, p, q, a), L_ONE)]
        if tag == self.letter:
            j = atom[1]
            if not 1 <= j <= self.n - 1:
                raise InvalidGeneratorError(f"bad generator {atom!r} in {self!r}")
            return [(self._mkw(z ^ dz, p, q, u), c)
                    for dz, u, c in self._letter_mul(a, j)]
        if tag == self.pletter or tag == self.qletter:
            i = atom[1]
            if not 1 <= i <= self.n:
                raise InvalidGeneratorError(f"bad generator {atom!r} in {self!r}")
            moves = self._move_p(a, i) if tag == self.pletter else self._move_q(a, i)
            out: dict = {}
            for kind, idx, dz, u, c in moves:
                self._attach(z ^ dz, p, q, kind, idx, u, c, out)
            return list(out.items())
        raise InvalidGeneratorError(f"bad generator {atom!r} in {self!r}")

    # -- bulk products -----------------------------------------------------------------

    def _mono_move(self, a: tuple, p: int) -> dict:
        """(staircase word a) * p^monomial as a term map, memoized.

        Bulk version of the single-atom moves: products with p-heavy words
        reuse these blocks instead of refolding one p at a time.
        """
        key = (a, p)
        hit = self._mono_memo.get(key)
        if hit is None:
            base = {self._mkw(0, 0, 0, a): L_ONE}
            atoms = []
            for i, k in enumerate(self.p_decode(p), 1):
                atoms.extend([(self.pletter, i)] * k)
            hit = self._mono_memo[key] = self.fold(base, atoms)
        return hit

    def _qmask_merge(self, q: int, qm: int) -> dict:
        """q^q * q^qm as a term map (empty staircase), memoized."""
        key = (q, qm)
        hit = self._qmerge_memo.get(key)
        if hit is None:
            base = {self._mkw(0, 0, q, (0,) * (self.n - 1)): L_ONE}
            atoms = [(self.qletter, i) for i, bit in
                     enumerate(self.q_decode(qm), 1) if bit]
            hit = self._qmerge_memo[key] = self.fold(base, atoms)
        return hit

    def fold_word(self, terms: dict, word) -> dict:
        zb, pb, qb, ab = self._dec(word)
        if pb:
            nxt: dict = {}
            for w, c in terms.items():
                z, p, q, a = self._dec(w)
                for wm, cm in self._mono_move(a, pb).items():
                    zm, pe, qm, am = self._dec(wm)
                    cwm = c * cm
                    if not qm:
                        _accw(nxt, self._mkw(z ^ zm, p + pe, q, am), cwm)
                        continue
                    for wq, cq in self._qmask_merge(q, qm).items():
                        zq, pex, qout, _ = self._dec(wq)
                        _accw(nxt, self._mkw(z ^ zm ^ zq, p + pe + pex, qout, am),
                              cwm * cq)
            terms = nxt
        atoms = [("z",)] * zb
        atoms.extend((self.qletter, i) for i, bit in
                     enumerate(self.q_decode(qb), 1) if bit)
        atoms.extend((self.letter, ell) for ell in staircase_letters(ab))
        return self.fold(terms, atoms) if atoms else terms

    # -- remaining interface --------------------------------------------------------------

    def word_atoms(self, word):
        z, p, q, a = self._dec(word)
        atoms = [("z",)] * z
        for i, k in enumerate(self.p_decode(p), 1):
            atoms.extend([(self.pletter, i)] * k)
        for i, bit in enumerate(self.q_decode(q), 1):
            if bit:
                atoms.append((self.qletter, i))
        atoms.extend((self.letter, ell) for ell in staircase_letters(a))
        return tuple(atoms)

    def word_parity(self, word):
        _, _, q, a = self._dec(word)
        return (bin(q).count("1") + sum(a)) % 2

    def gen_atoms(self):
        d = {}
        for i in range(1, self.n + 1):
            d[f"{self.pletter}{i}"] = (self.pletter, i)
            d[f"{self.qletter}{i}"] = (self.qletter, i)
        for i in range(1, self.n):
            d[f"{self.letter}{i}"] = (self.letter, i)
        if self.has_z:
            d["z"] = ("z",)
        return d

    def atom_label(self, atom):
        return "z" if atom[0] == "z" else f"{atom[0]}{atom[1]}"

    def sort_key(self, word):
        z, p, q, a = self._dec(word)
        return (z, self.p_decode(p), self.q_decode(q), a)

    def p_degree(self, word) -> int:
        _, p, _, _ = self._dec(word)
        return sum(self.p_decode(p))

    # -- truncated bases ----------------------------------------------------------------------

    def basis(self):
        raise InvalidGeneratorError(
            f"{self!r} is infinite-dimensional; use basis_truncated")

    def basis_truncated(self, max_pdeg: int) -> list:
        """Standard words with total p-degree at most max_pdeg."""
        n = self.n
        pexps = [p for p in itertools.product(range(max_pdeg + 1), repeat=n)
                 if sum(p) <= max_pdeg]
        qmasks = list(itertools.product((0, 1), repeat=n))
        zs = (0, 1) if self.has_z else (0,)
        out = []
        for z in zs:
            for p in pexps:
                for q in qmasks:
                    for a in self._staircases():
                        out.append(self.word(p, q, a, z))
        return out

    def random_word(self, rng, max_pdeg: int = 2):
        n = self.n
        p = tuple(rng.randint(0, max_pdeg) for _ in range(n))
        q = tuple(rng.randint(0, 1) for _ in range(n))
        a = tuple(rng.randint(0, k + 1) for k in range(n - 1))
        return self.word(p, q, a, rng.randint(0, 1) if self.has_z else 0)

    def rewrite_pair(self, atom1, atom2) -> RewriteOutcome:
        """Rule-table entry: normal form of a 2-generator pattern."""
        return RewriteOutcome(tuple(normalize(self, [atom1, atom2]).terms.items()))


class SpinAffineOps(AffinePQOps):
    """The spin affine Hecke algebra: odd R_i, q_i and even p_i."""

    family = "spin-aff"
    letter = "R"
    pletter = "p"
    qletter = "q"
    swap = "minus"

    def _square_terms(self):
        return ((0, Laurent({2: -1, -2: -1})),)


class PQHeckeOps(AffinePQOps):
    """The affine Hecke algebra in the nonstandard P/Q presentation."""

    family = "pq-aff"
    letter = "Tc"
    pletter = "P"
    qletter = "Q"
    swap = "plus"

    def _square_terms(self):
        return ((0, Laurent({2: 1, -2: 1, 0: 2})),)


class CoverAffineOps(AffinePQOps):
    """The covering affine Hecke algebra, with the central flag z."""

    family = "cover-aff"
    letter = "Tt"
    pletter = "Pt"
    qletter = "Qt"
    has_z = True
    swap = "z"

    def _square_terms(self):
        return ((1, Laurent({2: 1, -2: 1, 0: 1})), (0, L_ONE))


_CACHE: dict = {}


def _cached(cls, n: int):
    key = (cls.family, n)
    ops = _CACHE.get(key)
    if ops is None:
        ops = _CACHE[key] = cls(n)
    return ops


def spin_aff_ops(n: int) -> SpinAffineOps:
    return _cached(SpinAffineOps, n)


def pq_aff_ops(n: int) -> PQHeckeOps:
    return _cached(PQHeckeOps, n)


def cover_aff_ops(n: int) -> CoverAffineOps:
    return _cached(CoverAffineOps, n)


def spin_aff_rewrite(atom1: tuple, atom2: tuple, n: int) -> RewriteOutcome:
    """Replacement for a 2-generator block violating the p-q-R normal order."""
    return spin_aff_ops(n).rewrite_pair(atom1, atom2)


def recursion_images(i: int, n: int) -> tuple:
    """Right-hand sides of the recursions producing p_{i+1} and q_{i+1}.

    In the spin affine algebra:

        p_{i+1} = -1/2 R_i p_i R_i + eps/2 (q_i R_i + R_i q_i) + eps^2/2 p_i
        q_{i+1} =  1/2 R_i q_i R_i + eps/2 (p_i R_i + R_i p_i) - eps^2/2 q_i
    """
    ops = spin_aff_ops(n)
    if not 1 <= i <= n - 1:
        raise InvalidGeneratorError(f"index {i} out of range for rank {n}")
    r = ops.gen(f"R{i}")
    p = ops.gen(f"p{i}")
    q = ops.gen(f"q{i}")
    half_eps = HALF * EPS
    half_eps2 = HALF * EPS2
    p_next = (-(r * p * r)).scale(HALF) + (q * r + r * q).scale(half_eps) \
        + p.scale(half_eps2)
    q_next = (r * q * r).scale(HALF) + (p * r + r * p).scale(half_eps) \
        - q.scale(half_eps2)
    return p_next, q_next


def elementary_symmetric(ops: AffinePQOps, k: int) -> Element:
    """e_k(p_1, ..., p_n) as an element of the affine family."""
    n = ops.n
    terms = {}
    for subset in itertools.combinations(range(1, n + 1), k):
        p = tuple(1 if i in subset else 0 for i in range(1, n + 1))
        terms[ops.word(p, (0,) * n, (0,) * (n - 1))] = L_ONE
    return Element(ops, terms)


def odd_center_candidate(ops: SpinAffineOps) -> Element:
    """The product q_1 q_2 ... q_n (odd central exactly when n is odd)."""
    n = ops.n
    return ops.element(ops.word((0,) * n, (1,) * n, (0,) * (n - 1)))


def cover_aff_quotient(sign: int, x: Element) -> Element:
    """Quotient of the covering affine algebra at z := sign.

    sign=+1 lands in the P/Q-presented affine Hecke algebra, sign=-1 in the
    spin affine Hecke algebra.
    """
    if sign not in (1, -1):
        raise InvalidGeneratorError("sign must be +1 or -1")
    ops = x.ops
    if not getattr(ops, "has_z", False):
        raise InvalidGeneratorError("cover_aff_quotient expects a covering element")
    target = pq_aff_ops(ops.n) if sign == 1 else spin_aff_ops(ops.n)
    out: dict = {}
    for (z, p, q, a), c in x.terms.items():
        if sign == -1 and z:
            c = -c
        _accw(out, (p, q, a), c)
    return Element(target, out)
