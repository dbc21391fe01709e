"""Hecke-Clifford algebras, finite and affine.

Words are normal-ordered as  X_1^{a_1} ... X_n^{a_n} c_1^{e_1} ... c_n^{e_n} T_w
(the finite algebra has no X part).  The T part is indexed by a permutation
in one-line notation; products T_w T_i use the classical length criterion

    T_w T_i = T_{w s_i}                    if l(w s_i) > l(w)
    T_w T_i = T_{w s_i} + eps T_w          otherwise,

which sidesteps braid-relation rewriting entirely.  Clifford letters move
left through the T part via

    T_i c_i = c_{i+1} T_i,     T_i c_{i+1} = c_i T_i - eps (c_i - c_{i+1}),

and X letters via the normal-ordered forms of

    T_i X_i     = X_{i+1} T_i - eps (X_{i+1} + c_i c_{i+1} X_i)
    T_i X_{i+1} = X_i T_i + eps (1 - c_i c_{i+1}) X_{i+1},

together with two inverse-exponent companions solved from these; the
companions are checked at construction time by multiplying back.
"""

from __future__ import annotations

import itertools

from .coeff import EPS, L_ONE, Laurent
from .engine import AlgebraOps, Element, InvalidGeneratorError, normalize

Perm = tuple


def perm_identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def perm_length(p: Perm) -> int:
    """Coxeter length = inversion count."""
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


def perm_mul_si(p: Perm, i: int) -> Perm:
    """Right multiplication by s_i: swap the entries in positions i, i+1."""
    q = list(p)
    q[i - 1], q[i] = q[i], q[i - 1]
    return tuple(q)


def perm_descent(p: Perm, i: int) -> bool:
    """True iff l(p s_i) < l(p), i.e. p(i) > p(i+1)."""
    return p[i - 1] > p[i]


def first_descent(p: Perm):
    for i in range(1, len(p)):
        if p[i - 1] > p[i]:
            return i
    return None


def reduced_word(p: Perm) -> tuple:
    """A fixed reduced word for p (bubble sort; deterministic)."""
    w = list(p)
    swaps = []
    while True:
        for i in range(len(w) - 1):
            if w[i] > w[i + 1]:
                w[i], w[i + 1] = w[i + 1], w[i]
                swaps.append(i + 1)
                break
        else:
            break
    return tuple(reversed(swaps))


def all_perms(n: int) -> list:
    return [tuple(p) for p in itertools.permutations(range(1, n + 1))]


def cliff_merge(left: tuple, right: tuple) -> tuple:
    """Multiply Clifford monomials: (sign, mask) for c^left * c^right."""
    sign = 1
    cur = list(left)
    for j, bit in enumerate(right):
        if not bit:
            continue
        if sum(cur[j + 1:]) % 2:
            sign = -sign
        cur[j] ^= 1
    return sign, tuple(cur)


class HeckeCliffordOps(AlgebraOps):
    """The finite Hecke-Clifford algebra; words are (cmask, perm)."""

    family = "hc"
    affine = False
    clifford = True

    def __init__(self, n: int):
        if n < 1:
            raise InvalidGeneratorError("rank n must be >= 1")
        super().__init__(n)
        self._tc_memo: dict = {}
        self._tx_memo: dict = {}
        if self.affine:
            self._verify_inverse_rules()

    # -- word embedding ------------------------------------------------------

    def _dec(self, word):
        if self.affine:
            return word
        c, s = word
        return ((0,) * self.n, c, s)

    def _mkw(self, x, c, s):
        return (x, c, s) if self.affine else (c, s)

    def one_word(self):
        n = self.n
        return self._mkw((0,) * n, (0,) * n, perm_identity(n))

    # -- T_sigma * c_j ---------------------------------------------------------

    def _tmul(self, terms: dict, i: int) -> dict:
        """Append T_i to every word of a term map (length criterion)."""
        out: dict = {}

        def put(w, c):
            s = out.get(w)
            s = c if s is None else s + c
            if s:
                out[w] = s
            elif w in out:
                del out[w]

        for w, c in terms.items():
            x, cm, sig = self._dec(w)
            desc = perm_descent(sig, i)
            put(self._mkw(x, cm, perm_mul_si(sig, i)), c)
            if desc:
                put(w, c * EPS)
        return out

    def _tc(self, sig: Perm, j: int) -> dict:
        """Normal form of T_sig * c_j as a term map."""
        key = (sig, j)
        hit = self._tc_memo.get(key)
        if hit is not None:
            return hit
        self._tick()
        i = first_descent(sig)
        if i is None:
            cm = tuple(1 if k == j else 0 for k in range(1, self.n + 1))
            res = {self._mkw((0,) * self.n, cm, sig): L_ONE}
        else:
            tau = perm_mul_si(sig, i)
            assert perm_length(tau) < perm_length(sig)
            if j == i:
                res = self._tmul(self._tc(tau, i + 1), i)
            elif j == i + 1:
                res = self._tmul(self._tc(tau, i), i)
                _dacc(res, self._tc(tau, i), -EPS)
                _dacc(res, self._tc(tau, i + 1), EPS)
            else:
                res = self._tmul(self._tc(tau, j), i)
        self._tc_memo[key] = res
        return res

    # -- T_sigma * X_j^{+-1} ------------------------------------------------------

    def _xword(self, j: int, e: int):
        x = tuple(e if k == j else 0 for k in range(1, self.n + 1))
        return self._mkw(x, (0,) * self.n, perm_identity(self.n))

    def _tx(self, sig: Perm, j: int, e: int) -> dict:
        key = (sig, j, e)
        hit = self._tx_memo.get(key)
        if hit is not None:
            return hit
        self._tick()
        i = first_descent(sig)
        if i is None:
            res = {self._xword(j, e): L_ONE}
        else:
            tau = perm_mul_si(sig, i)
            assert perm_length(tau) < perm_length(sig)
            if j != i and j != i + 1:
                res = self._tmul(self._tx(tau, j, e), i)
            else:
                def ccpart(jj):
                    # the Clifford correction; absent with c's suppressed
                    if not self.clifford:
                        return {}
                    return self.fold(self._tx(tau, jj, -1),
                                     [("c", i), ("c", i + 1)])

                if e == 1 and j == i:
                    res = self._tmul(self._tx(tau, i + 1, 1), i)
                    _dacc(res, self._tx(tau, i + 1, 1), -EPS)
                    _dacc(res, ccpart(i), -EPS)
                elif e == 1:
                    res = self._tmul(self._tx(tau, i, 1), i)
                    _dacc(res, self._tx(tau, i + 1, 1), EPS)
                    _dacc(res, ccpart(i + 1), -EPS)
                elif j == i:
                    res = self._tmul(self._tx(tau, i + 1, -1), i)
                    _dacc(res, self._tx(tau, i, -1), EPS)
                    _dacc(res, ccpart(i + 1), EPS)
                else:
                    res = self._tmul(self._tx(tau, i, -1), i)
                    _dacc(res, self._tx(tau, i, -1), -EPS)
                    _dacc(res, ccpart(i), EPS)
        self._tx_memo[key] = res
        return res

    def _verify_inverse_rules(self):
        """Check T_i X_j^{-1} rules by multiplying back against X_j."""
        for i in range(1, self.n):
            ti = normalize(self, [("T", i)])
            for j in (i, i + 1):
                back = normalize(self, [("T", i), ("X", j, -1), ("X", j, 1)])
                if back != ti:
                    raise AssertionError(
                        f"derived rule T{i} Xi{j} failed self-test")

    # -- AlgebraOps interface ---------------------------------------------------

    def rmul_atom(self, word, atom):
        x, cm, sig = self._dec(word)
        tag = atom[0]
        if tag == "T":
            i = atom[1]
            if not 1 <= i <= self.n - 1:
                raise InvalidGeneratorError(f"bad generator {atom!r} in {self!r}")
            return list(self._tmul({word: L_ONE}, i).items())
        if tag == "c":
            j = atom[1]
            if not self.clifford or not 1 <= j <= self.n:
                raise InvalidGeneratorError(f"bad generator {atom!r} in {self!r}")
            out: dict = {}
            for w2, c2 in self._tc(sig, j).items():
                x2, cm2, sig2 = self._dec(w2)
                sign, cmr = cliff_merge(cm, cm2)
                c = c2 if sign == 1 else -c2
                _acc1(out, self._mkw(x, cmr, sig2), c)
            return list(out.items())
        if tag == "X":
            if not self.affine:
                raise InvalidGeneratorError(f"no X generators in {self!r}")
            j, e = atom[1], atom[2]
            if not 1 <= j <= self.n or e not in (1, -1):
                raise InvalidGeneratorError(f"bad generator {atom!r} in {self!r}")
            out = {}
            for w2, c2 in self._tx(sig, j, e).items():
                xv, cm2, sig2 = self._dec(w2)
                # move X^xv left through c^cm: crossing c_k flips the k-exponent
                xv = tuple(-v if cm[k] else v for k, v in enumerate(xv))
                xr = tuple(a + b for a, b in zip(x, xv))
                sign, cmr = cliff_merge(cm, cm2)
                c = c2 if sign == 1 else -c2
                _acc1(out, self._mkw(xr, cmr, sig2), c)
            return list(out.items())
        raise InvalidGeneratorError(f"bad generator {atom!r} in {self!r}")

    def word_atoms(self, word):
        x, cm, sig = self._dec(word)
        atoms = []
        for j, e in enumerate(x, 1):
            s = 1 if e > 0 else -1
            atoms.extend([("X", j, s)] * abs(e))
        for j, bit in enumerate(cm, 1):
            if bit:
                atoms.append(("c", j))
        atoms.extend(("T", i) for i in reduced_word(sig))
        return tuple(atoms)

    def word_parity(self, word):
        _, cm, _ = self._dec(word)
        return sum(cm) % 2

    def gen_atoms(self):
        d = {f"T{i}": ("T", i) for i in range(1, self.n)}
        for j in range(1, self.n + 1):
            if self.clifford:
                d[f"c{j}"] = ("c", j)
            if self.affine:
                d[f"X{j}"] = ("X", j, 1)
                d[f"Xi{j}"] = ("X", j, -1)
        return d

    def atom_label(self, atom):
        if atom[0] == "X":
            return f"X{atom[1]}" if atom[2] == 1 else f"Xi{atom[1]}"
        return f"{atom[0]}{atom[1]}"

    # -- bases ---------------------------------------------------------------------

    def _cmasks(self) -> list:
        if not self.clifford:
            return [(0,) * self.n]
        return list(itertools.product((0, 1), repeat=self.n))

    def basis(self) -> list:
        """All 2^n n! standard words (finite algebra only)."""
        if self.affine:
            raise InvalidGeneratorError("affine algebra has no finite basis")
        return [(cm, sig) for cm in self._cmasks()
                for sig in all_perms(self.n)]

    def basis_truncated(self, xbound: int) -> list:
        """Affine standard words with every X exponent in [-xbound, xbound]."""
        xs = itertools.product(range(-xbound, xbound + 1), repeat=self.n)
        return [(x, cm, sig) for x in xs for cm in self._cmasks()
                for sig in all_perms(self.n)]

    def tsigma(self, sig: Perm) -> Element:
        """The basis element T_sigma."""
        return self.element(self._mkw((0,) * self.n, (0,) * self.n, sig))

    def random_word(self, rng, xbound: int = 2):
        n = self.n
        sig = list(range(1, n + 1))
        rng.shuffle(sig)
        cm = tuple(rng.randint(0, 1) if self.clifford else 0
                   for _ in range(n))
        if not self.affine:
            return (cm, tuple(sig))
        x = tuple(rng.randint(-xbound, xbound) for _ in range(n))
        return (x, cm, tuple(sig))


class AffineHeckeCliffordOps(HeckeCliffordOps):
    """The affine Hecke-Clifford algebra; words are (xvec, cmask, perm)."""

    family = "hc-aff"
    affine = True


class AffineHeckeOps(AffineHeckeCliffordOps):
    """The ordinary affine Hecke algebra: the same machinery with the
    Clifford generators suppressed, so T_i X_i T_i = X_{i+1} exactly."""

    family = "hecke-aff"
    clifford = False


def _acc1(d: dict, w, c):
    s = d.get(w)
    s = c if s is None else s + c
    if s:
        d[w] = s
    elif w in d:
        del d[w]


def _dacc(target: dict, src: dict, scalar: Laurent):
    for w, c in src.items():
        _acc1(target, w, c * scalar)


_CACHE: dict = {}


def hc_ops(n: int) -> HeckeCliffordOps:
    ops = _CACHE.get(("hc", n))
    if ops is None:
        ops = _CACHE[("hc", n)] = HeckeCliffordOps(n)
    return ops


def hc_aff_ops(n: int) -> AffineHeckeCliffordOps:
    ops = _CACHE.get(("hc-aff", n))
    if ops is None:
        ops = _CACHE[("hc-aff", n)] = AffineHeckeCliffordOps(n)
    return ops


def hecke_aff_ops(n: int) -> AffineHeckeOps:
    ops = _CACHE.get(("hecke-aff", n))
    if ops is None:
        ops = _CACHE[("hecke-aff", n)] = AffineHeckeOps(n)
    return ops


def tsigma_mul(sig: Perm, i: int, n: int) -> Element:
    """T_sigma * T_i by the length criterion, as an element of hc(n)."""
    ops = hc_ops(n)
    return ops.tsigma(sig) * ops.gen(f"T{i}")
