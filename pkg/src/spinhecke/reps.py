"""Matrix model of the Clifford algebra and the basic spin supermodule.

The Clifford generators act on a space of dimension 2^ceil(n/2) through
the usual Pauli tensor construction

    c_{2k+1} = sz^{(x)k} (x) sx (x) 1 ...,   c_{2k+2} = sz^{(x)k} (x) sy (x) 1 ...,

with sy carrying sqrt(-1) entries so that every c_i^2 = 1.  Basis vectors
are graded by bit count, making each c_i odd.  The spin Hecke generators
act through

    R_i |-> gamma_i := sqrt(-1) (q c_i - q^{-1} c_{i+1}),

which satisfies all the spin Hecke relations exactly; the gamma_i span an
(n-1)-dimensional space of anticommuting elements, so the image is a
Clifford algebra on n-1 generators of dimension 2^{n-1}.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .coeff import GR_I, GaussRat, L_ONE, Laurent, laurent
from .engine import Element, EngineError
from .finite import SpinHeckeOps
from .matrices import (Matrix, flatten, identity, is_zero, kron, mat,
                       mat_add, mat_mul, mat_scale, mat_sub, rank, zeros)

_SX = mat([[0, 1], [1, 0]])
_SY = (((Laurent(), laurent({0: -GR_I})), (laurent({0: GR_I}), Laurent())))
_SZ = mat([[1, 0], [0, -1]])


@dataclass(frozen=True)
class CliffordRep:
    """Concrete matrices for c_1..c_n plus the parity labeling."""

    n: int
    dim: int
    mats: tuple  # c_i = mats[i-1]
    parities: tuple  # parity of each basis vector

    def c(self, i: int) -> Matrix:
        return self.mats[i - 1]


def clifford_matrices(n: int) -> CliffordRep:
    """An irreducible exact matrix model of the rank-n Clifford algebra."""
    if n < 1:
        raise EngineError("rank n must be >= 1")
    slots = (n + 1) // 2
    dim = 1 << slots
    mats = []
    for j in range(1, n + 1):
        k = (j - 1) // 2
        m = identity(1)
        for s in range(slots):
            if s < k:
                blk = _SZ
            elif s == k:
                blk = _SX if j % 2 == 1 else _SY
            else:
                blk = identity(2)
            m = kron(m, blk)
        mats.append(m)
    parities = tuple(bin(v).count("1") % 2 for v in range(dim))
    return CliffordRep(n, dim, tuple(mats), parities)


@dataclass(frozen=True)
class SpinRep:
    """The basic spin representation: matrices gamma_1..gamma_{n-1}."""

    n: int
    dim: int
    gammas: tuple
    clifford: CliffordRep

    def gamma(self, i: int) -> Matrix:
        return self.gammas[i - 1]


def pi_q(n: int) -> SpinRep:
    """gamma_i = sqrt(-1) (q c_i - q^{-1} c_{i+1}), 1 <= i <= n-1."""
    if n < 2:
        raise EngineError("pi_q requires n >= 2")
    cl = clifford_matrices(n)
    gammas = []
    for i in range(1, n):
        g = mat_sub(mat_scale(cl.c(i), laurent({1: 1})),
                    mat_scale(cl.c(i + 1), laurent({-1: 1})))
        gammas.append(mat_scale(g, laurent({0: GR_I})))
    return SpinRep(n, cl.dim, tuple(gammas), cl)


def act(x: Element, rep: SpinRep) -> Matrix:
    """The matrix of x in the basic spin representation."""
    ops = x.ops
    if not isinstance(ops, SpinHeckeOps) or ops.n != rep.n:
        raise EngineError(f"element of {ops!r} does not match rank-{rep.n} rep")
    total = zeros(rep.dim, rep.dim)
    for w, c in x.terms.items():
        m = identity(rep.dim)
        for atom in ops.word_atoms(w):
            m = mat_mul(m, rep.gamma(atom[1]))
        total = mat_add(total, mat_scale(m, c))
    return total


def gamma_span_rank(rep: SpinRep) -> int:
    """Rank of the span of the gamma_i inside the matrix space."""
    return rank([flatten(g) for g in rep.gammas])


def generated_algebra_rank(rep: SpinRep, max_len: int) -> int:
    """Rank of the span of all gamma products of length <= max_len."""
    vectors = [flatten(identity(rep.dim))]
    for length in range(1, max_len + 1):
        for wordix in itertools.product(range(1, rep.n), repeat=length):
            m = identity(rep.dim)
            for i in wordix:
                m = mat_mul(m, rep.gamma(i))
            vectors.append(flatten(m))
    return rank(vectors)


def clifford_relations_hold(cl: CliffordRep) -> bool:
    one = identity(cl.dim)
    for i in range(1, cl.n + 1):
        if mat_mul(cl.c(i), cl.c(i)) != one:
            return False
        for j in range(i + 1, cl.n + 1):
            anti = mat_add(mat_mul(cl.c(i), cl.c(j)), mat_mul(cl.c(j), cl.c(i)))
            if not is_zero(anti):
                return False
    for i in range(1, cl.n + 1):
        for r, row in enumerate(cl.c(i)):
            for cix, entry in enumerate(row):
                if entry and cl.parities[r] == cl.parities[cix]:
                    return False  # c_i must be odd for the parity labeling
    return True


def spin_relations_hold(rep: SpinRep) -> bool:
    """All defining spin Hecke relations as exact matrix identities."""
    n = rep.n
    one = identity(rep.dim)
    sq = mat_scale(one, laurent({2: -1, -2: -1}))
    eps2 = laurent({2: 1, 0: -2, -2: 1})
    for i in range(1, n):
        gi = rep.gamma(i)
        if mat_mul(gi, gi) != sq:
            return False
        for j in range(i + 2, n):
            gj = rep.gamma(j)
            if not is_zero(mat_add(mat_mul(gi, gj), mat_mul(gj, gi))):
                return False
    for i in range(1, n - 1):
        gi, gj = rep.gamma(i), rep.gamma(i + 1)
        lhs = mat_sub(mat_mul(mat_mul(gi, gj), gi), mat_mul(mat_mul(gj, gi), gj))
        rhs = mat_scale(mat_sub(gj, gi), eps2)
        if lhs != rhs:
            return False
    return True
