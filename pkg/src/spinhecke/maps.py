"""Generator maps: (anti-)involutions and the Morita super-equivalences.

A GeneratorMap assigns a target element to every source generator and
extends multiplicatively (or anti-multiplicatively).  The two families of
inverse isomorphisms are

    finite:  Phi: Hc_n -> C_n (x) H_n^-,  T_i |-> -1/2 R_i (c_i - c_{i+1})
                                                 + eps/2 (1 - c_i c_{i+1})
             Psi: C_n (x) H_n^- -> Hc_n,  R_i |-> (c_i - c_{i+1}) T_i + eps c_{i+1}

    affine:  extended by  X_i |-> p_i - c_i q_i,  X_i^{-1} |-> p_i + c_i q_i,
             p_i |-> (X_i + X_i^{-1})/2,  q_i |-> (X_i - X_i^{-1}) c_i / 2,

both extending the identity on the Clifford generators.
"""

from __future__ import annotations

from .coeff import EPS, HALF, Laurent
from .engine import AlgebraOps, Element, InvalidGeneratorError, mul
from .finite import spin_ops
from .affine import spin_aff_ops
from .heckecliff import hc_aff_ops, hc_ops
from .tensor import tensor_ops


class GeneratorMap:
    """A (super)homomorphism or anti-homomorphism given on generators."""

    def __init__(self, name: str, source: AlgebraOps, target: AlgebraOps,
                 images: dict, kind: str = "hom", coeff_map=None):
        self.name = name
        self.source = source
        self.target = target
        self.images = images
        self.kind = kind
        self.coeff_map = coeff_map
        self._word_memo: dict = {}
        missing = [a for a in source.gen_atoms().values() if a not in images]
        if missing:
            raise InvalidGeneratorError(f"map {name}: no image for {missing}")

    def image_of_word(self, word) -> Element:
        out = self._word_memo.get(word)
        if out is None:
            atoms = self.source.word_atoms(word)
            if self.kind == "antihom":
                atoms = tuple(reversed(atoms))
            out = self.target.one()
            for atom in atoms:
                out = mul(out, self.images[atom])
            self._word_memo[word] = out
        return out

    def __call__(self, x: Element) -> Element:
        if x.ops.key != self.source.key:
            raise InvalidGeneratorError(
                f"map {self.name} expects {self.source!r}, got {x.ops!r}")
        out = self.target.zero()
        for w, c in x.terms.items():
            if self.coeff_map is not None:
                c = self.coeff_map(c)
            out = out + self.image_of_word(w).scale(c)
        return out


# -- involutions -------------------------------------------------------------


def spin_involution(name: str, n: int) -> GeneratorMap:
    """sigma, s, bar or tau on the spin Hecke algebra."""
    if name not in ("sigma", "s", "bar", "tau"):
        raise InvalidGeneratorError(f"unknown involution {name!r}")
    ops = spin_ops(n)
    imgs = {}
    for i in range(1, n):
        if name == "sigma":
            imgs[("R", i)] = ops.gen(f"R{n - i}")
        elif name == "bar":
            imgs[("R", i)] = ops.gen(f"R{i}")
        else:
            imgs[("R", i)] = -ops.gen(f"R{i}")
    return GeneratorMap(name, ops, ops, imgs,
                        "antihom" if name == "tau" else "hom",
                        Laurent.bar if name == "bar" else None)


_AFFINE_TABLE = {
    # name: (p sign, p flip?, q sign, q flip?, R sign, R flip?, bar?, kind)
    "sigma+": (1, True, 1, True, 1, True, False, "hom"),
    "sigma-": (-1, True, -1, True, 1, True, False, "hom"),
    "sp": (-1, False, 1, False, -1, False, False, "hom"),
    "sq": (1, False, -1, False, -1, False, False, "hom"),
    "barp": (-1, False, 1, False, 1, False, True, "hom"),
    "barq": (1, False, -1, False, 1, False, True, "hom"),
    "tau": (1, False, -1, False, -1, False, False, "antihom"),
}


def affine_involution(name: str, n: int) -> GeneratorMap:
    """The involutions of the spin affine Hecke algebra, and tau."""
    if name not in _AFFINE_TABLE:
        raise InvalidGeneratorError(f"unknown involution {name!r}")
    psgn, pflip, qsgn, qflip, rsgn, rflip, barq, kind = _AFFINE_TABLE[name]
    ops = spin_aff_ops(n)
    imgs = {}
    for i in range(1, n + 1):
        pi = ops.gen(f"p{n + 1 - i}" if pflip else f"p{i}")
        qi = ops.gen(f"q{n + 1 - i}" if qflip else f"q{i}")
        imgs[("p", i)] = pi if psgn == 1 else -pi
        imgs[("q", i)] = qi if qsgn == 1 else -qi
    for i in range(1, n):
        ri = ops.gen(f"R{n - i}" if rflip else f"R{i}")
        imgs[("R", i)] = ri if rsgn == 1 else -ri
    return GeneratorMap(name, ops, ops, imgs, kind,
                        Laurent.bar if barq else None)


# -- the Morita super-equivalences --------------------------------------------


def phi_finite(n: int) -> GeneratorMap:
    """Phi: Hc_n -> C_n (x) H_n^-."""
    src = hc_ops(n)
    tgt = tensor_ops(spin_ops(n))
    imgs = {("c", j): tgt.gen(f"c{j}") for j in range(1, n + 1)}
    for i in range(1, n):
        ri = tgt.gen(f"R{i}")
        ci, cip = tgt.gen(f"c{i}"), tgt.gen(f"c{i + 1}")
        imgs[("T", i)] = (ri * (ci - cip)).scale(-HALF) \
            + (tgt.one() - ci * cip).scale(HALF * EPS)
    return GeneratorMap("phi", src, tgt, imgs)


def psi_finite(n: int) -> GeneratorMap:
    """Psi: C_n (x) H_n^- -> Hc_n."""
    src = tensor_ops(spin_ops(n))
    tgt = hc_ops(n)
    imgs = {("c", j): tgt.gen(f"c{j}") for j in range(1, n + 1)}
    for i in range(1, n):
        ti = tgt.gen(f"T{i}")
        ci, cip = tgt.gen(f"c{i}"), tgt.gen(f"c{i + 1}")
        imgs[("R", i)] = (ci - cip) * ti + cip.scale(EPS)
    return GeneratorMap("psi", src, tgt, imgs)


def phi_affine(n: int) -> GeneratorMap:
    """Phi: Hc^_n -> C_n (x) H^_n^-, extending the finite Phi."""
    src = hc_aff_ops(n)
    tgt = tensor_ops(spin_aff_ops(n))
    imgs = {("c", j): tgt.gen(f"c{j}") for j in range(1, n + 1)}
    for i in range(1, n):
        ri = tgt.gen(f"R{i}")
        ci, cip = tgt.gen(f"c{i}"), tgt.gen(f"c{i + 1}")
        imgs[("T", i)] = (ri * (ci - cip)).scale(-HALF) \
            + (tgt.one() - ci * cip).scale(HALF * EPS)
    for i in range(1, n + 1):
        pi, qi, ci = tgt.gen(f"p{i}"), tgt.gen(f"q{i}"), tgt.gen(f"c{i}")
        imgs[("X", i, 1)] = pi - ci * qi
        imgs[("X", i, -1)] = pi + ci * qi
    return GeneratorMap("phi-aff", src, tgt, imgs)


def psi_affine(n: int) -> GeneratorMap:
    """Psi: C_n (x) H^_n^- -> Hc^_n, extending the finite Psi."""
    src = tensor_ops(spin_aff_ops(n))
    tgt = hc_aff_ops(n)
    imgs = {("c", j): tgt.gen(f"c{j}") for j in range(1, n + 1)}
    for i in range(1, n):
        ti = tgt.gen(f"T{i}")
        ci, cip = tgt.gen(f"c{i}"), tgt.gen(f"c{i + 1}")
        imgs[("R", i)] = (ci - cip) * ti + cip.scale(EPS)
    for i in range(1, n + 1):
        xi, xii, ci = tgt.gen(f"X{i}"), tgt.gen(f"Xi{i}"), tgt.gen(f"c{i}")
        imgs[("p", i)] = (xi + xii).scale(HALF)
        imgs[("q", i)] = ((xi - xii) * ci).scale(HALF)
    return GeneratorMap("psi-aff", src, tgt, imgs)


MAP_BUILDERS = {
    "phi": phi_finite,
    "psi": psi_finite,
    "phi-aff": phi_affine,
    "psi-aff": psi_affine,
}

INVOLUTION_BUILDERS = {
    "sigma": spin_involution,
    "s": spin_involution,
    "bar": spin_involution,
    "tau": spin_involution,
}


def named_map(name: str, n: int) -> GeneratorMap:
    """Look up phi/psi (finite or affine) or an involution by name."""
    if name in MAP_BUILDERS:
        return MAP_BUILDERS[name](n)
    if name in INVOLUTION_BUILDERS:
        return spin_involution(name, n)
    if name in _AFFINE_TABLE:
        return affine_involution(name, n)
    raise InvalidGeneratorError(f"unknown map {name!r}")
