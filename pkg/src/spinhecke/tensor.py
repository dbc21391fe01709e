"""The superalgebra tensor product C_n (x) A.

Words are (clifford mask, word of the right factor), normalized with the
Clifford part leftmost.  Multiplication uses the super sign rule

    (c' (x) b')(c (x) b) = (-1)^{|b'| |c|} (c'c (x) b'b),

applied whenever a Clifford letter crosses the right factor of the word to
its left.
"""

from __future__ import annotations

from .coeff import L_ONE
from .engine import AlgebraOps, InvalidGeneratorError
from .heckecliff import cliff_merge


class TensorOps(AlgebraOps):
    """C_n tensor `right`, where `right` is any algebra family of rank n."""

    def __init__(self, right: AlgebraOps):
        super().__init__(right.n)
        self.right = right
        self.family = f"tensor({right.family})"
        self.affine = getattr(right, "affine", False)
        if "c1" in right.gen_atoms():
            raise InvalidGeneratorError(
                f"right factor {right!r} already owns Clifford generators")

    def one_word(self):
        return ((0,) * self.n, self.right.one_word())

    def rmul_atom(self, word, atom):
        cm, rw = word
        if atom[0] == "c":
            j = atom[1]
            if not 1 <= j <= self.n:
                raise InvalidGeneratorError(f"bad generator {atom!r} in {self!r}")
            mask = tuple(1 if k == j else 0 for k in range(1, self.n + 1))
            sign, cmr = cliff_merge(cm, mask)
            if self.right.word_parity(rw):
                sign = -sign
            return [(((cmr, rw)), L_ONE if sign == 1 else -L_ONE)]
        return [((cm, rw2), c) for rw2, c in self.right.rmul_atom(rw, atom)]

    def word_atoms(self, word):
        cm, rw = word
        atoms = [("c", j) for j, bit in enumerate(cm, 1) if bit]
        atoms.extend(self.right.word_atoms(rw))
        return tuple(atoms)

    def word_parity(self, word):
        cm, rw = word
        return (sum(cm) + self.right.word_parity(rw)) % 2

    def gen_atoms(self):
        d = {f"c{j}": ("c", j) for j in range(1, self.n + 1)}
        d.update(self.right.gen_atoms())
        return d

    def atom_label(self, atom):
        if atom[0] == "c":
            return f"c{atom[1]}"
        return self.right.atom_label(atom)

    def sort_key(self, word):
        cm, rw = word
        return (cm, self.right.sort_key(rw))

    def basis(self) -> list:
        import itertools
        masks = list(itertools.product((0, 1), repeat=self.n))
        return [(cm, rw) for cm in masks for rw in self.right.basis()]

    def basis_truncated(self, bound: int) -> list:
        import itertools
        masks = list(itertools.product((0, 1), repeat=self.n))
        return [(cm, rw) for cm in masks
                for rw in self.right.basis_truncated(bound)]

    def random_word(self, rng, **kw):
        cm = tuple(rng.randint(0, 1) for _ in range(self.n))
        return (cm, self.right.random_word(rng, **kw))

    def clifford_part_trivial(self, x) -> bool:
        return all(not any(cm) for cm, _ in x.terms)

    def right_component(self, x):
        """Extract b from an element of the form 1 (x) b."""
        from .engine import Element
        if not self.clifford_part_trivial(x):
            raise InvalidGeneratorError("element has a nontrivial Clifford part")
        return Element(self.right, {rw: c for (_, rw), c in x.terms.items()})


_CACHE: dict = {}


def tensor_ops(right: AlgebraOps) -> TensorOps:
    key = ("tensor", right.key)
    ops = _CACHE.get(key)
    if ops is None:
        ops = _CACHE[key] = TensorOps(right)
    return ops
