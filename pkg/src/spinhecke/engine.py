"""Generic superalgebra elements and the straightening driver.

An algebra family supplies its local rewrite rules through ``rmul_atom``:
the product of a normal-form basis word with a single generator, expanded
in the normal-form basis again.  The driver folds a raw word one generator
at a time, so every intermediate value is a combination of standard words
and normalizing a normal form is the identity.  Termination is structural:
each family's ``rmul_atom`` recursion strictly decreases its word measure
(asserted in the family modules), and a global step budget guards against
implementation bugs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .coeff import Laurent, L_ONE, as_laurent, laurent_is_simple, laurent_str

Atom = tuple
Word = tuple

STEP_BUDGET = 10_000_000


class EngineError(Exception):
    """Base class for algebra-level errors."""


class InvalidGeneratorError(EngineError):
    """Unknown generator or index out of range for the algebra's rank."""


class AlgebraMismatchError(EngineError):
    """Operands belong to different algebras."""


class BudgetExceededError(EngineError):
    """The rewrite step budget was exhausted; indicates an engine bug."""


@dataclass(frozen=True)
class RewriteOutcome:
    """Replacement of a reducible pattern: a list of (word, coefficient).

    Replacement words are strictly smaller than the rewritten pattern in
    the family's termination order (shorter, or equal length and closer to
    the standard order).
    """

    replacement: tuple


class AlgebraOps:
    """Shared machinery for one algebra instance (family tag + rank n).

    Subclasses implement the normal-form word shape and ``rmul_atom``.
    Instances are cached per (family, n) so memo tables stay warm across
    elements, CLI calls and service requests.
    """

    family = "abstract"

    def __init__(self, n: int):
        self.n = n
        self._steps = 0
        self._depth = 0

    # -- family interface -------------------------------------------------

    def one_word(self) -> Word:
        raise NotImplementedError

    def rmul_atom(self, word: Word, atom: Atom) -> list:
        """Normal form of word * atom as [(word, Laurent), ...]."""
        raise NotImplementedError

    def word_atoms(self, word: Word) -> tuple:
        """Canonical generator sequence whose product is the word."""
        raise NotImplementedError

    def word_parity(self, word: Word) -> int:
        raise NotImplementedError

    def gen_atoms(self) -> dict:
        """Mapping generator name -> atom, e.g. {"R1": ("R", 1)}."""
        raise NotImplementedError

    def atom_label(self, atom: Atom) -> str:
        raise NotImplementedError

    def sort_key(self, word: Word):
        return word

    # -- common helpers ----------------------------------------------------

    @property
    def key(self):
        return (self.family, self.n)

    def __repr__(self):
        return f"<{self.family} n={self.n}>"

    def _tick(self, k: int = 1):
        self._steps += k
        if self._steps > STEP_BUDGET:
            raise BudgetExceededError(
                f"rewrite budget exceeded in {self!r}; this is an engine bug")

    def _enter(self):
        if self._depth == 0:
            self._steps = 0
        self._depth += 1

    def _leave(self):
        self._depth -= 1

    def element(self, word: Word | None = None, coeff=1) -> "Element":
        c = as_laurent(coeff)
        w = self.one_word() if word is None else word
        return Element(self, {w: c} if c else {})

    def one(self) -> "Element":
        return self.element()

    def zero(self) -> "Element":
        return Element(self, {})

    def scalar(self, c) -> "Element":
        return self.element(coeff=c)

    def gen(self, name: str) -> "Element":
        atoms = self.gen_atoms()
        if name not in atoms:
            raise InvalidGeneratorError(f"unknown generator {name!r} in {self!r}")
        return normalize(self, [atoms[name]])

    def atom_element(self, atom: Atom) -> "Element":
        return normalize(self, [atom])

    def fold_word(self, terms: dict, word: Word) -> dict:
        """Right-multiply a term map by one basis word.

        Families may override with a bulk strategy; the default folds the
        word's canonical atom sequence.
        """
        return self.fold(terms, self.word_atoms(word))

    def fold(self, terms: dict, atoms: Iterable[Atom]) -> dict:
        """Right-multiply a term map by a sequence of generators."""
        cur = terms
        for atom in atoms:
            nxt: dict = {}
            for w, c in cur.items():
                self._tick()
                for w2, c2 in self.rmul_atom(w, atom):
                    cc = c * c2
                    if not cc:
                        continue
                    s = nxt.get(w2)
                    s = cc if s is None else s + cc
                    if s:
                        nxt[w2] = s
                    elif w2 in nxt:
                        del nxt[w2]
            cur = nxt
        return cur


class Element:
    """A finite Laurent-linear combination of normal-form words.

    Immutable by convention; all operators return fresh elements.  Two
    elements of the same algebra are equal iff their term maps coincide
    (normal forms are canonical).
    """

    __slots__ = ("ops", "terms")

    def __init__(self, ops: AlgebraOps, terms: dict):
        self.ops = ops
        self.terms = terms

    # -- vector space ------------------------------------------------------

    def _check(self, other: "Element"):
        if self.ops.key != other.ops.key:
            raise AlgebraMismatchError(
                f"cannot combine {self.ops!r} with {other.ops!r}")

    def __add__(self, other) -> "Element":
        other = self._promote(other)
        self._check(other)
        d = dict(self.terms)
        for w, c in other.terms.items():
            s = d.get(w)
            s = c if s is None else s + c
            if s:
                d[w] = s
            elif w in d:
                del d[w]
        return Element(self.ops, d)

    def __sub__(self, other) -> "Element":
        return self + (-self._promote(other))

    def __neg__(self) -> "Element":
        return Element(self.ops, {w: -c for w, c in self.terms.items()})

    def scale(self, c) -> "Element":
        c = as_laurent(c)
        if not c:
            return Element(self.ops, {})
        return Element(self.ops, {w: c * v for w, v in self.terms.items()})

    def _promote(self, x) -> "Element":
        if isinstance(x, Element):
            return x
        c = as_laurent(x)
        if c is None:
            raise TypeError(f"cannot promote {x!r} to Element")
        return self.ops.scalar(c)

    def __mul__(self, other) -> "Element":
        c = as_laurent(other)
        if c is not None:
            return self.scale(c)
        if not isinstance(other, Element):
            return NotImplemented
        return mul(self, other)

    def __rmul__(self, other) -> "Element":
        c = as_laurent(other)
        if c is not None:
            return self.scale(c)
        return NotImplemented

    def __pow__(self, k: int) -> "Element":
        if k < 0:
            raise EngineError("negative powers are only defined for X generators")
        out = self.ops.one()
        for _ in range(k):
            out = mul(out, self)
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            other = self._promote(other)
        return self.ops.key == other.ops.key and self.terms == other.terms

    def __hash__(self):
        return hash((self.ops.key, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # -- structure -----------------------------------------------------------

    def coeff(self, word: Word) -> Laurent:
        return self.terms.get(word, Laurent())

    def support(self) -> list:
        return sorted(self.terms, key=self.ops.sort_key)

    def sorted_terms(self) -> list:
        return [(w, self.terms[w]) for w in self.support()]

    def parity(self) -> str:
        """'even', 'odd', or 'mixed'; the zero element counts as even."""
        seen = {self.ops.word_parity(w) for w in self.terms}
        if len(seen) == 2:
            return "mixed"
        if seen == {1}:
            return "odd"
        return "even"

    def map_coeffs(self, fn) -> "Element":
        d = {}
        for w, c in self.terms.items():
            c2 = fn(c)
            if c2:
                d[w] = c2
        return Element(self.ops, d)

    def __str__(self) -> str:
        return element_str(self)

    def __repr__(self) -> str:
        return f"Element({self.ops!r}, {element_str(self)})"


def normalize(ops: AlgebraOps, atoms: Iterable[Atom], coeff=1) -> Element:
    """Straighten a raw product of generators into the standard basis.

    Idempotent on normal forms: folding a standard word's own atom sequence
    reproduces exactly that word.
    """
    c = as_laurent(coeff)
    ops._enter()
    try:
        terms = ops.fold({ops.one_word(): c} if c else {}, atoms)
    finally:
        ops._leave()
    return Element(ops, terms)


def mul(a: Element, b: Element) -> Element:
    """Exact product; bilinear extension of word concatenation + straightening."""
    a._check(b)
    ops = a.ops
    ops._enter()
    try:
        out: dict = {}
        for wb, cb in b.terms.items():
            part = ops.fold_word({w: c * cb for w, c in a.terms.items()}, wb)
            for w, c in part.items():
                s = out.get(w)
                s = c if s is None else s + c
                if s:
                    out[w] = s
                elif w in out:
                    del out[w]
    finally:
        ops._leave()
    return Element(ops, out)


# -- canonical text ---------------------------------------------------------


def word_str(ops: AlgebraOps, word: Word) -> str:
    atoms = ops.word_atoms(word)
    if not atoms:
        return "1"
    pieces = []
    run_label, run_len = None, 0
    for atom in list(atoms) + [None]:
        label = None if atom is None else ops.atom_label(atom)
        if label == run_label:
            run_len += 1
            continue
        if run_label is not None:
            pieces.append(run_label if run_len == 1 else f"{run_label}^{run_len}")
        run_label, run_len = label, 1
    return "*".join(pieces)


def element_str(x: Element) -> str:
    if not x.terms:
        return "0"
    pieces = []
    for w, c in x.sorted_terms():
        wtxt = word_str(x.ops, w)
        if wtxt == "1":
            ctxt = laurent_str(c)
            pieces.append(ctxt if laurent_is_simple(c) else f"({ctxt})")
        elif c == L_ONE:
            pieces.append(wtxt)
        elif c == -L_ONE:
            pieces.append("-" + wtxt)
        elif laurent_is_simple(c):
            pieces.append(f"{laurent_str(c)}*{wtxt}")
        else:
            pieces.append(f"({laurent_str(c)})*{wtxt}")
    out = pieces[0]
    for p in pieces[1:]:
        if p.startswith("-"):
            out += " - " + p[1:]
        else:
            out += " + " + p
    return out
