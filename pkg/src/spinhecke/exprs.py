"""Expression grammar shared by the CLI and the service.

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' int)?
    atom   := rational | name | '(' expr ')'

Whitespace insensitive.  `q` is the Laurent variable, `i` denotes
sqrt(-1), `e` is shorthand for q - q^-1; every other name must be a
generator of the chosen algebra (e.g. R1, Tt2, Tc1, T1, c2, X1, Xi1, p1,
q2, P1, Q1, Pt1, Qt1, z).  Errors carry the byte offset of the offending
token.  Round trip: parsing the canonical text of an element reproduces
it exactly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .coeff import EPS, GR_I, L_ONE, Laurent, laurent
from .engine import AlgebraOps, Element, InvalidGeneratorError, normalize
from .finite import cover_ops, spin_ops, thecke_ops
from .affine import cover_aff_ops, pq_aff_ops, spin_aff_ops
from .heckecliff import hc_aff_ops, hc_ops, hecke_aff_ops
from .tensor import tensor_ops

ALGEBRAS = {
    "spin": spin_ops,
    "cover": cover_ops,
    "thecke": thecke_ops,
    "hc": hc_ops,
    "hc-aff": hc_aff_ops,
    "hecke-aff": hecke_aff_ops,
    "spin-aff": spin_aff_ops,
    "pq-aff": pq_aff_ops,
    "cover-aff": cover_aff_ops,
    "tensor": lambda n: tensor_ops(spin_ops(n)),
    "tensor-aff": lambda n: tensor_ops(spin_aff_ops(n)),
}


def get_algebra(name: str, n: int) -> AlgebraOps:
    if name not in ALGEBRAS:
        raise ParseError(f"unknown algebra {name!r}; choices: "
                         + ", ".join(sorted(ALGEBRAS)), 0)
    if n < 1:
        raise ParseError("rank n must be >= 1", 0)
    return ALGEBRAS[name](n)


class ParseError(Exception):
    """Syntax or symbol error, carrying a byte offset."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.message = message
        self.offset = offset


# -- AST -------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: Laurent


@dataclass(frozen=True)
class Gen:
    atom: tuple
    name: str


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


@dataclass(frozen=True)
class Prod:
    factors: tuple


@dataclass(frozen=True)
class Sum:
    signed_terms: tuple  # of (sign, Expr)


Expr = object

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z]+\d*)"
                    r"|(?P<op>[-+*^()/]))")


def _tokenize(text: str) -> list:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise ParseError(f"unexpected character {stripped[0]!r}",
                             len(text) - len(stripped))
        if m.lastgroup == "num":
            out.append(("num", m.group("num"), m.start("num")))
        elif m.lastgroup == "name":
            out.append(("name", m.group("name"), m.start("name")))
        else:
            out.append(("op", m.group("op"), m.start("op")))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text: str, ops: AlgebraOps):
        self.text = text
        self.toks = _tokenize(text)
        self.pos = 0
        self.ops = ops
        self.gens = ops.gen_atoms()
        self.prefixes = {re.sub(r"\d+$", "", name) for name in self.gens}

    def _peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def _next(self):
        tok = self._peek()
        if tok is None:
            raise ParseError("unexpected end of input", len(self.text))
        self.pos += 1
        return tok

    def _expect_op(self, op: str):
        tok = self._next()
        if tok[0] != "op" or tok[1] != op:
            raise ParseError(f"expected {op!r}", tok[2])

    def parse(self) -> Expr:
        expr = self.expr()
        tok = self._peek()
        if tok is not None:
            raise ParseError(f"trailing input {tok[1]!r}", tok[2])
        return expr

    def expr(self) -> Expr:
        terms = []
        sign = 1
        tok = self._peek()
        if tok and tok[0] == "op" and tok[1] in "+-":
            self._next()
            sign = -1 if tok[1] == "-" else 1
        terms.append((sign, self.term()))
        while True:
            tok = self._peek()
            if tok and tok[0] == "op" and tok[1] in "+-":
                self._next()
                terms.append((-1 if tok[1] == "-" else 1, self.term()))
            else:
                break
        if len(terms) == 1 and terms[0][0] == 1:
            return terms[0][1]
        return Sum(tuple(terms))

    def term(self) -> Expr:
        factors = [self.factor()]
        while True:
            tok = self._peek()
            if tok and tok[0] == "op" and tok[1] == "*":
                self._next()
                factors.append(self.factor())
            else:
                break
        if len(factors) == 1:
            return factors[0]
        return Prod(tuple(factors))

    def factor(self) -> Expr:
        base = self.atom()
        tok = self._peek()
        if tok and tok[0] == "op" and tok[1] == "^":
            self._next()
            sign = 1
            tok = self._next()
            if tok[0] == "op" and tok[1] == "-":
                sign = -1
                tok = self._next()
            if tok[0] != "num":
                raise ParseError("expected integer exponent", tok[2])
            return Pow(base, sign * int(tok[1]))
        return base

    def atom(self) -> Expr:
        tok = self._next()
        if tok[0] == "num":
            num = int(tok[1])
            nxt = self._peek()
            if nxt and nxt[0] == "op" and nxt[1] == "/":
                self._next()
                dtok = self._next()
                if dtok[0] != "num":
                    raise ParseError("expected denominator", dtok[2])
                return Num(laurent({0: Fraction(num, int(dtok[1]))}))
            return Num(laurent({0: num}))
        if tok[0] == "name":
            return self._resolve(tok)
        if tok[1] == "(":
            inner = self.expr()
            self._expect_op(")")
            return inner
        raise ParseError(f"unexpected token {tok[1]!r}", tok[2])

    def _resolve(self, tok) -> Expr:
        name = tok[1]
        if name == "q":
            return Num(laurent({1: 1}))
        if name == "i":
            return Num(laurent({0: GR_I}))
        if name == "e":
            return Num(EPS)
        atom = self.gens.get(name)
        if atom is not None:
            return Gen(atom, name)
        base = re.sub(r"\d+$", "", name)
        if base in self.prefixes:
            raise ParseError(f"generator index out of range: {name!r}", tok[2])
        raise ParseError(f"unknown symbol {name!r}", tok[2])


def parse(text: str, ops: AlgebraOps) -> Expr:
    """Parse against an algebra; unknown names and bad indices error out."""
    if not text.strip():
        raise ParseError("empty expression", 0)
    return _Parser(text, ops).parse()


def evaluate(expr: Expr, ops: AlgebraOps) -> Element:
    if isinstance(expr, Num):
        return ops.scalar(expr.value)
    if isinstance(expr, Gen):
        return normalize(ops, [expr.atom])
    if isinstance(expr, Sum):
        total = ops.zero()
        for sign, sub in expr.signed_terms:
            e = evaluate(sub, ops)
            total = total + (e if sign == 1 else -e)
        return total
    if isinstance(expr, Prod):
        out = ops.one()
        for sub in expr.factors:
            out = out * evaluate(sub, ops)
        return out
    if isinstance(expr, Pow):
        k = expr.exponent
        if k >= 0:
            return evaluate(expr.base, ops) ** k
        return _inverse_power(expr.base, -k, ops)
    raise TypeError(f"bad expression node {expr!r}")


def _inverse_power(base: Expr, k: int, ops: AlgebraOps) -> Element:
    if isinstance(base, Num):
        return ops.scalar(base.value ** (-k))
    if isinstance(base, Gen):
        atom = base.atom
        if atom[0] == "X":
            inv = ("X", atom[1], -atom[2])
            return normalize(ops, [inv] * k)
        if atom[0] == "z":
            return normalize(ops, [atom] * (k % 2))
    raise InvalidGeneratorError(
        f"negative powers are only defined for scalars, z and X generators")


def parse_element(text: str, algebra: str, n: int) -> Element:
    """Parse and evaluate in one step."""
    ops = get_algebra(algebra, n)
    return evaluate(parse(text, ops), ops)
