"""Exact scalars: Gaussian rationals and Laurent polynomials in $q$.

Every structure constant appearing in the algebras handled by this package
is a Laurent polynomial in the formal parameter $q$ with coefficients in
$\\mathbb{Q}(\\sqrt{-1})$.  The deformation quantity $\\varepsilon = q - q^{-1}$
lives here, as does the $\\sqrt{-1}$ needed by the basic spin representation.
There is no floating-point mode: all arithmetic is exact and two values are
equal iff their canonical term maps coincide.

>>> print(EPS * EPS)
q^-2 - 2 + q^2
>>> print(I * I)
-1
>>> print((Q - QINV) * (Q + QINV))
-q^-2 + q^2
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Union


class CoeffError(ArithmeticError):
    """Raised for invalid exact-arithmetic requests (e.g. division by zero)."""


RatLike = Union[int, Fraction]


class GaussRat:
    """A Gaussian rational ``(a + b*sqrt(-1)) / d`` with exact components.

    Stored as an integer triple over one positive denominator with
    gcd(a, b, d) = 1, so values with integer components (the common case
    in structure constants) never touch gcd arithmetic.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, re: RatLike = 0, im: RatLike = 0):
        re = Fraction(re)
        im = Fraction(im)
        d = re.denominator * im.denominator // gcd(re.denominator,
                                                    im.denominator)
        self.a = re.numerator * (d // re.denominator)
        self.b = im.numerator * (d // im.denominator)
        self.d = d

    @staticmethod
    def _raw(a: int, b: int, d: int) -> "GaussRat":
        """Construct from an already-reduced triple (d > 0)."""
        g = object.__new__(GaussRat)
        g.a, g.b, g.d = a, b, d
        return g

    @staticmethod
    def _make(a: int, b: int, d: int) -> "GaussRat":
        if d < 0:
            a, b, d = -a, -b, -d
        if d != 1:
            g = gcd(gcd(a, b), d)
            if g > 1:
                a //= g
                b //= g
                d //= g
        out = object.__new__(GaussRat)
        out.a, out.b, out.d = a, b, d
        return out

    @property
    def re(self) -> Fraction:
        return Fraction(self.a, self.d)

    @property
    def im(self) -> Fraction:
        return Fraction(self.b, self.d)

    def __bool__(self) -> bool:
        return bool(self.a or self.b)

    def __eq__(self, other) -> bool:
        other = as_gauss(other)
        if other is None:
            return NotImplemented
        return (self.a, self.b, self.d) == (other.a, other.b, other.d)

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def __neg__(self) -> "GaussRat":
        return GaussRat._raw(-self.a, -self.b, self.d)

    def __add__(self, other) -> "GaussRat":
        other = as_gauss(other)
        if other is None:
            return NotImplemented
        d1, d2 = self.d, other.d
        if d1 == 1 and d2 == 1:
            return GaussRat._raw(self.a + other.a, self.b + other.b, 1)
        return GaussRat._make(self.a * d2 + other.a * d1,
                              self.b * d2 + other.b * d1, d1 * d2)

    __radd__ = __add__

    def __sub__(self, other) -> "GaussRat":
        other = as_gauss(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = as_gauss(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "GaussRat":
        other = as_gauss(other)
        if other is None:
            return NotImplemented
        a1, b1, d1 = self.a, self.b, self.d
        a2, b2, d2 = other.a, other.b, other.d
        if b1 == 0 and b2 == 0:
            if d1 == 1 and d2 == 1:
                return GaussRat._raw(a1 * a2, 0, 1)
            return GaussRat._make(a1 * a2, 0, d1 * d2)
        a = a1 * a2 - b1 * b2
        b = a1 * b2 + b1 * a2
        if d1 == 1 and d2 == 1:
            return GaussRat._raw(a, b, 1)
        return GaussRat._make(a, b, d1 * d2)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "GaussRat":
        other = as_gauss(other)
        if other is None:
            return NotImplemented
        if not other:
            raise CoeffError("division by zero GaussRat")
        nrm = other.a * other.a + other.b * other.b
        inv = GaussRat._make(other.d * other.a, -other.d * other.b, nrm)
        return self * inv

    def conj(self) -> "GaussRat":
        return GaussRat._raw(self.a, -self.b, self.d)

    def is_rational(self) -> bool:
        return self.b == 0

    def __str__(self) -> str:
        return gauss_str(self)

    def __repr__(self) -> str:
        return f"GaussRat({self.re!r}, {self.im!r})"


def as_gauss(x) -> "GaussRat | None":
    """Promote ints and Fractions to GaussRat; return None if impossible."""
    if isinstance(x, GaussRat):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussRat(x)
    return None


GR_ZERO = GaussRat(0)
GR_ONE = GaussRat(1)
GR_I = GaussRat(0, 1)


class Laurent:
    """A Laurent polynomial in $q$ over GaussRat, stored sparsely.

    The term map is canonical: zero coefficients are never stored, and the
    zero element has an empty map.  Exponents are machine ints (desk-scale),
    coefficients are exact.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        d: dict[int, GaussRat] = {}
        if terms:
            for k, v in (terms.items() if isinstance(terms, dict) else terms):
                g = as_gauss(v)
                if g is None:
                    raise TypeError(f"bad coefficient {v!r}")
                if g:
                    acc = d.get(k)
                    g = g if acc is None else acc + g
                    if g:
                        d[k] = g
                    else:
                        del d[k]
        self.terms = d

    # -- ring structure -------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        other = as_laurent(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __neg__(self) -> "Laurent":
        return Laurent({k: -v for k, v in self.terms.items()})

    def __add__(self, other) -> "Laurent":
        other = as_laurent(other)
        if other is None:
            return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        d = dict(self.terms)
        for k, v in other.terms.items():
            s = d.get(k)
            s = v if s is None else s + v
            if s:
                d[k] = s
            else:
                del d[k]
        out = Laurent.__new__(Laurent)
        out.terms = d
        return out

    __radd__ = __add__

    def __sub__(self, other) -> "Laurent":
        other = as_laurent(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = as_laurent(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "Laurent":
        other = as_laurent(other)
        if other is None:
            return NotImplemented
        a, b = self.terms, other.terms
        if not a or not b:
            return L_ZERO
        if len(a) > len(b):
            a, b = b, a
        d: dict[int, GaussRat] = {}
        for ka, va in a.items():
            for kb, vb in b.items():
                k = ka + kb
                s = d.get(k)
                p = va * vb
                s = p if s is None else s + p
                if s:
                    d[k] = s
                else:
                    del d[k]
        out = Laurent.__new__(Laurent)
        out.terms = d
        return out

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Laurent":
        if k < 0:
            if not self.is_unit():
                raise CoeffError("negative power of a non-unit Laurent")
            (e, c), = self.terms.items()
            return Laurent({e * k: _gauss_pow_inv(c, -k)})
        out = L_ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- queries ---------------------------------------------------------

    def is_unit(self) -> bool:
        """True iff invertible in the Laurent ring: a single nonzero term."""
        return len(self.terms) == 1

    def is_single(self) -> bool:
        return len(self.terms) <= 1

    def min_exp(self) -> int:
        return min(self.terms) if self.terms else 0

    def max_exp(self) -> int:
        return max(self.terms) if self.terms else 0

    def coeff(self, k: int) -> GaussRat:
        return self.terms.get(k, GR_ZERO)

    # -- operations ------------------------------------------------------

    def bar(self) -> "Laurent":
        """The involution q -> q^{-1} (exponent negation)."""
        return Laurent({-k: v for k, v in self.terms.items()})

    def conj_i(self) -> "Laurent":
        """Conjugate sqrt(-1) -> -sqrt(-1) in every coefficient."""
        return Laurent({k: v.conj() for k, v in self.terms.items()})

    def evaluate(self, q0: GaussRat) -> GaussRat:
        """Substitute q := q0 exactly; q0 must be invertible."""
        q0 = as_gauss(q0)
        if q0 is None or not q0:
            raise CoeffError("evaluation point must be a nonzero GaussRat")
        total = GR_ZERO
        for k, v in self.terms.items():
            total = total + v * _gauss_int_pow(q0, k)
        return total

    def __str__(self) -> str:
        return laurent_str(self)

    def __repr__(self) -> str:
        return f"Laurent({self.terms!r})"


def _gauss_int_pow(g: GaussRat, k: int) -> GaussRat:
    if k < 0:
        return GR_ONE / _gauss_int_pow(g, -k)
    out = GR_ONE
    for _ in range(k):
        out = out * g
    return out


def _gauss_pow_inv(c: GaussRat, k: int) -> GaussRat:
    return GR_ONE / _gauss_int_pow(c, k)


def as_laurent(x) -> "Laurent | None":
    if isinstance(x, Laurent):
        return x
    if isinstance(x, (int, Fraction, GaussRat)):
        g = as_gauss(x)
        return Laurent({0: g}) if g else L_ZERO
    return None


def laurent(terms) -> Laurent:
    """Build a Laurent value from an {exponent: coefficient} mapping."""
    return Laurent(terms)


L_ZERO = Laurent()
L_ONE = Laurent({0: 1})
Q = Laurent({1: 1})
QINV = Laurent({-1: 1})
I = Laurent({0: GR_I})
TWO = Laurent({0: 2})
HALF = Laurent({0: Fraction(1, 2)})


def epsilon() -> Laurent:
    """The deformation quantity q - q^{-1}."""
    return Laurent({1: 1, -1: -1})


EPS = epsilon()
EPS2 = EPS * EPS


def laurent_exact_div(a: Laurent, b: Laurent) -> Laurent:
    """Exact quotient a/b in the Laurent ring; raises if b does not divide a.

    Used by fraction-free elimination, where divisibility is guaranteed.
    """
    if not b:
        raise CoeffError("division by zero Laurent")
    if not a:
        return L_ZERO
    # Shift both to honest polynomials and long-divide over the field Q(i).
    sa, sb = a.min_exp(), b.min_exp()
    pa = [a.coeff(k) for k in range(sa, a.max_exp() + 1)]
    pb = [b.coeff(k) for k in range(sb, b.max_exp() + 1)]
    if len(pa) < len(pb):
        raise CoeffError("non-exact Laurent division")
    lead = pb[-1]
    quot = [GR_ZERO] * (len(pa) - len(pb) + 1)
    rem = list(pa)
    for k in range(len(quot) - 1, -1, -1):
        c = rem[k + len(pb) - 1] / lead
        quot[k] = c
        if c:
            for j, bj in enumerate(pb):
                rem[k + j] = rem[k + j] - c * bj
    if any(rem[: len(pb) - 1]) or any(rem[len(pb) - 1 + len(quot):]):
        raise CoeffError("non-exact Laurent division")
    shift = sa - sb
    return Laurent({shift + k: c for k, c in enumerate(quot) if c})


# -- canonical text ------------------------------------------------------


def _rat_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def gauss_str(g: GaussRat) -> str:
    """Canonical text for a GaussRat; `i` denotes sqrt(-1).

    >>> gauss_str(GaussRat(3, 0)), gauss_str(GaussRat(0, -1)), gauss_str(GaussRat(1, 2))
    ('3', '-i', '1 + 2*i')
    """
    if not g.im:
        return _rat_str(g.re)
    if g.im == 1:
        imtxt = "i"
    elif g.im == -1:
        imtxt = "-i"
    else:
        imtxt = f"{_rat_str(g.im)}*i"
    if not g.re:
        return imtxt
    sign = " - " if imtxt.startswith("-") else " + "
    return f"{_rat_str(g.re)}{sign}{imtxt.lstrip('-')}"


def _gauss_is_simple(g: GaussRat) -> bool:
    return not (g.re and g.im)


def _qpow_str(k: int) -> str:
    return "q" if k == 1 else f"q^{k}"


def laurent_str(x: Laurent) -> str:
    """Canonical text: terms by ascending exponent, `i` for sqrt(-1).

    >>> laurent_str(Laurent({-1: Fraction(3, 2), 2: GR_I}))
    '3/2*q^-1 + i*q^2'
    >>> laurent_str(EPS)
    '-q^-1 + q'
    """
    if not x.terms:
        return "0"
    pieces = []
    for k in sorted(x.terms):
        g = x.terms[k]
        if k == 0:
            pieces.append(gauss_str(g) if _gauss_is_simple(g) else f"({gauss_str(g)})")
        elif g == GR_ONE:
            pieces.append(_qpow_str(k))
        elif g == -GR_ONE:
            pieces.append("-" + _qpow_str(k))
        elif _gauss_is_simple(g):
            pieces.append(f"{gauss_str(g)}*{_qpow_str(k)}")
        else:
            pieces.append(f"({gauss_str(g)})*{_qpow_str(k)}")
    out = pieces[0]
    for p in pieces[1:]:
        if p.startswith("-"):
            out += " - " + p[1:]
        else:
            out += " + " + p
    return out


def laurent_is_simple(x: Laurent) -> bool:
    """True if the canonical text is a single product-safe factor."""
    if len(x.terms) != 1:
        return not x.terms
    (k, g), = x.terms.items()
    return _gauss_is_simple(g)
