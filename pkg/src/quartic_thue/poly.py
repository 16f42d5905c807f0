"""Dense univariate polynomials over the Gaussian rationals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from math import gcd as igcd
from typing import Iterable

from .errors import BothZero, DivisionByZero, NotIntegerPolynomial, ZeroInput
from .field import ONE, ZERO, GaussRat, format_gaussrat, gq_sqrt


@total_ordering
class _NegInf:
    """Degree of the zero polynomial: below every integer, absorbing under +."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("-oo")

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __repr__(self):
        return "-oo"


NEG_INF = _NegInf()


def _strip(coeffs: list[GaussRat]) -> tuple[GaussRat, ...]:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


class Poly:
    """Polynomial with ``coeffs[k]`` the coefficient of ``X**k``.

    Trailing zeros are stripped on construction, so equal polynomials have
    equal coefficient tuples. The zero polynomial has ``coeffs == ()`` and
    degree ``NEG_INF``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _strip([GaussRat.coerce(c) for c in coeffs])

    @classmethod
    def _raw(cls, coeffs: tuple[GaussRat, ...]) -> Poly:
        obj = object.__new__(cls)
        obj.coeffs = coeffs
        return obj

    @classmethod
    def constant(cls, c) -> Poly:
        return cls([c])

    @classmethod
    def x(cls) -> Poly:
        return cls._raw((ZERO, ONE))

    @classmethod
    def monomial(cls, c, k: int) -> Poly:
        return cls([ZERO] * k + [c])

    @classmethod
    def coerce(cls, v) -> Poly:
        if isinstance(v, Poly):
            return v
        return cls([v])

    # -- basic properties ---------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self) -> GaussRat:
        return self.coeffs[-1] if self.coeffs else ZERO

    def __getitem__(self, k: int) -> GaussRat:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return ZERO

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_value(self) -> GaussRat:
        if len(self.coeffs) > 1:
            raise ValueError("polynomial is not constant")
        return self[0]

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, GaussRat)):
            return self.coeffs == Poly.coerce(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def sort_key(self) -> tuple:
        return (len(self.coeffs), tuple(c.sort_key() for c in reversed(self.coeffs)))

    # -- ring operations ----------------------------------------------------

    def __add__(self, other) -> Poly:
        if not isinstance(other, Poly):
            try:
                other = Poly.coerce(other)
            except TypeError:
                return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return Poly._raw(_strip(out))

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> Poly:
        if not isinstance(other, Poly):
            try:
                other = Poly.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Poly:
        return Poly.coerce(other) - self

    def __mul__(self, other) -> Poly:
        if not isinstance(other, Poly):
            try:
                return self.scale(GaussRat.coerce(other))
            except TypeError:
                return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly._raw(())
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                out[i + j] = out[i + j] + ai * bj
        return Poly._raw(tuple(out))

    __rmul__ = __mul__

    def scale(self, c) -> Poly:
        c = GaussRat.coerce(c)
        if not c:
            return Poly._raw(())
        return Poly._raw(tuple(c * a for a in self.coeffs))

    def __pow__(self, n: int) -> Poly:
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result, base = Poly._raw((ONE,)), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other) -> tuple[Poly, Poly]:
        return poly_divrem(self, Poly.coerce(other))

    def __floordiv__(self, other) -> Poly:
        return poly_divrem(self, Poly.coerce(other))[0]

    def __mod__(self, other) -> Poly:
        return poly_divrem(self, Poly.coerce(other))[1]

    def exact_div(self, other) -> Poly:
        q, r = poly_divrem(self, Poly.coerce(other))
        if r:
            raise ArithmeticError("division is not exact")
        return q

    # -- evaluation and substitution ----------------------------------------

    def eval(self, t) -> GaussRat:
        t = GaussRat.coerce(t)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __call__(self, arg):
        if isinstance(arg, Poly):
            return self.compose(arg)
        return self.eval(arg)

    def compose(self, g: Poly) -> Poly:
        """``self(g)`` by Horner's rule."""
        acc = Poly._raw(())
        for c in reversed(self.coeffs):
            acc = acc * g + c
        return acc

    def substitute_linear(self, s) -> Poly:
        """``self(s*X)``."""
        s = GaussRat.coerce(s)
        out, p = [], ONE
        for c in self.coeffs:
            out.append(c * p)
            p = p * s
        return Poly(out)

    def derivative(self) -> Poly:
        return Poly._raw(tuple(c * k for k, c in enumerate(self.coeffs) if k))

    def monic(self) -> Poly:
        if not self.coeffs:
            return self
        lc = self.lc
        if lc == ONE:
            return self
        inv = lc.inv()
        return Poly._raw(tuple(c * inv for c in self.coeffs))

    def is_monic(self) -> bool:
        return self.lc == ONE

    # -- text ---------------------------------------------------------------

    def format(self, var: str = "T") -> str:
        return format_poly(self, var)

    def __str__(self) -> str:
        return format_poly(self, "X")

    def __repr__(self) -> str:
        return f"Poly({format_poly(self, 'X')!r})"


X = Poly.x()


def format_poly(f: Poly, var: str = "T") -> str:
    """Canonical text: descending powers, explicit signs, no ``*``.

    Non-real coefficients are parenthesized, with an overall minus sign
    pulled out when the real part (or, failing that, the imaginary part)
    is negative. The output re-parses to the same polynomial.
    """
    if not f:
        return "0"
    pieces = []
    for k in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[k]
        if not c:
            continue
        if c.is_real():
            negative = c.re < 0
        else:
            negative = c.re < 0 or (not c.re and c.im < 0)
        mag = -c if negative else c
        if k == 0:
            body = format_gaussrat(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            if mag == ONE:
                body = mono
            else:
                text = format_gaussrat(mag)
                body = (text if mag.is_real() else f"({text})") + mono
        if k == 0 and not mag.is_real():
            body = f"({body})"
        if not pieces:
            pieces.append("-" + body if negative else body)
        else:
            pieces.append(("- " if negative else "+ ") + body)
    return " ".join(pieces)


def poly_divrem(f: Poly, g: Poly) -> tuple[Poly, Poly]:
    """Euclidean division: ``f == q*g + r`` with ``deg r < deg g``."""
    if not g:
        raise DivisionByZero("polynomial division by zero")
    n, m = len(f.coeffs), len(g.coeffs)
    if n < m:
        return Poly._raw(()), f
    rem = list(f.coeffs)
    gc = g.coeffs
    inv_lc = gc[-1].inv()
    quot = [ZERO] * (n - m + 1)
    for k in range(n - m, -1, -1):
        c = rem[k + m - 1]
        if not c:
            continue
        c = c * inv_lc
        quot[k] = c
        for j in range(m - 1):
            if gc[j]:
                rem[k + j] = rem[k + j] - c * gc[j]
        rem[k + m - 1] = ZERO
    return Poly._raw(_strip(quot)), Poly._raw(_strip(rem[: m - 1]))


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd of ``f`` and ``g``."""
    if not f and not g:
        raise BothZero("gcd(0, 0) is undefined")
    a, b = f.monic(), g.monic()
    while b:
        a, b = b, poly_divrem(a, b)[1].monic()
    return a


@dataclass(frozen=True)
class SquareFreeDecomposition:
    """``unit * prod(p**m for p, m in parts)``; parts monic, square-free,
    pairwise coprime, multiplicities strictly increasing."""

    unit: GaussRat
    parts: tuple[tuple[Poly, int], ...]

    def expand(self) -> Poly:
        out = Poly.constant(self.unit)
        for p, m in self.parts:
            out = out * p**m
        return out


def squarefree_decompose(f: Poly) -> SquareFreeDecomposition:
    """Yun's algorithm (characteristic zero)."""
    if not f:
        raise ZeroInput("square-free decomposition of zero")
    unit = f.lc
    f = f.monic()
    parts: list[tuple[Poly, int]] = []
    if f.degree == 0:
        return SquareFreeDecomposition(unit, ())
    df = f.derivative()
    a = poly_gcd(f, df)
    b = f.exact_div(a)
    c = df.exact_div(a)
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            parts.append((a, i))
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        i += 1
    return SquareFreeDecomposition(unit, tuple(parts))


def is_square_up_to_constant(f: Poly) -> tuple[Poly, GaussRat] | None:
    """Return ``(h, C)`` with ``f == C * h**2`` and ``h`` monic, if possible.

    Nonzero constants count as squares (they are over C), so only the
    multiplicities in the square-free decomposition matter.
    """
    if not f:
        raise ZeroInput("squareness of zero")
    sf = squarefree_decompose(f)
    h = Poly.constant(ONE)
    for part, mult in sf.parts:
        if mult % 2:
            return None
        h = h * part ** (mult // 2)
    return h, sf.unit


def poly_sqrt_exact(f: Poly) -> Poly | None:
    """``g`` in Q(i)[X] with ``g**2 == f``, or ``None``.

    The leading coefficient of ``g`` is the canonical square root of the
    leading coefficient of ``f``.
    """
    if not f:
        raise ZeroInput("square root of zero polynomial")
    n2 = f.degree
    if n2 % 2:
        return None
    lead = gq_sqrt(f.lc)
    if lead is None:
        return None
    n = n2 // 2
    g = [ZERO] * (n + 1)
    g[n] = lead
    two_lead = lead * 2
    # match coefficients of X^(n+k) for k = n-1 .. 0
    for k in range(n - 1, -1, -1):
        acc = f[n + k]
        for j in range(k + 1, n):
            acc = acc - g[j] * g[n + k - j]
        g[k] = acc / two_lead
    root = Poly(g)
    if root * root != f:
        return None
    return root


def content_and_primitive(f: Poly) -> tuple[int, Poly]:
    """Split an integer polynomial into positive content and primitive part."""
    values = []
    for c in f.coeffs:
        if not c.is_integer():
            raise NotIntegerPolynomial(f"coefficient {c} is not a rational integer")
        values.append(c.re.numerator)
    content = 0
    for v in values:
        content = igcd(content, v)
    if content == 0:
        return 0, f
    return content, Poly(v // content for v in values)
