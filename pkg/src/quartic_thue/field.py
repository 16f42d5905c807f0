"""Exact arithmetic in the Gaussian rationals Q(i)."""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from numbers import Rational

from .errors import DivisionByZero, ZeroInput

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _as_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, (int, Rational)):
        return Fraction(v)
    raise TypeError(f"expected an exact rational, got {type(v).__name__}")


class GaussRat:
    """A Gaussian rational ``re + im*i`` with exact rational parts.

    Instances are immutable and hashable. Plain ``int`` and ``Fraction``
    operands are coerced on the fly, so ``2 * GaussRat(1, 1)`` works.
    Floats are rejected outright.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _as_fraction(re))
        object.__setattr__(self, "im", _as_fraction(im))

    @classmethod
    def _make(cls, re: Fraction, im: Fraction) -> GaussRat:
        obj = object.__new__(cls)
        object.__setattr__(obj, "re", re)
        object.__setattr__(obj, "im", im)
        return obj

    @classmethod
    def coerce(cls, v) -> GaussRat:
        if isinstance(v, GaussRat):
            return v
        return cls._make(_as_fraction(v), _ZERO)

    def __setattr__(self, name, value):
        raise AttributeError("GaussRat is immutable")

    def __reduce__(self):
        return (GaussRat, (self.re, self.im))

    # -- predicates ---------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def is_real(self) -> bool:
        return not self.im

    def is_integer(self) -> bool:
        return not self.im and self.re.denominator == 1

    def __eq__(self, other) -> bool:
        if isinstance(other, GaussRat):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Rational)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def sort_key(self) -> tuple[Fraction, Fraction]:
        return (self.re, self.im)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other) -> GaussRat:
        if not isinstance(other, GaussRat):
            try:
                other = GaussRat.coerce(other)
            except TypeError:
                return NotImplemented
        return GaussRat._make(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other) -> GaussRat:
        if not isinstance(other, GaussRat):
            try:
                other = GaussRat.coerce(other)
            except TypeError:
                return NotImplemented
        return GaussRat._make(self.re - other.re, self.im - other.im)

    def __rsub__(self, other) -> GaussRat:
        try:
            other = GaussRat.coerce(other)
        except TypeError:
            return NotImplemented
        return other - self

    def __neg__(self) -> GaussRat:
        return GaussRat._make(-self.re, -self.im)

    def __pos__(self) -> GaussRat:
        return self

    def __mul__(self, other) -> GaussRat:
        if not isinstance(other, GaussRat):
            try:
                other = GaussRat.coerce(other)
            except TypeError:
                return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        # real operands dominate in practice (integer sequences, rational lambdas)
        if not b:
            if not d:
                return GaussRat._make(a * c, _ZERO)
            return GaussRat._make(a * c, a * d)
        if not d:
            return GaussRat._make(a * c, b * c)
        return GaussRat._make(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        """Field norm ``re**2 + im**2``."""
        return self.re * self.re + self.im * self.im

    def conj(self) -> GaussRat:
        return GaussRat._make(self.re, -self.im)

    def inv(self) -> GaussRat:
        if not self:
            raise DivisionByZero("inverse of zero")
        if not self.im:
            return GaussRat._make(1 / self.re, _ZERO)
        n = self.norm()
        return GaussRat._make(self.re / n, -self.im / n)

    def __truediv__(self, other) -> GaussRat:
        if not isinstance(other, GaussRat):
            try:
                other = GaussRat.coerce(other)
            except TypeError:
                return NotImplemented
        if not other:
            raise DivisionByZero("division by zero")
        if not other.im:
            return GaussRat._make(self.re / other.re, self.im / other.re)
        return self * other.inv()

    def __rtruediv__(self, other) -> GaussRat:
        try:
            other = GaussRat.coerce(other)
        except TypeError:
            return NotImplemented
        return other / self

    def __pow__(self, n: int) -> GaussRat:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inv() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- roots --------------------------------------------------------------

    def sqrt(self) -> GaussRat | None:
        return gq_sqrt(self)

    def fourth_roots(self) -> tuple[GaussRat, ...]:
        return gq_fourth_roots(self)

    # -- text ---------------------------------------------------------------

    def __repr__(self) -> str:
        return f"GaussRat({self})"

    def __str__(self) -> str:
        return format_gaussrat(self)


ZERO = GaussRat._make(_ZERO, _ZERO)
ONE = GaussRat._make(_ONE, _ZERO)
I = GaussRat._make(_ZERO, _ONE)


def _format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_gaussrat(z: GaussRat) -> str:
    """Render ``z`` as e.g. ``1``, ``-3/4``, ``i``, ``-2i``, ``1/2-3/4i``."""
    re, im = z.re, z.im
    if not im:
        return _format_rational(re)
    if abs(im) == 1:
        im_text = "i"
    else:
        im_text = _format_rational(abs(im)) + "i"
    if not re:
        return im_text if im > 0 else "-" + im_text
    sign = "+" if im > 0 else "-"
    return f"{_format_rational(re)}{sign}{im_text}"


def _rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn != n or rd * rd != d:
        return None
    return Fraction(rn, rd)


def gq_sqrt(x: GaussRat) -> GaussRat | None:
    """Square root of ``x`` inside Q(i), or ``None`` if there is none.

    The root returned has positive real part, or zero real part and
    nonnegative imaginary part.
    """
    x = GaussRat.coerce(x)
    a, b = x.re, x.im
    if not b:
        r = _rational_sqrt(a)
        if r is not None:
            return GaussRat._make(r, _ZERO)
        r = _rational_sqrt(-a)
        if r is not None:
            return GaussRat._make(_ZERO, r)
        return None
    # (p + qi)^2 = a + bi  =>  p^2 = (a + |x|)/2, q = b / 2p
    modulus = _rational_sqrt(a * a + b * b)
    if modulus is None:
        return None
    p = _rational_sqrt((a + modulus) / 2)
    if p is None or not p:
        return None
    root = GaussRat._make(p, b / (2 * p))
    assert root * root == x
    return root


def gq_fourth_roots(x: GaussRat) -> tuple[GaussRat, ...]:
    """All ``z`` in Q(i) with ``z**4 == x``.

    The result is empty or the full orbit ``(z0, i*z0, -z0, -i*z0)`` where
    ``z0`` is the canonical square root of the canonical square root of ``x``.
    """
    x = GaussRat.coerce(x)
    if not x:
        raise ZeroInput("fourth roots of zero are not a finite orbit")
    s = gq_sqrt(x)
    if s is None:
        return ()
    z0 = gq_sqrt(s)
    if z0 is None:
        # -s = (i)^2 s, so sqrt(-s) exists iff sqrt(s) does
        return ()
    return (z0, I * z0, -z0, -I * z0)
