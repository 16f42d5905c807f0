"""The ring R[u], u**2 = lam*u - 1, over R = Q(i)[T].

Elements are kept in the basis (1, u); the square root of lam**2 - 4 is
never formed. Conjugation swaps u with its inverse lam - u, and the norm
t * conj(t) lands back in R.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalInconsistency, InvalidParameter, NotAUnit
from .field import GaussRat
from .poly import Poly

_ZERO = Poly()
_ONE = Poly([1])


@dataclass(frozen=True)
class QuadExtElem:
    """``a + b*u`` with ``a``, ``b`` in R."""

    a: Poly
    b: Poly = _ZERO

    @classmethod
    def of(cls, a=0, b=0) -> QuadExtElem:
        return cls(Poly.coerce(a), Poly.coerce(b))

    def __add__(self, other: QuadExtElem) -> QuadExtElem:
        return QuadExtElem(self.a + other.a, self.b + other.b)

    def __sub__(self, other: QuadExtElem) -> QuadExtElem:
        return QuadExtElem(self.a - other.a, self.b - other.b)

    def __neg__(self) -> QuadExtElem:
        return QuadExtElem(-self.a, -self.b)

    def scale(self, c) -> QuadExtElem:
        return QuadExtElem(self.a * c, self.b * c)

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def format(self, var: str = "T") -> str:
        return f"({self.a.format(var)}) + ({self.b.format(var)})u"


@dataclass(frozen=True)
class UnitDecomposition:
    """A unit written as ``c * u**n``."""

    c: GaussRat
    n: int


@dataclass(frozen=True)
class QuadExtRing:
    lam: Poly

    def __post_init__(self):
        if not isinstance(self.lam, Poly):
            object.__setattr__(self, "lam", Poly.coerce(self.lam))
        if self.lam.degree < 1:
            raise InvalidParameter("lambda must be a nonconstant polynomial")

    @property
    def u(self) -> QuadExtElem:
        return QuadExtElem(_ZERO, _ONE)

    @property
    def u_inv(self) -> QuadExtElem:
        return QuadExtElem(self.lam, -_ONE)

    def mul(self, s: QuadExtElem, t: QuadExtElem) -> QuadExtElem:
        bb = s.b * t.b
        return QuadExtElem(s.a * t.a - bb, s.a * t.b + t.a * s.b + self.lam * bb)

    def pow(self, t: QuadExtElem, n: int) -> QuadExtElem:
        if n < 0:
            raise ValueError("negative powers are only defined for u; use u_power")
        result, base = QuadExtElem(_ONE), t
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def conj(self, t: QuadExtElem) -> QuadExtElem:
        # sigma(a + b u) = a + b (lam - u)
        return QuadExtElem(t.a + t.b * self.lam, -t.b)

    def norm(self, t: QuadExtElem) -> Poly:
        return t.a * t.a + self.lam * t.a * t.b + t.b * t.b

    def is_unit(self, t: QuadExtElem) -> bool:
        return self.norm(t).degree == 0

    def u_power(self, n: int) -> QuadExtElem:
        """``u**n`` via ``(A, B) -> (-B, A + lam*B)`` and its inverse."""
        a, b = _ONE, _ZERO
        if n >= 0:
            for _ in range(n):
                a, b = -b, a + self.lam * b
        else:
            for _ in range(-n):
                a, b = b + self.lam * a, -a
        return QuadExtElem(a, b)

    def unit_decompose(self, t: QuadExtElem) -> UnitDecomposition:
        """Write a unit ``t`` as ``c * u**n``.

        Repeatedly multiply by ``u**-1`` or ``u`` so that the ``u``-coordinate
        drops in degree. For a genuine unit one of the two moves always
        applies; ``u**-1`` is tried first.
        """
        if not self.is_unit(t):
            raise NotAUnit("norm is not a nonzero constant")
        a, b, shift = t.a, t.b, 0
        while a and b:
            before = b.degree
            if a.degree < b.degree:
                # t * u^-1 = (b + lam a) - a u
                a, b = b + self.lam * a, -a
                shift += 1
            else:
                s = a + self.lam * b
                if s.degree < b.degree:
                    # t * u = -b + (a + lam b) u
                    a, b = -b, s
                    shift -= 1
                else:
                    raise NotAUnit("no descent step applies")
            if not b.degree < before:
                raise InternalInconsistency("descent did not lower deg(b)")
        if not b:
            if a.degree != 0:
                raise NotAUnit("terminal coordinate is not constant")
            return UnitDecomposition(a.constant_value(), shift)
        if b.degree != 0:
            raise NotAUnit("terminal coordinate is not constant")
        return UnitDecomposition(b.constant_value(), shift + 1)

    def reassemble(self, d: UnitDecomposition) -> QuadExtElem:
        return self.u_power(d.n).scale(d.c)

    def embed(self, f) -> QuadExtElem:
        return QuadExtElem(Poly.coerce(f))
