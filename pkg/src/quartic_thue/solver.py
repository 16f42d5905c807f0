"""Solutions of x(x-y)(x+y)(x-lam*y) + y**4 = xi in Q(i)[T].

For nonconstant lam every solution has the form zeta*(1, 0), zeta*(0, 1),
zeta*(1, 1), zeta*(-1, 1), zeta*(lam, 1) or zeta*(-1, lam) with
zeta**4 = xi. This module builds that set, classifies candidate pairs
against it (with a unit certificate in R[u]), and provides an exhaustive
small-box search to check completeness independently.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from math import lcm
from typing import Iterable, Sequence

from .errors import (
    InternalInconsistency,
    InvalidParameter,
    SearchSpaceTooLarge,
    VerificationFailure,
)
from .field import GaussRat, gq_fourth_roots
from .poly import Poly
from .quadext import QuadExtElem, QuadExtRing, UnitDecomposition

DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class ThueInstance:
    lam: Poly
    xi: GaussRat

    def __post_init__(self):
        object.__setattr__(self, "lam", Poly.coerce(self.lam))
        object.__setattr__(self, "xi", GaussRat.coerce(self.xi))
        if self.lam.degree < 1:
            raise InvalidParameter("lambda must be a nonconstant polynomial")
        if not self.xi:
            raise InvalidParameter("xi must be nonzero")

    @property
    def ring(self) -> QuadExtRing:
        return QuadExtRing(self.lam)


class Shape(enum.Enum):
    E1 = "(zeta, 0)"
    E2 = "(0, zeta)"
    E3 = "(zeta, zeta)"
    E4 = "(-zeta, zeta)"
    E5 = "(zeta*lambda, zeta)"
    E6 = "(-zeta, zeta*lambda)"

    def instantiate(self, lam: Poly, zeta: GaussRat) -> tuple[Poly, Poly]:
        z = Poly([zeta])
        zero = Poly()
        return {
            Shape.E1: (z, zero),
            Shape.E2: (zero, z),
            Shape.E3: (z, z),
            Shape.E4: (-z, z),
            Shape.E5: (lam * zeta, z),
            Shape.E6: (-z, lam * zeta),
        }[self]

    def as_polys_in_lambda(self, zeta: GaussRat) -> tuple[Poly, Poly]:
        """The pair written as polynomials in lam (coordinates lie in C[lam])."""
        return self.instantiate(Poly.x(), zeta)


@dataclass(frozen=True)
class SolutionFamily:
    shape: Shape
    zeta: GaussRat

    def pair(self, lam: Poly) -> tuple[Poly, Poly]:
        return self.shape.instantiate(lam, self.zeta)


@dataclass(frozen=True)
class SolutionCertificate:
    """x**2 - y**2 - x*y*u == c * u**m in R[u]."""

    theta: QuadExtElem
    c: GaussRat
    m: int


@dataclass(frozen=True)
class SolutionSet:
    """Solution families found over Q(i)[T].

    ``complete_over_field`` is False when xi has no fourth root in Q(i):
    the equation then has solutions over C[T] but none over Q(i)[T].
    """

    instance: ThueInstance
    families: tuple[SolutionFamily, ...]
    complete_over_field: bool
    note: str = ""

    def __iter__(self):
        return iter(self.families)

    def __len__(self) -> int:
        return len(self.families)

    def pairs(self) -> list[tuple[Poly, Poly]]:
        return [f.pair(self.instance.lam) for f in self.families]


class Verdict(enum.Enum):
    SOLUTION = "solution"
    NOT_A_SOLUTION = "not_a_solution"
    THEOREM_VIOLATION = "theorem_violation"


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    family: SolutionFamily | None = None
    certificate: SolutionCertificate | None = None
    residual: Poly | None = None


def form_eval(inst: ThueInstance, x: Poly, y: Poly) -> Poly:
    """F(x, y), computed expanded and factored; the two must agree."""
    lam = inst.lam
    x2, y2, xy = x * x, y * y, x * y
    expanded = x2 * x2 - lam * x2 * xy - x2 * y2 + lam * xy * y2 + y2 * y2
    factored = x * (x - y) * (x + y) * (x - lam * y) + y2 * y2
    if expanded != factored:
        raise InternalInconsistency("expanded and factored forms of F disagree")
    return expanded


def quadratic_factors(inst: ThueInstance, x: Poly, y: Poly) -> tuple[QuadExtElem, QuadExtElem]:
    """``(x^2 - u x y - y^2, x^2 - u^-1 x y - y^2)`` in R[u]."""
    d, xy = x * x - y * y, x * y
    return QuadExtElem(d, -xy), QuadExtElem(d - inst.lam * xy, xy)


def form_decomposition_check(inst: ThueInstance, x: Poly, y: Poly) -> bool:
    first, second = quadratic_factors(inst, x, y)
    product = inst.ring.mul(first, second)
    return product == QuadExtElem(form_eval(inst, x, y))


def solution_set(inst: ThueInstance) -> SolutionSet:
    roots = gq_fourth_roots(inst.xi)
    families = []
    for zeta in roots:
        for shape in Shape:
            fam = SolutionFamily(shape, zeta)
            x, y = fam.pair(inst.lam)
            if form_eval(inst, x, y) != Poly([inst.xi]):
                raise VerificationFailure(f"{shape.name} with zeta={zeta} is not a solution")
            families.append(fam)
    if roots:
        return SolutionSet(inst, tuple(families), True)
    return SolutionSet(inst, (), False, note="no fourth root of xi in the coefficient field Q(i)")


def certificate(inst: ThueInstance, x: Poly, y: Poly) -> SolutionCertificate:
    theta, _ = quadratic_factors(inst, x, y)
    d: UnitDecomposition = inst.ring.unit_decompose(theta)
    return SolutionCertificate(theta, d.c, d.n)


def classify_solution(inst: ThueInstance, x: Poly, y: Poly) -> Classification:
    value = form_eval(inst, x, y)
    target = Poly([inst.xi])
    if value != target:
        return Classification(Verdict.NOT_A_SOLUTION, residual=value - target)
    for zeta in gq_fourth_roots(inst.xi):
        for shape in Shape:
            if shape.instantiate(inst.lam, zeta) == (x, y):
                fam = SolutionFamily(shape, zeta)
                return Classification(Verdict.SOLUTION, fam, certificate(inst, x, y))
    return Classification(Verdict.THEOREM_VIOLATION)


# -- brute-force oracle ------------------------------------------------------

# Gaussian integers as (re, im) int pairs; only used in the evaluation filter.


def _gmul(p, q):
    return (p[0] * q[0] - p[1] * q[1], p[0] * q[1] + p[1] * q[0])


def _scaled_values(polys: Sequence[Poly], t: int, scale: int) -> list[tuple[int, int]]:
    out = []
    for f in polys:
        v = f.eval(t) * scale
        out.append((v.re.numerator, v.im.numerator))
    return out


def _common_denominator(values: Iterable[GaussRat]) -> int:
    d = 1
    for v in values:
        d = lcm(d, v.re.denominator, v.im.denominator)
    return d


@dataclass
class SearchResult:
    solutions: list[tuple[Poly, Poly]]
    max_deg: int
    coeff_set: tuple[GaussRat, ...]
    candidates: int
    budget: int
    filter_points: tuple[int, ...] = field(default=())

    def __iter__(self):
        return iter(self.solutions)

    def __len__(self) -> int:
        return len(self.solutions)


def canonical_coeff_set(coeff_set: Iterable) -> tuple[GaussRat, ...]:
    return tuple(sorted({GaussRat.coerce(c) for c in coeff_set}, key=GaussRat.sort_key))


def brute_search(
    inst: ThueInstance,
    max_deg: int,
    coeff_set: Iterable,
    budget: int = DEFAULT_BUDGET,
    filter_points: Sequence[int] = (2, -3, 5),
) -> SearchResult:
    """All (x, y) with deg <= max_deg, coefficients in ``coeff_set``, F(x, y) = xi.

    Candidates are enumerated lexicographically in their coefficient
    sequences (coefficient set sorted by real then imaginary part).
    Evaluating at integer points ``filter_points`` is a ring homomorphism,
    so pairs failing there cannot be solutions; survivors are confirmed
    with the exact polynomial identity.
    """
    if max_deg < 0:
        raise InvalidParameter("max_deg must be nonnegative")
    coeffs = canonical_coeff_set(coeff_set)
    candidates = len(coeffs) ** (2 * (max_deg + 1))
    if candidates > budget:
        raise SearchSpaceTooLarge(
            f"{len(coeffs)}^{2 * (max_deg + 1)} = {candidates} candidate pairs exceeds budget {budget}"
        )
    polys = [Poly(seq) for seq in itertools.product(coeffs, repeat=max_deg + 1)]
    d = _common_denominator(coeffs)

    # After scaling x, y by d, F(x, y) = xi at t becomes an identity between
    # Gaussian integers once multiplied by e = denominator(lam(t), xi).
    tables = []
    for t in filter_points:
        lam_t = inst.lam.eval(t)
        e = _common_denominator([lam_t, inst.xi])
        el = lam_t * e
        el = (el.re.numerator, el.im.numerator)
        rhs = inst.xi * (e * d**4)
        rhs = (rhs.re.numerator, rhs.im.numerator)
        vals = _scaled_values(polys, t, d)
        sq = [_gmul(v, v) for v in vals]
        quart = [_gmul(s, s) for s in sq]
        tables.append((e, el, rhs, vals, sq, quart))

    target = Poly([inst.xi])
    found = []
    n = len(polys)
    for i in range(n):
        for j in range(n):
            ok = True
            for e, el, rhs, vals, sq, quart in tables:
                # e*(X^4 + Y^4 - X^2 Y^2) - e*lam*XY*(X^2 - Y^2)
                xv, yv, x2, y2 = vals[i], vals[j], sq[i], sq[j]
                x2y2 = _gmul(x2, y2)
                xy = _gmul(xv, yv)
                diff = (x2[0] - y2[0], x2[1] - y2[1])
                cross = _gmul(el, _gmul(xy, diff))
                re = e * (quart[i][0] + quart[j][0] - x2y2[0]) - cross[0]
                im = e * (quart[i][1] + quart[j][1] - x2y2[1]) - cross[1]
                if re != rhs[0] or im != rhs[1]:
                    ok = False
                    break
            if ok and form_eval(inst, polys[i], polys[j]) == target:
                found.append((polys[i], polys[j]))
    return SearchResult(found, max_deg, coeffs, candidates, budget, tuple(filter_points))


def in_solution_set(inst: ThueInstance, x: Poly, y: Poly) -> bool:
    return (x, y) in set(solution_set(inst).pairs())


def outside_solution_set(inst: ThueInstance, pairs: Iterable[tuple[Poly, Poly]]) -> list[tuple[Poly, Poly]]:
    known = set(solution_set(inst).pairs())
    return [p for p in pairs if p not in known]


def express_in_lambda(inst: ThueInstance, f: Poly) -> Poly | None:
    """Find g with g(lam) == f by repeated division by lam, or None."""
    digits = []
    rest = f
    lam = inst.lam
    while rest:
        q, r = divmod(rest, lam)
        if r.degree > 0:
            return None
        digits.append(r[0])
        rest = q
    g = Poly(digits)
    return g if g.compose(lam) == f else None


__all__ = [
    "DEFAULT_BUDGET",
    "Classification",
    "SearchResult",
    "Shape",
    "SolutionCertificate",
    "SolutionFamily",
    "SolutionSet",
    "ThueInstance",
    "Verdict",
    "brute_search",
    "canonical_coeff_set",
    "certificate",
    "classify_solution",
    "express_in_lambda",
    "form_decomposition_check",
    "form_eval",
    "in_solution_set",
    "outside_solution_set",
    "quadratic_factors",
    "solution_set",
]
