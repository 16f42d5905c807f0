"""Exact solver for X(X-Y)(X+Y)(X-lam*Y) + Y^4 = xi over Q(i)[T]."""

from .errors import (
    BothZero,
    DivisionByZero,
    DomainError,
    InternalError,
    InternalInconsistency,
    InvalidParameter,
    NotAUnit,
    NotIntegerPolynomial,
    ParseError,
    SearchSpaceTooLarge,
    TheoremViolation,
    ThueError,
    VerificationFailure,
    ZeroInput,
)
from .field import I, ONE, ZERO, GaussRat, gq_fourth_roots, gq_sqrt
from .poly import (
    NEG_INF,
    X,
    Poly,
    SquareFreeDecomposition,
    content_and_primitive,
    is_square_up_to_constant,
    poly_divrem,
    poly_gcd,
    poly_sqrt_exact,
    squarefree_decompose,
)
from .quadext import QuadExtElem, QuadExtRing, UnitDecomposition
from .sequences import SequenceCache, classify_square_exponents, fib, seq_G, seq_H, seq_UV
from .solver import (
    Classification,
    Shape,
    SolutionCertificate,
    SolutionFamily,
    SolutionSet,
    ThueInstance,
    Verdict,
    brute_search,
    classify_solution,
    form_decomposition_check,
    form_eval,
    solution_set,
)
from .cli import parse_gaussrat, parse_poly

__version__ = "0.1.0"
