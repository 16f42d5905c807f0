"""Exception hierarchy.

``DomainError`` subclasses signal bad input or a mathematically impossible
request (CLI exit code 1). ``InternalError`` subclasses mean a theorem-level
self-check failed, which points at a bug (CLI exit code 2).
"""


class ThueError(Exception):
    """Base class for every error raised by this package."""

    kind = "ThueError"


class DomainError(ThueError):
    kind = "DomainError"


class InternalError(ThueError):
    kind = "InternalError"


class DivisionByZero(DomainError, ZeroDivisionError):
    kind = "DivisionByZero"


class ZeroInput(DomainError, ValueError):
    kind = "ZeroInput"


class BothZero(DomainError, ValueError):
    kind = "BothZero"


class NotIntegerPolynomial(DomainError, ValueError):
    kind = "NotIntegerPolynomial"


class InvalidParameter(DomainError, ValueError):
    kind = "InvalidParameter"


class NotAUnit(DomainError, ArithmeticError):
    kind = "NotAUnit"


class SearchSpaceTooLarge(DomainError):
    kind = "SearchSpaceTooLarge"


class ParseError(DomainError, ValueError):
    """Malformed polynomial or scalar text.

    ``position`` is the 0-based offset into the input where parsing stopped.
    """

    kind = "ParseError"

    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at offset {position}")


class InternalInconsistency(InternalError):
    kind = "InternalInconsistency"


class VerificationFailure(InternalError):
    kind = "VerificationFailure"


class TheoremViolation(InternalError):
    kind = "TheoremViolation"
