"""
Exception hierarchy for the cofinite injection engine

Validation errors (bad input, malformed literals) exit with code 1 on the
command line; domain errors (an operation's precondition fails) exit with 2.
Neither family subclasses ValueError so they pass through pydantic
validators untouched.
"""

from typing import Optional


class AlgebraError(Exception):
    """Base class for every engine error"""

    exit_code = 2

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message

    @property
    def code(self) -> str:
        return type(self).__name__


class ValidationError(AlgebraError):
    """Malformed input: literals, tables, arguments"""

    exit_code = 1


class ParseError(ValidationError):
    """Expression text could not be parsed"""

    def __init__(self, message: str, position: Optional[int] = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class InjectivityViolation(ValidationError):
    pass


class TailCollision(ValidationError):
    pass


class NegativeTail(ValidationError):
    pass


class NonCanonical(ValidationError):
    pass


class InvalidArgument(ValidationError):
    pass


class DomainError(AlgebraError):
    """A well-formed request whose precondition does not hold"""

    exit_code = 2


class NotIdempotent(DomainError):
    pass


class NotAUnit(DomainError):
    pass


class IsIdentity(DomainError):
    pass


class IndexNonzero(DomainError):
    pass


class NotAChain(DomainError):
    pass


class NonRepresentable(DomainError):
    pass


class WindowTooSmall(DomainError):
    pass


class BoundExceeded(DomainError):
    pass


class HRelated(DomainError):
    pass


class ArithmeticOverflow(DomainError):
    pass


class InvariantViolation(DomainError):
    """A construction failed its own verification step"""
