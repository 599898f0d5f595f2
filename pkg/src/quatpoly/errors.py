"""Exception types shared across the package.

The CLI maps these onto process exit codes, so the taxonomy is part of
the public contract: parse errors, algebra errors (zero divisors in a
split algebra), precondition violations, and numeric failures are kept
distinct.
"""

from __future__ import annotations


class QuatPolyError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(QuatPolyError):
    """Raised when polynomial or quaternion text cannot be parsed.

    Carries the 1-based line and column of the offending token.
    """

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.reason = message


class ZeroDivisorError(QuatPolyError):
    """Raised when an element with zero norm must be inverted.

    Nonzero elements of zero norm exist exactly when the structure
    constants (a, b) give a split algebra, so this error doubles as the
    signal that the chosen parameters do not yield a division algebra.
    """


class PreconditionError(QuatPolyError):
    """Raised when an operation is called outside its stated domain."""


class NumericFailure(QuatPolyError):
    """Raised when the float backend cannot certify its own output.

    ``partial`` holds whatever intermediate data was computed before the
    failure, for diagnosis.
    """

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


class InvariantViolation(QuatPolyError):
    """Raised when an internal mathematical invariant fails.

    These checks guard theorems the code relies on; seeing this error
    means a bug, not bad input.
    """
