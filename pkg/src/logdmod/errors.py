"""Exception hierarchy shared by all engine modules.

Exit-code mapping used by the CLI: MathError -> 1, InputError -> 2,
ResourceError -> 3.
"""


class LogdmodError(Exception):
    pass


class InputError(LogdmodError):
    """Bad user input: syntax errors, unknown identifiers, malformed config."""


class ParseError(InputError):
    def __init__(self, message, offset=None):
        self.offset = offset
        if offset is not None:
            message = f"{message} at offset {offset}"
        super().__init__(message)


class MathError(LogdmodError):
    """A mathematically meaningful failure (non-integrable data, unsolvable
    equation, invalid curve, ...)."""


class ContextMismatchError(MathError):
    """Operands built over different variable contexts."""


class CurveError(MathError):
    """Curve data violates quasi-homogeneity, reducedness or positivity."""


class IntegrabilityError(MathError):
    """Connection matrices fail the flatness equation; carries the residual."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class UnsolvableError(MathError):
    """Weighted Euler equation has an obstructed right-hand side."""


class UnsupportedFormError(MathError):
    """Operator not expressible in the required shape (e.g. not a polynomial
    in the logarithmic derivations)."""


class UnsupportedRankError(MathError):
    pass


class NonPrincipalError(MathError):
    """The eliminated ideal failed the principality certificate."""


class ResourceError(LogdmodError):
    pass


class DegreeBoundExceeded(ResourceError):
    def __init__(self, degree, bound):
        super().__init__(
            f"intermediate element of total degree {degree} exceeds the "
            f"degree bound {bound}; raise --degree-bound to continue"
        )
        self.degree = degree
        self.bound = bound
