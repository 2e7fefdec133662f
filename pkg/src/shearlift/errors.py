"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input lies outside the mathematical domain of an operation."""


class ConvergenceError(RuntimeError):
    """An adaptive rule or series failed to reach the requested tolerance."""


class InvalidDilatationError(ValueError):
    """A dilatation value with modulus >= 1 was detected on the disk."""


class UnsupportedDomainError(DomainError):
    """No available representation covers the requested arguments.

    Raised instead of silently extrapolating; callers that own a numeric
    fallback catch this and switch routes.
    """


class UnsupportedParameterError(ValueError):
    """Family parameters fall in an excluded (singular) neighborhood."""


class DilatationNotSquareError(ValueError):
    """Surface lift requested for a dilatation that is not a perfect square
    of a single-valued analytic function (odd power)."""
