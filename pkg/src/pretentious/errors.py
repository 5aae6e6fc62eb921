"""Exception types shared across the package.

The CLI maps all of these to exit code 3 (input/operational error); a
numerically violated inequality is not an exception but a "fails" verdict.
"""


class PretentiousError(ValueError):
    """Base class for all package errors."""


class CapacityError(PretentiousError):
    """An argument exceeds a sieve limit, table size or modulus ceiling."""


class DomainError(PretentiousError):
    """An argument is outside the mathematical domain of the operation."""


class NonInvertibleError(PretentiousError):
    """Dirichlet deconvolution requested against g with g(1) != 1."""


class PrecisionUnreachableError(PretentiousError):
    """The requested certified radius cannot be met within the ceilings."""
