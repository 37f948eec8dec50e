"""Exception types shared across the package.

The CLI maps :class:`DomainError` to exit code 2 and :class:`ResourceError`
(and its subclasses) to exit code 3.
"""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class NonGenericVertexError(DomainError):
    """The vertex is special (0, 1, -1, 1/2, 2 or a root of X^2 - X + 1)."""


class ResourceError(RuntimeError):
    """A request is valid but refused because it would be too expensive."""


class BoundError(ResourceError):
    """A search ran past the supported 62-bit modulus range."""


class CapError(ResourceError):
    """A connected component exceeded the requested size cap."""


class SizeCeilingError(ResourceError):
    """An explicit set would exceed the in-memory ceiling."""


class FeasibilityError(ResourceError):
    """An exhaustive method was asked to run above its hard cap."""
