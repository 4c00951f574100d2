"""Exception types shared across the library."""


class DomainError(ValueError):
    """An input violates a documented precondition (range, shape or index)."""


class ResourceError(DomainError):
    """A requested computation exceeds the supported size budget."""


class FitError(DomainError):
    """A sample set is insufficient or degenerate for coefficient recovery."""


class ConsistencyError(ArithmeticError):
    """An internal numerical invariant was violated during evaluation."""
