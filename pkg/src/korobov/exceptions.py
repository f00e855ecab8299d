"""Exception hierarchy shared by all modules."""


class KorobovError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(KorobovError, ValueError):
    """Invalid user input (parameters, dimensions, tolerances)."""


class MonotonicityViolation(ValidationError):
    def __init__(self, name, index, message=None):
        self.name = name
        self.index = index
        super().__init__(message or f"{name} sequence violates monotonicity at j={index}")


class RangeViolation(ValidationError):
    pass


class DomainError(ValidationError):
    """Argument outside the domain where a series converges."""


class DimensionMismatch(ValidationError):
    pass


class InsufficientBox(ValidationError):
    """A brute-force box is too small to contain every qualifying lattice point."""


class NotApplicable(ValidationError):
    pass


class ResourceLimit(KorobovError, RuntimeError):
    """A configured budget (frontier size, node count, box size) was exceeded."""
