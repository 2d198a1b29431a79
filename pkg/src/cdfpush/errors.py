"""Exception types shared across the package."""


class DomainError(ValueError):
    """An evaluation point lies outside the unit interval."""


class ParameterError(ValueError):
    """A distribution or map parameter violates its constraints."""


class NumericsError(ArithmeticError):
    """A numerical integrity guarantee could not be met."""


class ConvergenceError(NumericsError):
    """An iterative numeric scheme failed to reach tolerance."""


class MonotonicityError(NumericsError):
    """Tabulated CDF values decrease beyond the allowed rounding slack."""


class ResourceLimitError(RuntimeError):
    """Exact recursive evaluation was requested beyond the supported depth."""


class DegenerateOrbitError(RuntimeError):
    """No acceptable non-degenerate orbit could be produced."""
