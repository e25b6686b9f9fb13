"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input lies outside the mathematical domain of the operation."""


class ConvergenceError(RuntimeError):
    """A series, quadrature or iteration failed to reach its tolerance."""
