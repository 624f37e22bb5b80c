"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation."""


class CapabilityError(RuntimeError):
    """Input is valid but beyond an enforced computational ceiling."""
