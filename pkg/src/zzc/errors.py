"""Exception types shared across the package."""


class ZzcError(Exception):
    """Base class for all package errors."""


class DomainError(ZzcError, ValueError):
    """An argument lies outside the validity range of a formula."""


class PrecisionError(ZzcError, ArithmeticError):
    """A requested tolerance cannot be met at the configured precision."""


class ConstraintError(ZzcError):
    """A parameter point violates the feasibility chain."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("infeasible parameters: " + "; ".join(self.violations))


class SearchError(ZzcError):
    """A search has no feasible candidates to work with."""
