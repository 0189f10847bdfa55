"""Working-precision configuration and exact decimal ingestion.

All user-facing numbers travel as decimal strings or ``mpf`` values; strings
are parsed well above the working precision so no input is ever squeezed
through a double-precision intermediate.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from mpmath import mp, mpf

from .errors import DomainError

ENV_DIGITS = "ZZC_DIGITS"

# floor applied when parsing decimal strings; see as_mpf
_PARSE_DPS_FLOOR = 120


@dataclass(frozen=True)
class PrecisionConfig:
    """Significant decimal digits to carry and the per-result absolute tolerance."""

    working_digits: int = 50
    abs_tol: mpf = field(default_factory=lambda: mpf("1e-20"))

    def __post_init__(self) -> None:
        if self.working_digits < 20:
            raise DomainError("working_digits must be at least 20")
        if not mpf(self.abs_tol) > 0:
            raise DomainError("abs_tol must be positive")

    @property
    def internal_dps(self) -> int:
        # guard digits absorb rounding accumulated across the assembly formulas
        return self.working_digits + 15


def default_config() -> PrecisionConfig:
    """Default precision, honouring the ZZC_DIGITS environment override."""
    digits = os.environ.get(ENV_DIGITS)
    if digits is None:
        return PrecisionConfig()
    return PrecisionConfig(working_digits=int(digits))


def as_mpf(value) -> mpf:
    """Convert to ``mpf``, parsing strings at generous precision.

    ints and mpf pass through exactly; floats convert exactly (their binary
    value is preserved, so prefer strings for decimal data).
    """
    if isinstance(value, str):
        with mp.workdps(max(mp.dps, _PARSE_DPS_FLOOR)):
            return mpf(value)
    return mpf(value)
