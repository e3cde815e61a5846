#QuadSpec.py
from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field

from hypergroup_amalgam.constants.constants import (
    DEFAULT_ABS_TOL,
    DEFAULT_MAX_SUBDIVISIONS,
    DEFAULT_REL_TOL,
)


class QuadSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    abs_tol: float = Field(DEFAULT_ABS_TOL, ge=1e-15)
    rel_tol: float = Field(DEFAULT_REL_TOL, ge=1e-15)
    max_subdivisions: int = Field(DEFAULT_MAX_SUBDIVISIONS, ge=1, le=1_000_000)

    def tolerance(self, value: float) -> float:
        return max(self.abs_tol, self.rel_tol * abs(value))

    def refined(self, factor: float = 2.0) -> QuadSpec:
        """Tolerances divided by `factor` (floored at 1e-15)."""
        return QuadSpec(
            abs_tol=max(self.abs_tol / factor, 1e-15),
            rel_tol=max(self.rel_tol / factor, 1e-15),
            max_subdivisions=min(int(self.max_subdivisions * factor), 1_000_000),
        )
