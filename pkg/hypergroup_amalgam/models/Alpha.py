#Alpha.py
from __future__ import annotations

import math
from typing import Union

from pydantic import BaseModel, ConfigDict, field_validator
from scipy import special

from hypergroup_amalgam.constants.constants import ALPHA_MIN


class Alpha(BaseModel):
    """Validated hypergroup parameter alpha >= 1/2 with its derived constants."""

    model_config = ConfigDict(frozen=True)

    value: float

    @field_validator("value")
    @classmethod
    def _check_range(cls, v: float) -> float:
        if not math.isfinite(v) or v < ALPHA_MIN:
            raise ValueError(f"alpha must be a finite number >= {ALPHA_MIN}, got {v}")
        return float(v)

    @property
    def mu(self) -> float:
        """Endpoint exponent alpha - 1/2 of the kernel bracket."""
        return self.value - 0.5

    @property
    def haar_exponent(self) -> float:
        return 2.0 * self.value + 1.0

    @property
    def c_gamma(self) -> float:
        a = self.value
        return float(
            special.gamma(a + 1.0)
            / (special.gamma(0.5) * special.gamma(a + 0.5) * 2.0 ** (2.0 * a - 1.0))
        )

    @property
    def character_scale(self) -> float:
        """2^alpha * Gamma(alpha+1), the factor in j_alpha(x) = scale * x^-alpha * J_alpha(x)."""
        return float(2.0 ** self.value * special.gamma(self.value + 1.0))

    @property
    def plancherel_c(self) -> float:
        return 1.0 / self.character_scale ** 2

    @classmethod
    def of(cls, alpha: Union[Alpha, float]) -> Alpha:
        return alpha if isinstance(alpha, Alpha) else cls(value=alpha)

    def __str__(self) -> str:
        return f"{self.value:g}"
