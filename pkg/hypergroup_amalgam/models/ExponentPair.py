#ExponentPair.py
from __future__ import annotations

import math
from typing import Literal, Union

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from hypergroup_amalgam.constants.constants import (
    DEFAULT_TAIL_FIT_WINDOW,
    DEFAULT_TAIL_N_MAX,
    INF,
)

Exponent = Union[float, Literal["inf"]]


def parse_exponent(value: Union[str, float, int]) -> Exponent:
    """Map flag text or numbers onto an exponent; 'inf', 'infinity' and '∞' become INF."""
    if isinstance(value, str):
        text = value.strip().lower()
        if text in ("inf", "infinity", "∞", "+inf"):
            return INF
        value = float(text)
    value = float(value)
    if math.isinf(value) and value > 0:
        return INF
    if not math.isfinite(value) or value < 1.0:
        raise ValueError(f"exponent must be in [1, inf], got {value}")
    return value


def is_infinite(e: Exponent) -> bool:
    return e == INF


def reciprocal(e: Exponent) -> float:
    """1/e with 1/inf = 0."""
    return 0.0 if is_infinite(e) else 1.0 / float(e)


def conjugate_exponent(e: Exponent) -> Exponent:
    if is_infinite(e):
        return 1.0
    if e == 1.0:
        return INF
    return float(e) / (float(e) - 1.0)


def format_exponent(e: Exponent) -> str:
    return INF if is_infinite(e) else f"{float(e):g}"


class ExponentPair(BaseModel):
    """(p, q) in [1, inf]^2 for the amalgam (L^p, l^q)."""

    model_config = ConfigDict(frozen=True)

    p: Exponent
    q: Exponent

    @field_validator("p", "q", mode="before")
    @classmethod
    def _parse(cls, v):
        return parse_exponent(v)

    @classmethod
    def of(cls, p, q) -> ExponentPair:
        return cls(p=p, q=q)

    def dual(self) -> ExponentPair:
        """(q', p'), the pair the Hausdorff-Young map lands in."""
        return ExponentPair(p=conjugate_exponent(self.q), q=conjugate_exponent(self.p))

    def reciprocals(self) -> tuple:
        return reciprocal(self.p), reciprocal(self.q)

    def __str__(self) -> str:
        return f"({format_exponent(self.p)},{format_exponent(self.q)})"


class TailPolicy(BaseModel):
    model_config = ConfigDict(frozen=True)

    n_max: int = DEFAULT_TAIL_N_MAX
    fit_window: int = DEFAULT_TAIL_FIT_WINDOW
    mode: Literal["compact-exact", "power-law-tail"] = "power-law-tail"

    @model_validator(mode="after")
    def _check_window(self):
        if self.fit_window < 2:
            raise ValueError("fit_window must be at least 2")
        if self.n_max < self.fit_window + 10:
            raise ValueError(f"n_max ({self.n_max}) must be >= fit_window + 10 ({self.fit_window + 10})")
        return self
