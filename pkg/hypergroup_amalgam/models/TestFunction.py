#TestFunction.py
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Tuple, Union

import numpy as np

SMOOTHNESS_HINTS = ("piecewise-constant", "smooth", "oscillatory")

ArrayLike = Union[float, np.ndarray]


@dataclass(frozen=True)
class TestFunction:
    """
    Evaluable scalar function on R+ with a declared support and the points
    where it fails to be smooth.

    `evaluate` receives a float64 array when `vectorized` is true and a
    single float otherwise; use the instance as a callable in either case.

    `jump_order` is the order of the lowest derivative that jumps at a
    breakpoint or at support_hi (0 when f itself jumps), None if unknown.
    """

    __test__ = False

    evaluate: Callable[..., ArrayLike]
    support_hi: float = math.inf
    label: str = ""
    smoothness_hint: str = "smooth"
    breakpoints: Tuple[float, ...] = ()
    support_lo: float = 0.0
    vectorized: bool = True
    jump_order: Optional[int] = None

    def __post_init__(self):
        if self.smoothness_hint not in SMOOTHNESS_HINTS:
            raise ValueError(f"unknown smoothness hint {self.smoothness_hint!r}")
        if self.support_lo < 0 or self.support_hi < self.support_lo:
            raise ValueError(f"invalid support [{self.support_lo}, {self.support_hi}]")
        if self.jump_order is not None and self.jump_order < 0:
            raise ValueError(f"jump_order must be >= 0, got {self.jump_order}")
        object.__setattr__(self, "breakpoints", tuple(sorted(float(b) for b in self.breakpoints)))

    def __call__(self, x: ArrayLike) -> ArrayLike:
        if np.ndim(x) == 0:
            return float(self._eval_array(np.array([float(x)]))[0])
        arr = np.asarray(x, dtype=float)
        return self._eval_array(arr.ravel()).reshape(arr.shape)

    def _eval_array(self, x: np.ndarray) -> np.ndarray:
        if self.vectorized:
            out = np.asarray(self.evaluate(x), dtype=float)
            if out.shape == x.shape:
                return out
            return np.broadcast_to(out, x.shape).astype(float)
        return np.fromiter((self.evaluate(float(v)) for v in x), dtype=float, count=x.size)

    @property
    def is_compact(self) -> bool:
        return math.isfinite(self.support_hi)

    def breakpoints_in(self, a: float, b: float) -> list:
        """Registered breakpoints strictly inside (a, b)."""
        return [c for c in self.breakpoints if a < c < b]

    def check_support(self, samples: int = 100, seed: int = 0, span: float = 10.0) -> None:
        """Spot-check that f vanishes right of a finite support_hi."""
        if not self.is_compact:
            return
        rng = np.random.default_rng(seed)
        xs = self.support_hi + span * rng.random(samples) + 1e-9
        values = self(xs)
        bad = np.flatnonzero(values != 0.0)
        if bad.size:
            raise ValueError(
                f"{self.label or 'function'} is nonzero at x={xs[bad[0]]:.6g} > support_hi={self.support_hi:g}"
            )


@dataclass(frozen=True)
class DualFunction(TestFunction):
    """
    A TestFunction on the dual variable lambda >= 0.

    `oscillation_frequencies` are the rates w of the cos(w lambda + phase)
    factors in its large-lambda behaviour; empty when it does not oscillate.
    """

    decay_exponent_hint: Optional[float] = None
    oscillation_frequencies: Tuple[float, ...] = ()
