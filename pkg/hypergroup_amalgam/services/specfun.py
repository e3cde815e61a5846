# specfun.py
"""
Gamma, the normalized Bessel function j_alpha, J_nu and the positive zeros of J_nu.

Gamma and J_nu delegate to scipy.special; j_alpha uses its power series in
x^2 near the origin and the relation j_alpha(x) = 2^a Gamma(a+1) x^-a J_a(x)
beyond J_NORM_SERIES_CROSSOVER.
"""
from __future__ import annotations

import math
from functools import lru_cache
from typing import List, Union

import numpy as np
from scipy import optimize, special

from hypergroup_amalgam.constants.constants import (
    GAMMA_MAX_ARG,
    J_NORM_SERIES_CROSSOVER,
    SERIES_MAX_TERMS,
    SERIES_REL_TRUNCATION,
)
from hypergroup_amalgam.models.Alpha import Alpha

ArrayLike = Union[float, np.ndarray]

ZERO_SCAN_STEP = 0.5
ZERO_CACHE_BLOCK = 64


class DomainError(ValueError):
    """Raised when a special function is called outside its domain."""
    pass


class GammaOverflowError(OverflowError):
    """Raised when Gamma(x) would overflow double precision (x > 170)."""
    pass


def _alpha_value(alpha: Union[Alpha, float]) -> float:
    return alpha.value if isinstance(alpha, Alpha) else float(alpha)


def gamma(x: float) -> float:
    x = float(x)
    if not x > 0:
        raise DomainError(f"gamma requires x > 0, got {x}")
    if x > GAMMA_MAX_ARG:
        raise GammaOverflowError(f"gamma({x}) overflows; argument limit is {GAMMA_MAX_ARG:g}")
    return float(special.gamma(x))


def _j_norm_series(a: float, x2: np.ndarray) -> np.ndarray:
    term = np.ones_like(x2)
    total = np.ones_like(x2)
    quarter = -0.25 * x2
    for k in range(SERIES_MAX_TERMS):
        term = term * quarter / ((k + 1.0) * (a + k + 1.0))
        total = total + term
        if np.all(np.abs(term) <= SERIES_REL_TRUNCATION * np.abs(total)):
            break
    return total


def bessel_j_norm(alpha: Union[Alpha, float], x: ArrayLike) -> ArrayLike:
    """
    j_alpha(x) = sum_k (-1)^k Gamma(a+1) x^2k / (4^k k! Gamma(a+k+1)).

    Accepts scalars or arrays. Only x^2 enters the computation, so the result
    is exactly even in x.
    """
    a = _alpha_value(alpha)
    arr = np.asarray(x, dtype=float)
    x2 = arr * arr
    ax = np.sqrt(x2)
    out = np.empty_like(x2)
    small = ax <= J_NORM_SERIES_CROSSOVER
    if np.any(small):
        out[small] = _j_norm_series(a, x2[small])
    large = ~small
    if np.any(large):
        xl = ax[large]
        scale = 2.0 ** a * special.gamma(a + 1.0)
        out[large] = scale * xl ** (-a) * special.jv(a, xl)
    if np.ndim(x) == 0:
        return float(out)
    return out


def bessel_J(nu: float, x: ArrayLike) -> ArrayLike:
    """Bessel function of the first kind J_nu for nu >= 0, x >= 0."""
    if nu < 0:
        raise DomainError(f"bessel_J requires nu >= 0, got {nu}")
    arr = np.asarray(x, dtype=float)
    if np.any(arr < 0) or np.any(np.isnan(arr)):
        raise DomainError("bessel_J requires x >= 0")
    out = special.jv(nu, arr)
    if np.ndim(x) == 0:
        return float(out)
    return out


def _mcmahon(nu: float, k: int) -> float:
    beta = (k + 0.5 * nu - 0.25) * math.pi
    mu = 4.0 * nu * nu
    return beta - (mu - 1.0) / (8.0 * beta)


@lru_cache(maxsize=256)
def _zeros_cached(nu: float, count: int) -> tuple:
    def j(t):
        return special.jv(nu, t)

    start = max(nu, 1e-3)
    stop = max(_mcmahon(nu, count), start) + math.pi
    zeros: List[float] = []
    lo = start
    while len(zeros) < count:
        xs = np.arange(lo, stop + ZERO_SCAN_STEP, ZERO_SCAN_STEP)
        vals = special.jv(nu, xs)
        for i in range(len(xs) - 1):
            if len(zeros) >= count:
                break
            v0, v1 = vals[i], vals[i + 1]
            if v1 == 0.0:
                zeros.append(float(xs[i + 1]))
            elif v0 * v1 < 0.0:
                zeros.append(optimize.brentq(j, xs[i], xs[i + 1], xtol=1e-14, maxiter=200))
        # resume at the last grid point
        lo = float(xs[-1])
        stop = lo + max(count - len(zeros), 1) * math.pi + math.pi
    return tuple(zeros)


def bessel_J_zeros(nu: float, count: int) -> List[float]:
    """First `count` positive zeros of J_nu in ascending order."""
    if count < 1:
        raise DomainError(f"count must be positive, got {count}")
    if nu < 0:
        raise DomainError(f"nu must be >= 0, got {nu}")
    blocks = -(-int(count) // ZERO_CACHE_BLOCK)
    return list(_zeros_cached(float(nu), blocks * ZERO_CACHE_BLOCK)[:count])
