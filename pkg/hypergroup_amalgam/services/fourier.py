# fourier.py
"""
The hypergroup Fourier transform f^(lambda) = integral of f(x) j_alpha(lambda x) d omega(x),
its inverse with Plancherel constant c_alpha = (2^alpha Gamma(alpha+1))^-2, and the
closed forms used as oracles.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Tuple, Union

import numpy as np

from hypergroup_amalgam.constants.constants import (
    CACHE_QUANTUM,
    ENVELOPE_SLACK,
    LAMBDA_SERIES_LIMIT,
)
from hypergroup_amalgam.models.Alpha import Alpha
from hypergroup_amalgam.models.QuadSpec import QuadSpec
from hypergroup_amalgam.models.TestFunction import DualFunction, TestFunction
from hypergroup_amalgam.services.bessel_kingman import ValueCache, lp_norm
from hypergroup_amalgam.services.quadrature import (
    DEFAULT_SPEC,
    integrate_adaptive,
    integrate_oscillatory,
)
from hypergroup_amalgam.services.specfun import bessel_J, bessel_j_norm

AlphaLike = Union[Alpha, float]

TAIL_DOMINANCE_FACTOR = 10.0
TAIL_FIT_SAMPLES = 64
TAIL_FIT_PER_PERIOD = 16


class TailDominatesError(ArithmeticError):
    """Raised when the truncated part of an inverse transform exceeds 10x the absolute tolerance."""

    def __init__(self, x: float, tail: float, limit: float):
        super().__init__(f"inverse transform at x={x:g}: tail bound {tail:.3g} exceeds {limit:.3g}")
        self.x = x
        self.tail = tail
        self.limit = limit


@dataclass(frozen=True)
class InverseTransform(TestFunction):
    """Truncated inverse transform; tail_bound(x) estimates the omitted part."""

    tail_bound: Optional[Callable[[float], float]] = None


def plancherel_constant(alpha: AlphaLike) -> float:
    return Alpha.of(alpha).plancherel_c


def envelope_threshold(alpha: AlphaLike) -> float:
    """N_alpha = max(10, 10 (alpha + 1)), where the asymptotic regime starts."""
    return max(10.0, 10.0 * (Alpha.of(alpha).value + 1.0))


def _per_point(fn: Callable[[float], float]) -> Callable[[np.ndarray], np.ndarray]:
    def _evaluate(xs):
        xs = np.asarray(xs, dtype=float)
        return np.fromiter((fn(float(v)) for v in xs.ravel()), dtype=float, count=xs.size).reshape(xs.shape)

    return _evaluate


def _split_at_origin(lam, small: Callable[[np.ndarray], np.ndarray], regular: Callable[[np.ndarray], np.ndarray]):
    arr = np.asarray(lam, dtype=float)
    if np.any(arr < 0):
        raise ValueError("lambda must be >= 0")
    out = np.empty_like(arr)
    tiny = arr < LAMBDA_SERIES_LIMIT
    if np.any(tiny):
        out[tiny] = small(arr[tiny])
    if np.any(~tiny):
        out[~tiny] = regular(arr[~tiny])
    if np.ndim(lam) == 0:
        return float(out)
    return out


def indicator_hat_closed_form(alpha: AlphaLike, lam):
    """Gamma(alpha+1) 2^alpha lambda^-(alpha+1) J_{alpha+1}(lambda); 1/(2 alpha + 2) at 0."""
    al = Alpha.of(alpha)
    a = al.value
    scale = al.character_scale

    def small(l):
        return 1.0 / (2.0 * a + 2.0) - l * l / (8.0 * (a + 1.0) * (a + 2.0))

    def regular(l):
        return scale * l ** (-(a + 1.0)) * bessel_J(a + 1.0, l)

    return _split_at_origin(lam, small, regular)


def bump_hat_closed_form(alpha: AlphaLike, lam):
    """Transform of (1 - x^2)^2 on [0, 1]: 8 2^alpha Gamma(alpha+1) lambda^(-alpha-3) J_{alpha+3}(lambda)."""
    al = Alpha.of(alpha)
    a = al.value
    scale = al.character_scale

    def small(l):
        return np.full_like(l, 1.0 / ((a + 1.0) * (a + 2.0) * (a + 3.0)))

    def regular(l):
        return 8.0 * scale * l ** (-(a + 3.0)) * bessel_J(a + 3.0, l)

    return _split_at_origin(lam, small, regular)


def indicator_hat_dual(alpha: AlphaLike, radius: float = 1.0) -> DualFunction:
    """Closed-form transform of 1_[0, R): R^(2 alpha + 2) 1^_{I_1}(R lambda)."""
    al = Alpha.of(alpha)
    factor = radius ** (2.0 * al.value + 2.0)

    def _evaluate(lam):
        return factor * indicator_hat_closed_form(al, radius * np.asarray(lam, dtype=float))

    return DualFunction(
        evaluate=_evaluate,
        label=f"hat[1[0,{radius:g})]",
        smoothness_hint="oscillatory",
        decay_exponent_hint=-(al.value + 1.5),
        oscillation_frequencies=(float(radius),),
    )


def transform_decay_exponent(alpha: AlphaLike, f: TestFunction) -> float:
    """
    f^ decays like lambda^-(alpha + 3/2 + k) when the k-th derivative of f is
    the lowest one to jump; k = 0 when f.jump_order is unknown.
    """
    order = f.jump_order if f.jump_order is not None else 0
    return -(Alpha.of(alpha).value + 1.5 + order)


def _jump_locations(f: TestFunction) -> Tuple[float, ...]:
    points = {c for c in f.breakpoints if c > 0}
    points.update(c for c in (f.support_lo, f.support_hi) if 0 < c < math.inf)
    return tuple(sorted(points))


def fourier_transform(alpha: AlphaLike, f: TestFunction, spec: Optional[QuadSpec] = None) -> DualFunction:
    """
    f^ as a lazily evaluated DualFunction. Above lambda * support_hi = 2 pi the
    integral is segmented at the zeros of J_alpha scaled by 1/lambda.
    """
    al = Alpha.of(alpha)
    if not f.is_compact:
        raise ValueError(f"fourier_transform needs compact support; {f.label or 'f'} has none")
    spec = spec or DEFAULT_SPEC
    a = al.value
    exponent = al.haar_exponent
    lo, hi = f.support_lo, f.support_hi
    memo = ValueCache()

    def _at(lam: float) -> float:
        if hi <= lo:
            return 0.0

        def integrand(x):
            return f(x) * bessel_j_norm(a, lam * x) * x ** exponent

        if lam * hi > 2.0 * math.pi:
            return integrate_oscillatory(
                integrand, lam, a, lo, hi, spec, f.breakpoints, vectorized=True,
                label=f"hat[{f.label}]({lam:g})",
            )
        value, _ = integrate_adaptive(integrand, lo, hi, spec, f.breakpoints, label=f"hat[{f.label}]({lam:g})")
        return value

    def _cached(lam: float) -> float:
        if lam < 0:
            raise ValueError(f"lambda must be >= 0, got {lam}")
        return memo.lookup(round(lam / CACHE_QUANTUM) * CACHE_QUANTUM, lambda: _at(lam))

    return DualFunction(
        evaluate=_per_point(_cached),
        label=f"hat[{f.label}]",
        smoothness_hint="oscillatory",
        decay_exponent_hint=transform_decay_exponent(al, f),
        oscillation_frequencies=_jump_locations(f),
    )


def asymptotic_envelope_check(
    alpha: AlphaLike,
    lambda_min: float,
    lambda_max: float,
    samples: int,
) -> Tuple[float, float]:
    """
    C* = max |1^_{I_1}(lambda)| lambda^(alpha+3/2) over `samples` points of
    [lambda_min, lambda_max], and the largest excess over 1.05 C* on a grid
    four times denser (<= 0 when the envelope holds).
    """
    al = Alpha.of(alpha)
    threshold = envelope_threshold(al)
    if lambda_min < threshold:
        raise ValueError(f"lambda_min must be >= N_alpha = {threshold:g}, got {lambda_min:g}")
    if lambda_max <= lambda_min or samples < 2:
        raise ValueError("need lambda_max > lambda_min and at least 2 samples")
    power = al.value + 1.5

    def scaled(lams):
        return np.abs(indicator_hat_closed_form(al, lams)) * lams ** power

    coarse = np.linspace(lambda_min, lambda_max, samples)
    c_star = float(scaled(coarse).max())
    dense = np.linspace(lambda_min, lambda_max, 4 * samples + 1)
    violation = float((scaled(dense) - ENVELOPE_SLACK * c_star).max())
    return c_star, violation


def _decay_hint(al: Alpha, g: DualFunction) -> float:
    hint = g.decay_exponent_hint if g.decay_exponent_hint is not None else -(al.value + 1.5)
    if hint > -(al.value + 1.5) + 1e-12:
        raise ValueError(
            f"{g.label or 'g'} decays like lambda^{hint:g}; inversion needs at least lambda^{-(al.value + 1.5):g}"
        )
    return hint


def _j_envelope(al: Alpha, t: float) -> float:
    if t <= 1.0:
        return 1.0
    return min(1.0, ENVELOPE_SLACK * al.character_scale * math.sqrt(2.0 / math.pi) * t ** (-(al.value + 0.5)))


def inverse_transform(
    alpha: AlphaLike,
    g: DualFunction,
    lambda_cut: float,
    spec: Optional[QuadSpec] = None,
) -> InverseTransform:
    """
    x -> c_alpha * integral_0^lambda_cut g(lambda) j_alpha(lambda x) lambda^(2 alpha+1) d lambda.

    Evaluation raises TailDominatesError where the tail estimate past
    lambda_cut exceeds 10 * spec.abs_tol. The estimate takes the envelope
    of g from its decay hint over [lambda_cut / 2, lambda_cut] and divides by
    the slowest beat between the oscillations of g and of j_alpha(lambda x).
    """
    al = Alpha.of(alpha)
    spec = spec or DEFAULT_SPEC
    hint = _decay_hint(al, g)
    if lambda_cut <= 0:
        raise ValueError(f"lambda_cut must be positive, got {lambda_cut}")
    a = al.value
    c_alpha = al.plancherel_c
    exponent = al.haar_exponent
    limit = TAIL_DOMINANCE_FACTOR * spec.abs_tol

    fastest = max(g.oscillation_frequencies, default=0.0)
    periods = fastest * lambda_cut / (4.0 * math.pi)
    samples = max(TAIL_FIT_SAMPLES, int(math.ceil(TAIL_FIT_PER_PERIOD * periods)))
    window = np.linspace(0.5 * lambda_cut, lambda_cut, samples)
    fitted = ENVELOPE_SLACK * float(np.max(np.abs(g(window)) * window ** (-hint)))
    envelope_at_cut = fitted * lambda_cut ** hint
    resolution = math.pi / lambda_cut
    cuts = list(g.breakpoints)
    if fastest > 0.0:
        cuts += list(np.arange(math.pi / fastest, lambda_cut, math.pi / fastest))

    def tail_bound(x: float) -> float:
        amplitude = c_alpha * envelope_at_cut * lambda_cut ** exponent * _j_envelope(al, lambda_cut * x)
        if g.oscillation_frequencies:
            # cos(w lambda) cos(x lambda) beats at |w - x| and w + x
            rate = max(0.5 / max(abs(w - x), resolution) + 0.5 / (w + x) for w in g.oscillation_frequencies)
        else:
            rate = 1.0 / max(x, resolution)
        bound = amplitude * rate
        decay = hint + exponent - (a + 0.5 if lambda_cut * x >= 1.0 else 0.0)
        if decay < -1.0:
            bound = min(bound, amplitude * lambda_cut / (-1.0 - decay))
        return bound

    def _at(x: float) -> float:
        if x < 0:
            raise ValueError(f"x must be >= 0, got {x}")
        tail = tail_bound(x)
        if tail > limit:
            raise TailDominatesError(x, tail, limit)

        def integrand(lam):
            return g(lam) * bessel_j_norm(a, lam * x) * lam ** exponent

        if x * lambda_cut > 2.0 * math.pi:
            value = integrate_oscillatory(
                integrand, x, a, 0.0, lambda_cut, spec, cuts, vectorized=True,
                label=f"inverse[{g.label}]({x:g})",
            )
        else:
            value, _ = integrate_adaptive(
                integrand, 0.0, lambda_cut, spec, cuts, label=f"inverse[{g.label}]({x:g})"
            )
        return c_alpha * value

    return InverseTransform(
        evaluate=_per_point(_at),
        label=f"inverse[{g.label}]",
        smoothness_hint="smooth",
        tail_bound=tail_bound,
    )


def plancherel_check(
    alpha: AlphaLike,
    f: TestFunction,
    lambda_cut: float,
    spec: Optional[QuadSpec] = None,
) -> Tuple[float, float]:
    """(integral |f|^2 d omega, c_alpha integral_0^lambda_cut |f^|^2 lambda^(2 alpha+1) d lambda)."""
    al = Alpha.of(alpha)
    spec = spec or DEFAULT_SPEC
    lhs = lp_norm(al, f, 2.0, spec) ** 2
    if lhs == 0.0:
        return 0.0, 0.0
    f_hat = fourier_transform(al, f, spec)
    exponent = al.haar_exponent

    def integrand(lam: float) -> float:
        v = f_hat(lam)
        return v * v * lam ** exponent

    period = math.pi / max(f.support_hi, 1e-300)
    cuts = list(np.arange(period, lambda_cut, period))
    value, _ = integrate_adaptive(integrand, 0.0, lambda_cut, spec, cuts, label=f"plancherel[{f.label}]")
    return lhs, al.plancherel_c * value
