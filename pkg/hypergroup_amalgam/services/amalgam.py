# amalgam.py
"""
Wiener-amalgam norms on (R+, *_alpha).

Discrete norms combine the block values b_n over I_n = [n-1, n) with the
Haar masses omega_n; infinite exponents are handled by explicit branches.
Functions without compact support are truncated at TailPolicy.n_max and
the remainder is estimated from a power-law fit of the block envelope.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from hypergroup_amalgam.constants.constants import (
    DEFAULT_Y_STEP,
    SUP_SAMPLES_PER_UNIT,
)
from hypergroup_amalgam.models.Alpha import Alpha
from hypergroup_amalgam.models.ExponentPair import (
    Exponent,
    ExponentPair,
    TailPolicy,
    is_infinite,
    parse_exponent,
    reciprocal,
)
from hypergroup_amalgam.models.QuadSpec import QuadSpec
from hypergroup_amalgam.models.TestFunction import TestFunction
from hypergroup_amalgam.models.VerificationReport import ReportBuilder, VerificationReport
from hypergroup_amalgam.services.bessel_kingman import (
    haar_interval_mass,
    indicator,
    translate,
)
from hypergroup_amalgam.services.quadrature import DEFAULT_SPEC, integrate_adaptive

EMBEDDING_SLACK = 1e-9


@dataclass(frozen=True)
class AmalgamNorm:
    """
    A discrete amalgam norm together with its truncation diagnostics.

    Unpacks as (value, tail_estimate). When `diverges` is set, `value` is the
    partial norm over the computed blocks and tail_estimate is inf.
    """

    value: float
    tail_estimate: float
    blocks: Tuple[float, ...] = field(repr=False)
    diverges: bool = False
    slope: Optional[float] = None
    tail_exponent: Optional[float] = None

    def __iter__(self):
        yield self.value
        yield self.tail_estimate


def haar_masses(alpha: Alpha, count: int) -> np.ndarray:
    return np.array([haar_interval_mass(alpha, n) for n in range(1, count + 1)], dtype=float)


def _block_sup(f: TestFunction, count: int) -> np.ndarray:
    base = np.arange(SUP_SAMPLES_PER_UNIT, dtype=float) / SUP_SAMPLES_PER_UNIT
    starts = np.arange(count, dtype=float)
    grid = starts[:, None] + base[None, :]
    right = np.nextafter(starts + 1.0, -math.inf)[:, None]
    grid = np.hstack([grid, right])
    values = np.abs(f(grid.ravel())).reshape(grid.shape)
    sups = values.max(axis=1)
    for c in f.breakpoints:
        for point in (c, np.nextafter(c, -math.inf)):
            n = int(math.floor(point))
            if 0 <= n < count and point >= 0:
                sups[n] = max(sups[n], abs(f(float(point))))
    return sups


def _block_lp(alpha: Alpha, f: TestFunction, p: float, count: int, spec: QuadSpec) -> np.ndarray:
    exponent = alpha.haar_exponent
    masses = haar_masses(alpha, count)

    def integrand(z: float) -> float:
        return abs(f(z)) ** p * z ** exponent

    out = np.zeros(count)
    for n in range(1, count + 1):
        lo = max(n - 1.0, f.support_lo)
        hi = min(float(n), f.support_hi)
        if hi <= lo:
            continue
        value, _ = integrate_adaptive(
            integrand, lo, hi, spec, f.breakpoints, label=f"block {n} of {f.label}, p={p:g}"
        )
        out[n - 1] = (max(value, 0.0) / masses[n - 1]) ** (1.0 / p)
    return out


def block_values(alpha: Union[Alpha, float], f: TestFunction, p: Exponent, count: int, spec: Optional[QuadSpec] = None) -> np.ndarray:
    """b_1, ..., b_count for exponent p."""
    al = Alpha.of(alpha)
    if count <= 0:
        return np.zeros(0)
    if is_infinite(p):
        return _block_sup(f, count)
    return _block_lp(al, f, float(p), count, spec or DEFAULT_SPEC)


def _head(masses: np.ndarray, blocks: np.ndarray, q: Exponent) -> float:
    if blocks.size == 0:
        return 0.0
    if is_infinite(q):
        return float(blocks.max())
    return math.fsum(masses * blocks ** float(q))


def discrete_norm(
    alpha: Union[Alpha, float],
    f: TestFunction,
    e: ExponentPair,
    tail: Optional[TailPolicy] = None,
    spec: Optional[QuadSpec] = None,
) -> AmalgamNorm:
    al = Alpha.of(alpha)
    tail = tail or TailPolicy()
    spec = spec or DEFAULT_SPEC
    q = e.q

    if f.is_compact:
        count = max(int(math.ceil(f.support_hi)), 0)
        blocks = block_values(al, f, e.p, count, spec)
        head = _head(haar_masses(al, count), blocks, q)
        value = head if is_infinite(q) else head ** reciprocal(q)
        return AmalgamNorm(value=value, tail_estimate=0.0, blocks=tuple(blocks.tolist()))
    if tail.mode == "compact-exact":
        raise ValueError(f"compact-exact mode needs compact support; {f.label or 'f'} has support_hi=inf")

    count = tail.n_max
    blocks = block_values(al, f, e.p, count, spec)
    masses = haar_masses(al, count)
    head = _head(masses, blocks, q)
    envelope = np.maximum.accumulate(blocks[::-1])[::-1]
    window = envelope[count - tail.fit_window:]
    if window[-1] <= 0.0:
        value = head if is_infinite(q) else head ** reciprocal(q)
        return AmalgamNorm(value=value, tail_estimate=0.0, blocks=tuple(blocks.tolist()))

    ns = np.arange(count - tail.fit_window + 1, count + 1, dtype=float)
    slope, intercept = np.polyfit(np.log(ns), np.log(window), 1)
    slope = float(slope)
    at_end = math.exp(intercept + slope * math.log(count))

    if is_infinite(q):
        diverges = slope > 0.0
        if diverges:
            return AmalgamNorm(head, math.inf, tuple(blocks.tolist()), True, slope, None)
        extra = max(0.0, at_end - head)
        return AmalgamNorm(head + extra, extra, tuple(blocks.tolist()), False, slope, None)

    qf = float(q)
    exponent = al.haar_exponent + qf * slope
    if exponent >= -1.0:
        return AmalgamNorm(head ** (1.0 / qf), math.inf, tuple(blocks.tolist()), True, slope, exponent)
    estimate = masses[-1] * at_end ** qf * count / (-exponent - 1.0)
    return AmalgamNorm((head + estimate) ** (1.0 / qf), float(estimate), tuple(blocks.tolist()), False, slope, exponent)


def default_y_grid(f: TestFunction, step: float = DEFAULT_Y_STEP) -> List[float]:
    """0, step, ..., support_hi + 1."""
    if not f.is_compact:
        raise ValueError(f"a default y grid needs compact support; {f.label or 'f'} has none")
    count = int(math.floor((f.support_hi + 1.0) / step + 1e-9)) + 1
    return [float(v) for v in step * np.arange(count)]


def window_integral(
    alpha: Union[Alpha, float],
    f: TestFunction,
    p: float,
    y: float,
    spec: Optional[QuadSpec] = None,
) -> float:
    """Integral of |f|^p tau_y 1_[0,1) d omega, over [max(0, y-1), y+1]."""
    al = Alpha.of(alpha)
    spec = spec or DEFAULT_SPEC
    window = translate(al, y, indicator(0.0, 1.0, "window"), spec)
    lo = max(0.0, y - 1.0, f.support_lo)
    hi = min(y + 1.0, f.support_hi)
    if hi <= lo:
        return 0.0
    exponent = al.haar_exponent

    def integrand(x: float) -> float:
        fx = f(x)
        if fx == 0.0:
            return 0.0
        return abs(fx) ** p * window(x) * x ** exponent

    cuts = list(f.breakpoints) + list(window.breakpoints)
    value, _ = integrate_adaptive(integrand, lo, hi, spec, cuts, label=f"window y={y:g} for {f.label}")
    return max(value, 0.0)


def continuous_norm_p_inf(
    alpha: Union[Alpha, float],
    f: TestFunction,
    p: float,
    y_grid: Optional[Sequence[float]] = None,
    spec: Optional[QuadSpec] = None,
) -> float:
    """max over y in y_grid of (integral |f|^p tau_y 1_[0,1) d omega)^(1/p)."""
    p = parse_exponent(p)
    if is_infinite(p):
        raise ValueError("the continuous (p, inf) norm needs a finite p")
    grid = list(y_grid) if y_grid is not None else default_y_grid(f)
    if not grid:
        raise ValueError("y_grid must not be empty")
    best = max(window_integral(alpha, f, p, y, spec) for y in grid)
    return best ** (1.0 / p)


def _classify(first: ExponentPair, second: ExponentPair) -> str:
    if first.q == second.q and reciprocal(first.p) >= reciprocal(second.p):
        return "p"
    if first.p == second.p and reciprocal(first.q) <= reciprocal(second.q):
        return "q"
    raise ValueError(f"pair {first} vs {second} matches neither embedding")


def embedding_checks(
    alpha: Union[Alpha, float],
    catalog: Sequence[TestFunction],
    pairs: Sequence[Tuple[ExponentPair, ExponentPair]],
    tail: Optional[TailPolicy] = None,
    spec: Optional[QuadSpec] = None,
    seed: int = 0,
    config_digest: str = "",
) -> VerificationReport:
    """
    For p1 <= p2: ||f||_{p1,q} <= ||f||_{p2,q}.
    For q1 >= q2: ||f||_{p,q1} <= C ||f||_{p,q2} with C = omega_1^(1/q1 - 1/q2),
    the smallest Haar block mass; the measured ratio is reported per pair.
    """
    al = Alpha.of(alpha)
    builder = ReportBuilder("embedding", al.value, tolerance=0.0, seed=seed, config_digest=config_digest)
    omega_1 = haar_interval_mass(al, 1)
    for first, second in pairs:
        kind = _classify(first, second)
        bound = 1.0
        if kind == "q":
            bound = omega_1 ** (reciprocal(first.q) - reciprocal(second.q))
        label = f"C{first}<={second}"
        for f in catalog:
            lhs = discrete_norm(al, f, first, tail, spec).value
            rhs = bound * discrete_norm(al, f, second, tail, spec).value
            builder.add_bound(f"{f.label} {first}<={second}", lhs, rhs, slack=EMBEDDING_SLACK * abs(rhs) + 1e-15)
            if rhs > 0:
                builder.max_constant(label, lhs / rhs * bound)
            elif label not in builder.constants:
                builder.constant(label, 0.0)
        builder.meta(f"bound{first}<={second}", f"{bound:.17g}")
    return builder.build()
