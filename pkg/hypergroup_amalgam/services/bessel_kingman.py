# bessel_kingman.py
"""
The Bessel-Kingman hypergroup (R+, *_alpha): kernel, Haar measure, point
convolution eps_x * eps_y, translation tau_y and function convolution.

Also hosts the named catalog of test functions used by the CLI and the
verification harness.
"""
from __future__ import annotations

import math
import threading
import warnings
from collections import OrderedDict
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Union

import numpy as np

from hypergroup_amalgam.constants.constants import (
    CACHE_QUANTUM,
    VALUE_CACHE_SIZE,
    GRADING_RATIO,
    INF,
    LP_INF_SAMPLES,
)
from hypergroup_amalgam.models.Alpha import Alpha
from hypergroup_amalgam.models.ExponentPair import Exponent, ExponentPair, TailPolicy, parse_exponent
from hypergroup_amalgam.models.QuadSpec import QuadSpec
from hypergroup_amalgam.models.TestFunction import TestFunction
from hypergroup_amalgam.services.quadrature import (
    DEFAULT_SPEC,
    integrate_adaptive,
    integrate_endpoint_weighted,
)
from hypergroup_amalgam.services.specfun import DomainError

AlphaLike = Union[Alpha, float]


class DiscontinuityWarning(UserWarning):
    """A kernel integral was split at a jump of a piecewise-constant function."""
    pass


class ConvolutionCostWarning(UserWarning):
    """Each evaluation of a function convolution is a nested quadrature."""
    pass


@dataclass(frozen=True)
class HaarMeasure:
    alpha: Alpha

    def density(self, z):
        return np.asarray(z, dtype=float) ** self.alpha.haar_exponent

    def mass(self, a: float, b: float) -> float:
        return haar_measure_of(self.alpha, a, b)


def haar_measure_of(alpha: AlphaLike, a: float, b: float) -> float:
    """omega_alpha([a, b)) = (b^(2a+2) - a^(2a+2)) / (2a+2)."""
    al = Alpha.of(alpha)
    if b <= a:
        return 0.0
    e = 2.0 * al.value + 2.0
    return (b ** e - max(a, 0.0) ** e) / e


def haar_interval_mass(alpha: AlphaLike, n: int) -> float:
    """omega_n, the Haar mass of I_n = [n-1, n)."""
    if n < 1:
        raise ValueError(f"block index must be >= 1, got {n}")
    return haar_measure_of(alpha, n - 1.0, float(n))


def kernel(alpha: AlphaLike, x: float, y: float, z):
    """
    K_alpha(x, y, z) = C_Gamma [(z^2-(x-y)^2)((x+y)^2-z^2)]^(alpha-1/2) / (xyz)^(2 alpha)
    on (|x-y|, x+y), zero outside. At the endpoints the bracket power is 0
    for alpha > 1/2 and 1 for alpha = 1/2. z may be an array; z <= 0 gives 0.
    """
    al = Alpha.of(alpha)
    if x <= 0 or y <= 0:
        raise DomainError(f"kernel requires x, y > 0, got x={x}, y={y}")
    zz = np.asarray(z, dtype=float)
    d = abs(x - y)
    s = x + y
    mu = al.mu
    out = np.zeros_like(zz)
    inside = (zz >= d) & (zz <= s) & (zz > 0)
    if np.any(inside):
        zi = zz[inside]
        bracket = np.clip((zi * zi - d * d) * (s * s - zi * zi), 0.0, None)
        power = bracket ** mu if mu > 0 else np.ones_like(bracket)
        out[inside] = al.c_gamma * power / (x * y * zi) ** (2.0 * al.value)
    if np.ndim(z) == 0:
        return float(out)
    return out


def _grading_points(d: float, hi: float) -> List[float]:
    points = []
    if d <= 0 or d >= GRADING_RATIO * (hi - d):
        return points
    step = d
    while d + step < hi:
        points.append(d + step)
        step *= 2.0
    return points


def point_convolution(
    alpha: AlphaLike,
    x: float,
    y: float,
    f: TestFunction,
    spec: Optional[QuadSpec] = None,
) -> float:
    """(eps_x * eps_y)(f) = integral of K(x,y,z) f(z) z^(2 alpha+1) over [|x-y|, x+y]."""
    al = Alpha.of(alpha)
    if x < 0 or y < 0:
        raise DomainError(f"point_convolution requires x, y >= 0, got x={x}, y={y}")
    if x == 0:
        return float(f(y))
    if y == 0:
        return float(f(x))
    spec = spec or DEFAULT_SPEC
    d = abs(x - y)
    s = x + y
    lo = max(d, f.support_lo)
    hi = min(s, f.support_hi)
    if hi <= lo:
        return 0.0

    mu = al.mu
    coef = al.c_gamma / (x * y) ** (2.0 * al.value)
    left_singular = lo == d
    right_singular = hi == s

    if d == 0.0:
        # (z-d)^mu (z+d)^mu z collapses to z^(2 mu + 1)
        left_exp = 2.0 * mu + 1.0

        def g(z):
            out = coef * f(z) * (s + z) ** mu
            if not left_singular:
                out = out * z ** left_exp
            if not right_singular:
                out = out * (s - z) ** mu
            return out
    else:
        left_exp = mu

        def g(z):
            out = coef * f(z) * z * ((z + d) * (s + z)) ** mu
            if not left_singular:
                out = out * (z - d) ** mu
            if not right_singular:
                out = out * (s - z) ** mu
            return out

    jumps = f.breakpoints_in(lo, hi)
    if jumps and f.smoothness_hint == "piecewise-constant":
        warnings.warn(
            f"kernel integral split at jumps of {f.label or 'f'}",
            DiscontinuityWarning,
            stacklevel=2,
        )
    cuts = list(jumps)
    if left_singular:
        cuts += _grading_points(d, hi)
    return integrate_endpoint_weighted(
        g,
        lo,
        hi,
        mu,
        spec,
        breakpoints=cuts,
        left_mu=left_exp if left_singular else 0.0,
        right_mu=mu if right_singular else 0.0,
        label=f"point_convolution(x={x:g}, y={y:g}, {f.label})",
    )


def _evaluate_pointwise(fn: Callable[[float], float]) -> Callable[[np.ndarray], np.ndarray]:
    def _evaluate(xs):
        xs = np.asarray(xs, dtype=float)
        return np.fromiter((fn(float(v)) for v in xs.ravel()), dtype=float, count=xs.size).reshape(xs.shape)

    return _evaluate


def _edges(f: TestFunction) -> List[float]:
    """Breakpoints of f together with its finite support ends."""
    pts = set(f.breakpoints)
    if f.support_lo > 0:
        pts.add(f.support_lo)
    if f.is_compact:
        pts.add(f.support_hi)
    return sorted(pts)


def translate(
    alpha: AlphaLike,
    y: float,
    f: TestFunction,
    spec: Optional[QuadSpec] = None,
) -> TestFunction:
    """tau_y f, the function x -> (eps_x * eps_y)(f)."""
    al = Alpha.of(alpha)
    if y < 0:
        raise DomainError(f"translate requires y >= 0, got {y}")
    if y == 0:
        return f
    spec = spec or DEFAULT_SPEC
    kinks = sorted({y + c for c in _edges(f)} | {abs(y - c) for c in _edges(f)})
    lo = max(0.0, f.support_lo - y, y - f.support_hi)

    def _at(x: float) -> float:
        return point_convolution(al, x, y, f, spec)

    return TestFunction(
        evaluate=_evaluate_pointwise(_at),
        support_hi=f.support_hi + y,
        support_lo=lo,
        label=f"tau_{y:g}[{f.label}]",
        smoothness_hint="smooth",
        breakpoints=tuple(c for c in kinks if c > 0),
    )


class ValueCache:
    """Thread-safe LRU of function values keyed by the quantized argument."""

    def __init__(self, max_entries: int = VALUE_CACHE_SIZE):
        self._values: "OrderedDict[float, float]" = OrderedDict()
        self._max_entries = max_entries
        self._lock = threading.Lock()

    def get(self, key: float):
        with self._lock:
            value = self._values.get(key)
            if value is not None:
                self._values.move_to_end(key)
            return value

    def put(self, key: float, value: float) -> None:
        with self._lock:
            self._values[key] = value
            self._values.move_to_end(key)
            while len(self._values) > self._max_entries:
                self._values.popitem(last=False)

    def lookup(self, key: float, compute: Callable[[], float]) -> float:
        hit = self.get(key)
        if hit is not None:
            return hit
        value = compute()
        self.put(key, value)
        return value

    def __len__(self) -> int:
        with self._lock:
            return len(self._values)


def convolve(
    alpha: AlphaLike,
    f: TestFunction,
    g: TestFunction,
    spec: Optional[QuadSpec] = None,
) -> TestFunction:
    """
    f * g evaluated lazily: (f * g)(x) = integral of f(y) tau_x g(y) d omega(y).

    The outer integral runs over the support of f, split at the jumps of f
    and at x +- c for the jumps c of g. Values are memoized per x.
    """
    al = Alpha.of(alpha)
    if not f.is_compact:
        raise ValueError(f"convolve requires compact support for {f.label or 'f'}")
    spec = spec or DEFAULT_SPEC
    warnings.warn(
        "each evaluation of a convolution is a nested quadrature",
        ConvolutionCostWarning,
        stacklevel=2,
    )
    cache = ValueCache()
    exponent = al.haar_exponent
    f_edges = _edges(f)
    g_edges = _edges(g)
    label = f"({f.label})*({g.label})"

    def _at(x: float) -> float:
        lo = max(f.support_lo, g.support_lo - x, x - g.support_hi, 0.0)
        hi = min(f.support_hi, x + g.support_hi)
        if hi <= lo:
            value = 0.0
        else:
            cuts = list(f_edges) + [x + c for c in g_edges] + [abs(x - c) for c in g_edges]

            def integrand(t: float) -> float:
                ft = f(t)
                if ft == 0.0:
                    return 0.0
                return ft * point_convolution(al, t, x, g, spec) * t ** exponent

            value, _ = integrate_adaptive(integrand, lo, hi, spec, cuts, label=f"{label}({x:g})")
        return value

    def _cached(x: float) -> float:
        return cache.lookup(round(x / CACHE_QUANTUM) * CACHE_QUANTUM, lambda: _at(x))

    kinks = {a + b for a in f_edges for b in g_edges} | {abs(a - b) for a in f_edges for b in g_edges}
    result = TestFunction(
        evaluate=_evaluate_pointwise(_cached),
        support_hi=f.support_hi + g.support_hi,
        label=label,
        smoothness_hint="smooth",
        breakpoints=tuple(sorted(c for c in kinks if c > 0)),
    )
    return result


def lp_norm(
    alpha: AlphaLike,
    f: TestFunction,
    p: Union[Exponent, str],
    spec: Optional[QuadSpec] = None,
    tail: Optional[TailPolicy] = None,
) -> float:
    """
    (integral |f|^p d omega)^(1/p); for p = inf the max of |f| over
    LP_INF_SAMPLES points plus the breakpoints and their left neighbours.
    Functions without compact support go through the (p, p) amalgam norm.
    """
    al = Alpha.of(alpha)
    p = parse_exponent(p)
    spec = spec or DEFAULT_SPEC
    if not f.is_compact:
        from hypergroup_amalgam.services.amalgam import discrete_norm

        return discrete_norm(al, f, ExponentPair(p=p, q=p), tail or TailPolicy(), spec).value
    lo, hi = f.support_lo, f.support_hi
    if p == INF:
        xs = np.linspace(lo, hi, LP_INF_SAMPLES)
        extra = [c for c in f.breakpoints if lo <= c <= hi]
        extra += [np.nextafter(c, -math.inf) for c in extra if c > lo]
        values = np.abs(f(np.concatenate([xs, np.asarray(extra, dtype=float)])))
        return float(values.max()) if values.size else 0.0
    if hi <= lo:
        return 0.0
    exponent = al.haar_exponent

    def integrand(z: float) -> float:
        return abs(f(z)) ** p * z ** exponent

    value, _ = integrate_adaptive(integrand, lo, hi, spec, f.breakpoints, label=f"lp_norm({f.label}, p={p:g})")
    return value ** (1.0 / p)


# ------------------------- Test function catalog -------------------------

def indicator(lo: float, hi: float, label: Optional[str] = None) -> TestFunction:
    """The indicator of the half-open interval [lo, hi)."""

    def _evaluate(x):
        return ((x >= lo) & (x < hi)).astype(float)

    return TestFunction(
        evaluate=_evaluate,
        support_hi=float(hi),
        support_lo=float(lo),
        label=label or f"1[{lo:g},{hi:g})",
        smoothness_hint="piecewise-constant",
        breakpoints=tuple(c for c in (lo, hi) if c > 0),
        jump_order=0,
    )


def bump() -> TestFunction:
    """(1 - x^2)^2 on [0, 1]."""

    def _evaluate(x):
        return np.where(x < 1.0, (1.0 - x * x) ** 2, 0.0)

    return TestFunction(
        evaluate=_evaluate,
        support_hi=1.0,
        label="bump",
        smoothness_hint="smooth",
        breakpoints=(1.0,),
        jump_order=2,
    )


def ramp(lo: float, hi: float) -> TestFunction:
    """x on [lo, hi), zero elsewhere."""

    def _evaluate(x):
        return np.where((x >= lo) & (x < hi), x, 0.0)

    return TestFunction(
        evaluate=_evaluate,
        support_hi=float(hi),
        support_lo=float(lo),
        label=f"x*1[{lo:g},{hi:g})",
        smoothness_hint="piecewise-constant",
        breakpoints=tuple(c for c in (lo, hi) if c > 0),
        jump_order=0,
    )


def zero_function() -> TestFunction:
    return TestFunction(evaluate=np.zeros_like, support_hi=0.0, label="zero", smoothness_hint="smooth")


CATALOG: Dict[str, Callable[[], TestFunction]] = {
    "unit-indicator": lambda: indicator(0.0, 1.0, "unit-indicator"),
    "indicator-2-3": lambda: indicator(2.0, 3.0, "indicator-2-3"),
    "indicator-0-5": lambda: indicator(0.0, 5.0, "indicator-0-5"),
    "bump": bump,
    "ramp-1-2": lambda: ramp(1.0, 2.0),
    "zero": zero_function,
}

DEFAULT_CATALOG = ("unit-indicator", "indicator-2-3", "indicator-0-5", "bump", "ramp-1-2")


def get_function(name: str) -> TestFunction:
    try:
        factory = CATALOG[name]
    except KeyError:
        raise KeyError(f"unknown function '{name}'; known: {', '.join(sorted(CATALOG))}") from None
    f = factory()
    f.check_support()
    return f


def default_catalog(names: Sequence[str] = DEFAULT_CATALOG) -> List[TestFunction]:
    return [get_function(n) for n in names]
