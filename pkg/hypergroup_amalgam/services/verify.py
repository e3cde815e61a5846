# verify.py
"""
Numerical checks of the amalgam-space results on (R+, *_alpha).

Each check returns a VerificationReport. Existential constants are measured
and checked for stability; closed-form bounds are asserted where one exists.
"""
from __future__ import annotations

import math
import sys
import time
from itertools import combinations_with_replacement
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from hypergroup_amalgam.constants.constants import (
    FINITE_P_VALUES,
    THRESHOLD_TAIL_FIT_WINDOW,
    THRESHOLD_TAIL_N_MAX,
)
from hypergroup_amalgam.log.logger_singleton import getLogger
from hypergroup_amalgam.models.Alpha import Alpha
from hypergroup_amalgam.models.ExponentPair import ExponentPair, TailPolicy
from hypergroup_amalgam.models.FiniteHypergroup import FiniteHypergroup
from hypergroup_amalgam.models.RunConfig import RunConfig
from hypergroup_amalgam.models.TestFunction import DualFunction, TestFunction
from hypergroup_amalgam.models.VerificationReport import ReportBuilder, ReportDetail, VerificationReport
from hypergroup_amalgam.services.amalgam import (
    continuous_norm_p_inf,
    default_y_grid,
    discrete_norm,
    embedding_checks,
)
from hypergroup_amalgam.services.bessel_kingman import (
    convolve,
    default_catalog,
    haar_interval_mass,
    indicator,
    point_convolution,
    translate,
)
from hypergroup_amalgam.services.finite_hypergroup import (
    builtin_catalog,
    discrete_translate,
    haar_weights,
    norm_equalities,
)
from hypergroup_amalgam.services.fourier import (
    asymptotic_envelope_check,
    envelope_threshold,
    fourier_transform,
    indicator_hat_dual,
    plancherel_check,
)
from hypergroup_amalgam.services.quadrature import integrate_adaptive
from hypergroup_amalgam.services.utils import run_parallel

AlphaLike = Union[Alpha, float]

# --- Tunables ---
BOUND_SLACK = 1e-9
EQUIVALENCE_STABILITY = 0.10
EQUIVALENCE_P_VALUES = (1.0, 2.0)
FINE_Y_STEP = 0.125
COARSE_Y_STEP = 0.25
STEPPING_STONES = 8

TRANSLATION_STABILITY = 0.15
TRANSLATION_SAMPLES_PER_UNIT = 64
EXCEPTIONAL_INDEX_LIMIT = 7
DEFAULT_TRANSLATION_N_MAX = 12
GENERIC_ECHO = (6, 3.5)

YOUNG_EXACTNESS = 1e-6
YOUNG_CATALOG = ("unit-indicator", "bump")

HAUSDORFF_YOUNG_CATALOG = ("unit-indicator", "bump")
EXTREME_PAIRS = ((1.0, 1.0), (1.0, 2.0), (2.0, 1.0), (2.0, 2.0))
PLANCHEREL_TOLERANCE = 1e-3
PLANCHEREL_SMOOTH_TOLERANCE = 1e-6
THRESHOLD_OFFSET = 0.05
DUAL_TAIL = TailPolicy(n_max=60, fit_window=40)
THRESHOLD_TAIL = TailPolicy(n_max=THRESHOLD_TAIL_N_MAX, fit_window=THRESHOLD_TAIL_FIT_WINDOW)
ENVELOPE_LAMBDA_MAX = 1000.0
ENVELOPE_SAMPLES = 4000
ENVELOPE_STABILITY = 0.05

EMBEDDING_CATALOG = ("unit-indicator", "bump")
DEFAULT_EMBEDDING_PAIRS = (
    ((1.0, 1.0), (2.0, 1.0)),
    ((1.0, "inf"), (1.0, 1.0)),
    ((2.0, 2.0), ("inf", 2.0)),
    ((2.0, "inf"), (2.0, 2.0)),
)

FOURNIER_CATALOG = ("unit-indicator", "bump")
FOURNIER_TAIL = TailPolicy(n_max=80, fit_window=50)
FOURNIER_TAIL_RATIO = 1e-4
FOURNIER_LAMBDAS = (0.5, 1.5, 3.0)
FOURNIER_PRODUCT_TOLERANCE = 1e-6
POSITIVITY_SLACK = 1e-8

GN_TOLERANCE = 1e-7
GN_POINTS = 10
DEFAULT_GN_N_MAX = 6

FINITE_TOLERANCE = 1e-12
DEFAULT_FINITE_TRIALS = 100

KERNEL_TOLERANCE = 1e-8
KERNEL_XS = (0.3, 1.0, 2.7, 10.0)
KERNEL_YS = (0.3, 1.0, 2.7, 10.0)

Triple = Tuple[ExponentPair, ExponentPair, ExponentPair]


class ExponentIdentityError(ValueError):
    """Raised when a Young triple violates (1/p, 1/q) = (1/p1, 1/q1) + (1/p2, 1/q2) - (1, 1)."""
    pass


def _builder(name: str, alpha: Optional[float], tolerance: float, config: RunConfig) -> ReportBuilder:
    return ReportBuilder(name, alpha, tolerance, seed=config.seed, config_digest=config.digest())


def _ratio(num: float, den: float) -> Optional[float]:
    if den == 0.0:
        return None
    return num / den


# ------------------------- Norm equivalence -------------------------

def translation_window_bounds(alpha: AlphaLike, y: float, p: float) -> float:
    """
    Upper bound for (integral |f|^p tau_y 1_[0,1] d omega)^(1/p) / ||f||_{p,inf}:
    1 + 2^r for y < 1, 1 + 2^r + 3^r for 1 <= y < 2 (r = (2 alpha + 1)/p), and
    3 C'^(1/p) with C' = C_Gamma 4^(alpha-1/2) 2^(alpha+1/2) 2^(2 alpha+1) beyond.
    """
    al = Alpha.of(alpha)
    if y < 0:
        raise ValueError(f"y must be >= 0, got {y}")
    r = al.haar_exponent / p
    if y < 1.0:
        return 1.0 + 2.0 ** r
    if y < 2.0:
        return 1.0 + 2.0 ** r + 3.0 ** r
    c_prime = al.c_gamma * 4.0 ** al.mu * 2.0 ** (al.value + 0.5) * 2.0 ** al.haar_exponent
    return 3.0 * c_prime ** (1.0 / p)


def equivalence_upper_constant(alpha: AlphaLike, p: float) -> float:
    return max(translation_window_bounds(alpha, y, p) for y in (0.0, 1.0, 2.0))


def stepping_stone_bound(alpha: AlphaLike, n: int) -> float:
    """C_Gamma 3^(alpha+1/2) / (8 (alpha+1/2)) * n^(2 alpha-1) / ((n+1)(n+1/2))^(2 alpha)."""
    al = Alpha.of(alpha)
    a = al.value
    constant = al.c_gamma * 3.0 ** (a + 0.5) / (8.0 * (a + 0.5))
    return constant * n ** (2.0 * a - 1.0) / ((n + 1.0) * (n + 0.5)) ** (2.0 * a)


def check_norm_equivalence(
    alpha: AlphaLike,
    catalog: Optional[Sequence[TestFunction]] = None,
    p_list: Sequence[float] = EQUIVALENCE_P_VALUES,
    config: Optional[RunConfig] = None,
) -> VerificationReport:
    al = Alpha.of(alpha)
    config = config or RunConfig()
    spec = config.quad
    catalog = list(catalog) if catalog is not None else default_catalog()
    builder = _builder("norm_equivalence", al.value, 0.0, config)

    for p in p_list:
        upper = equivalence_upper_constant(al, p)
        builder.constant(f"C''(p={p:g})", upper)
        ratios: Dict[str, List[float]] = {"coarse_low": [], "coarse_high": [], "fine_low": [], "fine_high": []}
        for f in catalog:
            if not f.is_compact:
                raise ValueError(f"norm equivalence needs compact support; {f.label} has none")
            disc = discrete_norm(al, f, ExponentPair.of(p, "inf"), spec=spec).value
            coarse = continuous_norm_p_inf(al, f, p, default_y_grid(f, COARSE_Y_STEP), spec)
            fine = continuous_norm_p_inf(al, f, p, default_y_grid(f, FINE_Y_STEP), spec)
            if disc == 0.0 and fine == 0.0:
                builder.add_flag(f"{f.label} p={p:g} both norms vanish", True, 0.0)
                continue
            ok = disc > 0.0 and coarse > 0.0 and fine > 0.0
            builder.add_flag(f"{f.label} p={p:g} norms positive", ok, fine)
            if not ok:
                continue
            ratios["coarse_low"].append(disc / coarse)
            ratios["coarse_high"].append(coarse / disc)
            ratios["fine_low"].append(disc / fine)
            ratios["fine_high"].append(fine / disc)
            builder.add_bound(f"{f.label} p={p:g} continuous <= C'' discrete", fine, upper * disc,
                              slack=BOUND_SLACK * upper * disc)
        if not ratios["fine_low"]:
            continue
        for side in ("low", "high"):
            coarse_r = max(ratios[f"coarse_{side}"])
            fine_r = max(ratios[f"fine_{side}"])
            builder.constant(f"R_{side}(p={p:g})", fine_r)
            builder.add_flag(f"R_{side} p={p:g} finite", math.isfinite(fine_r), fine_r)
            drift = abs(fine_r / coarse_r - 1.0)
            builder.add(f"R_{side} p={p:g} y-step {COARSE_Y_STEP:g} -> {FINE_Y_STEP:g}",
                        fine_r, coarse_r, EQUIVALENCE_STABILITY - drift)

    unit = indicator(0.0, 1.0, "unit-indicator")
    scaled = []
    for n in range(1, STEPPING_STONES + 1):
        value = point_convolution(al, n + 1.0, n + 0.5, unit, spec)
        bound = stepping_stone_bound(al, n)
        builder.add_bound(f"stepping stone n={n}", bound, value, slack=BOUND_SLACK * bound)
        scaled.append(value * n ** al.haar_exponent)
    builder.constant("min tau_{n+1/2}1(n+1) n^(2a+1)", min(scaled))
    builder.add_flag("stepping stones positive", min(scaled) > 0.0, min(scaled))
    return builder.build()


# ------------------------- Translation boundedness -------------------------

def _blocks_meeting(a: float, b: float, closed_right: bool) -> range:
    """Indices k >= 1 with I_k = [k-1, k) meeting [a, b) (or (a, b])."""
    first = max(1, math.floor(a) + 1)
    last = math.floor(b) + 1 if closed_right else math.ceil(b)
    return range(first, last + 1)


def exceptional_indices(n: int, y: float) -> List[int]:
    """k = 1 together with every k whose I_k meets y + I_n, I_n - y or y - I_n."""
    found = {1}
    found.update(_blocks_meeting(y + n - 1.0, y + n, False))
    found.update(_blocks_meeting(n - 1.0 - y, n - y, False))
    found.update(_blocks_meeting(y - n, y - n + 1.0, True))
    return sorted(found)


def translated_block_sups(alpha: AlphaLike, n: int, y: float, spec=None) -> Dict[int, float]:
    """Block sups of tau_y 1_{I_n}, sampled 64 times per unit over its support."""
    al = Alpha.of(alpha)
    shifted = translate(al, y, indicator(n - 1.0, float(n), f"1_I{n}"), spec)
    lo, hi = shifted.support_lo, shifted.support_hi
    count = int(math.ceil((hi - lo) * TRANSLATION_SAMPLES_PER_UNIT))
    xs = lo + np.arange(count, dtype=float) / TRANSLATION_SAMPLES_PER_UNIT
    xs = xs[xs < hi]
    values = np.abs(shifted(xs))
    sups: Dict[int, float] = {}
    for x, v in zip(xs, values):
        k = int(math.floor(x)) + 1
        sups[k] = max(sups.get(k, 0.0), float(v))
    return sups


def translation_ratio(alpha: AlphaLike, n: int, y: float, spec=None) -> Tuple[float, Dict[int, float]]:
    """||tau_y 1_{I_n}||_{inf,1} / omega_n."""
    al = Alpha.of(alpha)
    sups = translated_block_sups(al, n, y, spec)
    total = math.fsum(haar_interval_mass(al, k) * s for k, s in sorted(sups.items()))
    return total / haar_interval_mass(al, n), sups


def check_translation_bound(
    alpha: AlphaLike,
    n_max: int = DEFAULT_TRANSLATION_N_MAX,
    y_grid: Optional[Sequence[float]] = None,
    config: Optional[RunConfig] = None,
) -> VerificationReport:
    al = Alpha.of(alpha)
    config = config or RunConfig()
    spec = config.quad
    if n_max < 4:
        raise ValueError(f"n_max must be >= 4, got {n_max}")
    grid = list(y_grid) if y_grid is not None else [0.5 * i for i in range(4 * n_max + 1)]
    builder = _builder("translation_bound", al.value, 0.0, config)

    c_meas = 0.0
    worst_exceptional = 0
    for n in range(1, n_max + 1):
        for y in grid:
            ratio, _ = translation_ratio(al, n, y, spec)
            c_meas = max(c_meas, ratio)
            if y == 0.0:
                builder.add_close(f"n={n} y=0 identity", ratio, 1.0, allowed=BOUND_SLACK)
            worst_exceptional = max(worst_exceptional, len(exceptional_indices(n, y)))
    builder.constant("C_meas", c_meas)
    builder.add_flag("C_meas finite", math.isfinite(c_meas), c_meas)
    builder.constant("max exceptional indices", float(worst_exceptional))
    builder.add_bound("exceptional index count", worst_exceptional, EXCEPTIONAL_INDEX_LIMIT)

    spot = 0.0
    for n in sorted({n_max + n_max // 2, 2 * n_max}):
        for y in (n - 0.5, float(n), 2.0 * n):
            ratio, _ = translation_ratio(al, n, y, spec)
            spot = max(spot, ratio)
    builder.constant("C_spot", spot)
    growth = spot / c_meas - 1.0 if c_meas > 0 else math.inf
    builder.add(f"n_max {n_max} -> {2 * n_max} growth", spot, c_meas, TRANSLATION_STABILITY - growth)

    n_echo, y_echo = GENERIC_ECHO
    _, sups = translation_ratio(al, n_echo, y_echo, spec)
    exceptional = set(exceptional_indices(n_echo, y_echo))
    generic = math.fsum(haar_interval_mass(al, k) * s for k, s in sorted(sups.items()) if k not in exceptional)
    builder.constant(f"generic sum n={n_echo} y={y_echo:g}", generic / haar_interval_mass(al, n_echo))
    builder.meta("generic_sum_pattern", "<= 4 C''")
    return builder.build()


# ------------------------- Young -------------------------

DEFAULT_YOUNG_TRIPLES: Tuple[Triple, ...] = (
    (ExponentPair.of(1, 1), ExponentPair.of(1, 1), ExponentPair.of(1, 1)),
    (ExponentPair.of(1, 1), ExponentPair.of("inf", "inf"), ExponentPair.of("inf", "inf")),
    (ExponentPair.of(1, 1), ExponentPair.of(2, 2), ExponentPair.of(2, 2)),
)


def check_exponent_identity(first: ExponentPair, second: ExponentPair, result: ExponentPair) -> None:
    (p1, q1), (p2, q2), (p, q) = first.reciprocals(), second.reciprocals(), result.reciprocals()
    if abs(p1 + p2 - 1.0 - p) > 1e-12 or abs(q1 + q2 - 1.0 - q) > 1e-12:
        raise ExponentIdentityError(f"{first} * {second} -> {result} violates the Young exponent identity")


def _is_diagonal(e: ExponentPair) -> bool:
    return e.p == e.q


def is_one_one(*pairs: ExponentPair) -> bool:
    return all(e.p == 1.0 and e.q == 1.0 for e in pairs)


def _nonnegative(f: TestFunction) -> bool:
    if not f.is_compact:
        return False
    xs = np.linspace(f.support_lo, f.support_hi, 1001)
    return bool(np.all(f(xs) >= 0.0))


def check_young(
    alpha: AlphaLike,
    catalog: Optional[Sequence[TestFunction]] = None,
    triples: Sequence[Triple] = DEFAULT_YOUNG_TRIPLES,
    config: Optional[RunConfig] = None,
) -> VerificationReport:
    """
    ||f * g||_{p,q} <= C ||f||_{p1,q1} ||g||_{p2,q2}. C <= 1 is asserted when all
    three pairs are diagonal (plain L^p), with equality at (1,1) for f, g >= 0.
    """
    al = Alpha.of(alpha)
    config = config or RunConfig()
    spec = config.quad
    for first, second, result in triples:
        check_exponent_identity(first, second, result)
    catalog = list(catalog) if catalog is not None else default_catalog(YOUNG_CATALOG)
    builder = _builder("young", al.value, 0.0, config)

    for f, g in combinations_with_replacement(catalog, 2):
        h = convolve(al, f, g, spec)
        both_nonnegative = _nonnegative(f) and _nonnegative(g)
        for first, second, result in triples:
            lhs = discrete_norm(al, h, result, spec=spec).value
            for left, right in ((f, g), (g, f)) if f is not g else ((f, g),):
                rhs = discrete_norm(al, left, first, spec=spec).value * discrete_norm(al, right, second, spec=spec).value
                label = f"C{first}*{second}->{result}"
                tag = f"{left.label} * {right.label} {first}*{second}->{result}"
                ratio = _ratio(lhs, rhs)
                if ratio is not None:
                    builder.max_constant(label, ratio)
                if all(_is_diagonal(e) for e in (first, second, result)):
                    if both_nonnegative and is_one_one(first, second, result):
                        builder.add_close(tag, lhs, rhs, allowed=YOUNG_EXACTNESS * rhs)
                    else:
                        builder.add_bound(tag, lhs, rhs, slack=YOUNG_EXACTNESS * rhs)
                else:
                    builder.add_flag(tag, math.isfinite(lhs) and math.isfinite(rhs), lhs)
    return builder.build()


# ------------------------- Hausdorff-Young -------------------------

def hausdorff_young_threshold(alpha: AlphaLike) -> float:
    """q0 = 2(alpha+1)/(alpha+3/2); the dual norm of 1^_{I_1} with p = inf is finite iff q > q0."""
    a = Alpha.of(alpha).value
    return 2.0 * (a + 1.0) / (a + 1.5)


def check_hausdorff_young(
    alpha: AlphaLike,
    catalog: Optional[Sequence[TestFunction]] = None,
    config: Optional[RunConfig] = None,
) -> VerificationReport:
    al = Alpha.of(alpha)
    config = config or RunConfig()
    spec = config.quad
    catalog = list(catalog) if catalog is not None else default_catalog(HAUSDORFF_YOUNG_CATALOG)
    builder = _builder("hausdorff_young", al.value, 0.0, config)

    for f in catalog:
        if not f.is_compact:
            raise ValueError(f"Hausdorff-Young needs compact support; {f.label} has none")
        f_hat = fourier_transform(al, f, spec)
        for p, q in EXTREME_PAIRS:
            primal_pair = ExponentPair.of(p, q)
            dual_pair = primal_pair.dual()
            primal = discrete_norm(al, f, primal_pair, spec=spec).value
            dual = discrete_norm(al, f_hat, dual_pair, DUAL_TAIL, spec)
            tag = f"{f.label} {primal_pair} -> hat {dual_pair}"
            if math.isfinite(primal):
                builder.add_flag(f"{tag} finite", not dual.diverges and math.isfinite(dual.value), dual.value)
            ratio = _ratio(dual.value, primal)
            if ratio is not None:
                builder.max_constant(f"C{primal_pair}", ratio)

        lhs, rhs = plancherel_check(al, f, config.lambda_cut, spec)
        allowed = PLANCHEREL_SMOOTH_TOLERANCE if f.smoothness_hint == "smooth" else PLANCHEREL_TOLERANCE
        builder.add_close(f"{f.label} Plancherel lambda_cut={config.lambda_cut:g}", lhs, rhs, allowed=allowed)

    q0 = hausdorff_young_threshold(al)
    builder.constant("q0", q0)
    unit_hat = indicator_hat_dual(al)
    at_two = discrete_norm(al, unit_hat, ExponentPair.of("inf", 2), THRESHOLD_TAIL, spec)
    builder.add_flag("||1^||_{inf,2} finite", not at_two.diverges, at_two.value)
    builder.constant("tail slope", at_two.slope)
    below = discrete_norm(al, unit_hat, ExponentPair.of("inf", q0 - THRESHOLD_OFFSET), THRESHOLD_TAIL, spec)
    above = discrete_norm(al, unit_hat, ExponentPair.of("inf", q0 + THRESHOLD_OFFSET), THRESHOLD_TAIL, spec)
    builder.add_flag(f"q={q0 - THRESHOLD_OFFSET:.4g} diverges", below.diverges, below.tail_exponent)
    builder.add_flag(f"q={q0 + THRESHOLD_OFFSET:.4g} converges", not above.diverges, above.tail_exponent)

    n_alpha = envelope_threshold(al)
    c_star, violation = asymptotic_envelope_check(al, n_alpha, ENVELOPE_LAMBDA_MAX, ENVELOPE_SAMPLES)
    c_wide, _ = asymptotic_envelope_check(al, n_alpha, 2.0 * ENVELOPE_LAMBDA_MAX, ENVELOPE_SAMPLES)
    builder.constant("C*", c_star)
    builder.add_bound(f"|1^| lambda^(alpha+3/2) <= 1.05 C* on [{n_alpha:g}, {ENVELOPE_LAMBDA_MAX:g}]", violation, 0.0)
    builder.add_close(
        f"C* stable when lambda_max doubles to {2.0 * ENVELOPE_LAMBDA_MAX:g}",
        c_wide, c_star, allowed=ENVELOPE_STABILITY * c_star,
    )
    return builder.build()


# ------------------------- Fournier -------------------------

def _squared(g_hat: DualFunction, al: Alpha) -> DualFunction:
    def _evaluate(lam):
        v = g_hat(lam)
        return v * v

    # cos^2(w lambda) = (1 + cos(2 w lambda)) / 2
    return DualFunction(
        evaluate=_evaluate,
        label=f"({g_hat.label})^2",
        smoothness_hint="oscillatory",
        decay_exponent_hint=2.0 * g_hat.decay_exponent_hint,
        oscillation_frequencies=(0.0,) + tuple(2.0 * w for w in g_hat.oscillation_frequencies),
    )


def check_fournier(
    alpha: AlphaLike,
    g_catalog: Optional[Sequence[TestFunction]] = None,
    config: Optional[RunConfig] = None,
) -> VerificationReport:
    """
    For f = g * g (so f^ = g^2 >= 0): local L^2 mass on [0, 1), ||f^||_{1,2}
    and ||f||_{2,inf} are all finite.
    """
    al = Alpha.of(alpha)
    config = config or RunConfig()
    spec = config.quad
    g_catalog = list(g_catalog) if g_catalog is not None else default_catalog(FOURNIER_CATALOG)
    builder = _builder("fournier", al.value, 0.0, config)
    builder.meta("neighborhood", "[0,1)")
    exponent = al.haar_exponent

    for g in g_catalog:
        f = convolve(al, g, g, spec)
        g_hat = fourier_transform(al, g, spec)
        f_hat = _squared(g_hat, al)

        hi = min(1.0, f.support_hi)
        local = 0.0
        if hi > 0.0:
            local, _ = integrate_adaptive(
                lambda x: f(x) ** 2 * x ** exponent, 0.0, hi, spec,
                [c for c in f.breakpoints if c < hi], label=f"local L2 of {f.label}",
            )
        dual = discrete_norm(al, f_hat, ExponentPair.of(1, 2), FOURNIER_TAIL, spec)
        block = discrete_norm(al, f, ExponentPair.of(2, "inf"), spec=spec).value

        builder.add_flag(f"{g.label} local L2 finite", math.isfinite(local), local)
        builder.add_flag(f"{g.label} ||f^||_(1,2) finite", not dual.diverges and math.isfinite(dual.value), dual.value)
        builder.add_flag(f"{g.label} ||f||_(2,inf) finite", math.isfinite(block), block)
        head = dual.value ** 2 - dual.tail_estimate
        if head > 0.0:
            builder.add_bound(f"{g.label} dual tail vs head", dual.tail_estimate, FOURNIER_TAIL_RATIO * head)
        if local > 0.0:
            builder.max_constant("(2)/(1)", dual.value / math.sqrt(local))
            builder.max_constant("(3)/(1)", block / math.sqrt(local))

        direct = fourier_transform(al, f, spec)
        for lam in FOURNIER_LAMBDAS:
            value = float(direct(lam))
            product = float(f_hat(lam))
            builder.add_bound(f"{g.label} f^({lam:g}) >= 0", -value, POSITIVITY_SLACK)
            builder.add_close(f"{g.label} f^({lam:g}) = g^^2", value, product, allowed=FOURNIER_PRODUCT_TOLERANCE)
    return builder.build()


# ------------------------- g_n partition -------------------------

def g_n(alpha: AlphaLike, n: int, spec=None) -> Callable[[float], float]:
    """(1/omega_1) 1_{I_1} * 1_[n-2, n+1]; equal to 1 on I_n."""
    al = Alpha.of(alpha)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    h = convolve(al, indicator(0.0, 1.0, "unit-indicator"), indicator(max(0.0, n - 2.0), n + 1.0), spec)
    omega_1 = haar_interval_mass(al, 1)

    def _at(x: float) -> float:
        return float(h(x)) / omega_1

    return _at


def check_gn_partition(
    alpha: AlphaLike,
    n_max: int = DEFAULT_GN_N_MAX,
    config: Optional[RunConfig] = None,
) -> VerificationReport:
    al = Alpha.of(alpha)
    config = config or RunConfig()
    if n_max < 3:
        raise ValueError(f"n_max must be >= 3, got {n_max}")
    builder = _builder("gn_partition", al.value, GN_TOLERANCE, config)
    worst = 0.0
    for n in range(1, n_max + 1):
        gn = g_n(al, n, config.quad)
        for j in range(GN_POINTS):
            x = n - 1.0 + (j + 0.5) / GN_POINTS
            value = gn(x)
            worst = max(worst, abs(value - 1.0))
            builder.add(f"g_{n}({x:g})", value, 1.0, -abs(value - 1.0))
        outside = n + 2.5
        value = gn(outside)
        builder.add(f"g_{n}({outside:g}) outside support", value, 0.0, -abs(value))
    builder.constant("max |g_n - 1|", worst)
    return builder.build()


# ------------------------- Finite hypergroups -------------------------

def check_finite_equalities(
    catalog: Optional[Sequence[FiniteHypergroup]] = None,
    trials: int = DEFAULT_FINITE_TRIALS,
    config: Optional[RunConfig] = None,
) -> VerificationReport:
    """Window norms equal sup|f| and ||f||_p exactly on finite hypergroups."""
    config = config or RunConfig()
    catalog = list(catalog) if catalog is not None else builtin_catalog()
    builder = _builder("finite_equalities", None, FINITE_TOLERANCE, config)
    rng = np.random.default_rng(config.seed)
    worst = 0.0

    for H in catalog:
        weights = np.asarray(haar_weights(H))
        builder.meta(f"weights[{H.label}]", " ".join(f"{w:g}" for w in weights))
        for p in FINITE_P_VALUES:
            for t in range(trials):
                vec = rng.uniform(-1.0, 1.0, H.size)
                norms = norm_equalities(H, vec, p)
                d1 = abs(norms.cont_discrete_window - norms.sup_norm)
                d2 = abs(norms.cont_compact_window - norms.lp_norm)
                worst = max(worst, d1, d2)
                if d1 > FINITE_TOLERANCE or d2 > FINITE_TOLERANCE or t == 0:
                    builder.add(f"{H.label} p={p:g} trial {t} discrete", norms.cont_discrete_window, norms.sup_norm, -d1)
                    builder.add(f"{H.label} p={p:g} trial {t} compact", norms.cont_compact_window, norms.lp_norm, -d2)

            ones = norm_equalities(H, np.ones(H.size), p)
            expected = weights.sum() ** (1.0 / p)
            builder.add(f"{H.label} p={p:g} constant", ones.cont_compact_window, expected,
                        -abs(ones.cont_compact_window - expected))
            point = np.zeros(H.size)
            point[0] = 1.0
            at_zero = norm_equalities(H, point, p)
            builder.add(f"{H.label} p={p:g} 1_0", at_zero.cont_discrete_window, 1.0,
                        -abs(at_zero.cont_discrete_window - 1.0))

        vec = rng.uniform(-1.0, 1.0, H.size)
        mass = float(weights @ vec)
        for y in range(H.size):
            shifted = float(weights @ discrete_translate(H, y, vec))
            builder.add(f"{H.label} Haar invariance y={y}", shifted, mass, -abs(shifted - mass))
    builder.constant("max equality gap", worst)
    return builder.build()


# ------------------------- Kernel normalization -------------------------

def _one() -> TestFunction:
    return TestFunction(evaluate=np.ones_like, label="one", smoothness_hint="smooth")


def check_kernel_normalization(
    alpha: AlphaLike,
    xs: Sequence[float] = KERNEL_XS,
    ys: Sequence[float] = KERNEL_YS,
    config: Optional[RunConfig] = None,
) -> VerificationReport:
    """integral K(x, y, z) d omega(z) = 1 on the (x, y) grid."""
    al = Alpha.of(alpha)
    config = config or RunConfig()
    builder = _builder("kernel_normalization", al.value, KERNEL_TOLERANCE, config)
    one = _one()
    worst = 0.0
    for x in xs:
        for y in ys:
            mass = point_convolution(al, x, y, one, config.quad)
            worst = max(worst, abs(mass - 1.0))
            builder.add(f"x={x:g} y={y:g}", mass, 1.0, -abs(mass - 1.0))
    builder.constant("max |mass - 1|", worst)
    return builder.build()


# ------------------------- Embeddings -------------------------

def check_embeddings(
    alpha: AlphaLike,
    catalog: Optional[Sequence[TestFunction]] = None,
    pairs: Sequence[Tuple[tuple, tuple]] = DEFAULT_EMBEDDING_PAIRS,
    config: Optional[RunConfig] = None,
) -> VerificationReport:
    """Monotonicity of ||f||_{p,q} in p and the omega_1-weighted inclusion in q."""
    config = config or RunConfig()
    catalog = list(catalog) if catalog is not None else default_catalog(EMBEDDING_CATALOG)
    exponent_pairs = [(ExponentPair.of(*first), ExponentPair.of(*second)) for first, second in pairs]
    return embedding_checks(
        alpha, catalog, exponent_pairs, config.tail, config.quad,
        seed=config.seed, config_digest=config.digest(),
    )


# ------------------------- Suite runner -------------------------

ALPHA_CHECKS: Dict[str, Callable[..., VerificationReport]] = {
    "kernel": check_kernel_normalization,
    "norm-equivalence": check_norm_equivalence,
    "translation": check_translation_bound,
    "young": check_young,
    "hausdorff-young": check_hausdorff_young,
    "fournier": check_fournier,
    "gn": check_gn_partition,
    "embedding": check_embeddings,
}
SUITES = ("all",) + tuple(ALPHA_CHECKS) + ("finite",)


def suite_jobs(suite: str, alphas: Sequence[float]) -> List[Tuple[str, Optional[float]]]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite '{suite}'; known: {', '.join(SUITES)}")
    names = list(ALPHA_CHECKS) + ["finite"] if suite == "all" else [suite]
    jobs: List[Tuple[str, Optional[float]]] = []
    for name in names:
        if name == "finite":
            jobs.append((name, None))
        else:
            jobs.extend((name, float(a)) for a in alphas)
    return jobs


def recheck_refined(report: VerificationReport, rerun: Callable[[RunConfig], VerificationReport], config: RunConfig) -> VerificationReport:
    """
    Re-run a passing check with every quadrature tolerance halved and append
    one detail recording whether it still passes.
    """
    refined = rerun(config.model_copy(update={"quad": config.quad.refined()}))
    margin = 0.0 if refined.passed else -sys.float_info.max
    details = list(report.details) + [
        ReportDetail(input="passes with quadrature tolerances halved", lhs=None, rhs=None, margin=margin)
    ]
    payload = report.model_dump()
    payload["details"] = details
    payload["passed"] = all(d.margin >= -report.tolerance for d in details)
    payload["metadata"] = {**report.metadata, "refined_abs_tol": f"{config.quad.refined().abs_tol:.3g}"}
    return VerificationReport.model_validate(payload)


def run_suite(
    suite: str,
    config: Optional[RunConfig] = None,
    hypergroups: Optional[Sequence[FiniteHypergroup]] = None,
) -> Tuple[List[VerificationReport], List[Tuple[Tuple[str, Optional[float]], Exception]]]:
    """
    Run every (check, alpha) job of a suite in the worker pool.

    Returns (reports, errors) in job order; a job that raised contributes to
    errors instead of reports.
    """
    config = config or RunConfig()
    logger = getLogger()
    jobs = suite_jobs(suite, config.alpha_list)

    def _run(job: Tuple[str, Optional[float]]) -> VerificationReport:
        name, alpha = job
        start = time.perf_counter()
        if name == "finite":
            def rerun(c: RunConfig) -> VerificationReport:
                return check_finite_equalities(hypergroups, config=c)
        else:
            def rerun(c: RunConfig) -> VerificationReport:
                return ALPHA_CHECKS[name](alpha, config=c)
        report = rerun(config)
        if config.recheck_refined and report.passed:
            report = recheck_refined(report, rerun, config)
        status = "passed" if report.passed else "FAILED"
        logger.logMessage(f"[verify] {report.file_stem()} {status} in {time.perf_counter() - start:.1f}s")
        return report

    logger.logMessage(f"[verify] suite={suite} jobs={len(jobs)} digest={config.digest()[:12]}")
    return run_parallel(_run, jobs, max_workers=config.threads)

