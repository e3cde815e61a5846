# quadrature.py
"""
Definite integration for the hypergroup.

- integrate_adaptive: QUADPACK adaptive Gauss-Kronrod (scipy.integrate.quad)
- integrate_endpoint_weighted: Gauss-Jacobi rules for integrands vanishing
  like (z-a)^mu (b-z)^mu, node count doubled until two rules agree
- integrate_oscillatory: segmentation at scaled zeros of J_nu
"""
from __future__ import annotations

import math
from functools import lru_cache
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

import numpy as np
from scipy import integrate, special

from hypergroup_amalgam.constants.constants import (
    JACOBI_MAX_NODES,
    JACOBI_START_NODES,
)
from hypergroup_amalgam.models.QuadSpec import QuadSpec
from hypergroup_amalgam.services.specfun import bessel_J_zeros

SEGMENT_RULE_NODES = 24

DEFAULT_SPEC = QuadSpec()


class NonConvergenceError(ArithmeticError):
    """Raised when an integral misses its tolerance within the allowed work."""

    def __init__(self, label: str, value: float, err: float, tolerance: float):
        super().__init__(
            f"integral '{label}' did not converge: estimate {value:.6g}, "
            f"error {err:.3g} > tolerance {tolerance:.3g}"
        )
        self.label = label
        self.value = value
        self.err = err
        self.tolerance = tolerance


def _interior(points: Iterable[float], a: float, b: float) -> List[float]:
    return sorted({float(c) for c in points if a < c < b})


def _as_scalar(f: Callable, vectorized: bool) -> Callable[[float], float]:
    if not vectorized:
        return f

    def _one(z: float) -> float:
        return float(np.asarray(f(np.array([z])), dtype=float).ravel()[0])

    return _one


def integrate_adaptive(
    f: Callable[[float], float],
    a: float,
    b: float,
    spec: Optional[QuadSpec] = None,
    breakpoints: Sequence[float] = (),
    label: str = "adaptive",
) -> Tuple[float, float]:
    """Integral of scalar f over [a, b]; returns (value, error estimate)."""
    spec = spec or DEFAULT_SPEC
    if b < a:
        raise ValueError(f"integrate_adaptive requires a <= b, got [{a}, {b}]")
    if a == b:
        return 0.0, 0.0
    points = _interior(breakpoints, a, b)
    result = integrate.quad(
        f,
        a,
        b,
        epsabs=spec.abs_tol,
        epsrel=spec.rel_tol,
        limit=spec.max_subdivisions,
        points=points or None,
        full_output=1,
    )
    value, err = float(result[0]), float(result[1])
    tolerance = spec.tolerance(value)
    if not math.isfinite(value):
        raise NonConvergenceError(label, value, err, tolerance)
    # a fourth element is QUADPACK's warning message
    if len(result) > 3 and err > tolerance:
        raise NonConvergenceError(label, value, err, tolerance)
    return value, err


@lru_cache(maxsize=512)
def _jacobi_rule(n: int, right_exp: float, left_exp: float) -> Tuple[np.ndarray, np.ndarray]:
    # weight (1-t)^right_exp (1+t)^left_exp on [-1, 1]
    t, w = special.roots_jacobi(n, right_exp, left_exp)
    t.setflags(write=False)
    w.setflags(write=False)
    return t, w


def _jacobi_piece(
    h: Callable[[np.ndarray], np.ndarray],
    lo: float,
    hi: float,
    left_exp: float,
    right_exp: float,
    abs_tol: float,
    rel_tol: float,
    label: str,
) -> float:
    """Integral of h(z) (z-lo)^left_exp (hi-z)^right_exp over [lo, hi]."""
    half = 0.5 * (hi - lo)
    scale = half ** (1.0 + left_exp + right_exp)
    prev = None
    value = diff = math.inf
    n = JACOBI_START_NODES
    while n <= JACOBI_MAX_NODES:
        t, w = _jacobi_rule(n, right_exp, left_exp)
        z = lo + half * (1.0 + t)
        value = scale * float(np.dot(w, np.asarray(h(z), dtype=float)))
        if prev is not None:
            diff = abs(value - prev)
            if diff <= max(abs_tol, rel_tol * abs(value)):
                return value
        prev = value
        n *= 2
    raise NonConvergenceError(label, value, diff, max(abs_tol, rel_tol * abs(value)))


def integrate_endpoint_weighted(
    g: Callable[[np.ndarray], np.ndarray],
    a: float,
    b: float,
    mu: float,
    spec: Optional[QuadSpec] = None,
    breakpoints: Sequence[float] = (),
    left_mu: Optional[float] = None,
    right_mu: Optional[float] = None,
    label: str = "endpoint-weighted",
) -> float:
    """
    Integral of g(z) (z-a)^left_mu (b-z)^right_mu over [a, b], both exponents
    defaulting to mu. g must accept numpy arrays.

    The interval is split at `breakpoints`; the first and last pieces carry
    the singular weights through Gauss-Jacobi nodes, interior pieces get the
    weights multiplied in. With both exponents zero the pieces use
    Gauss-Legendre nodes and fall back to integrate_adaptive when the node
    doubling does not settle.
    """
    spec = spec or DEFAULT_SPEC
    lm = mu if left_mu is None else left_mu
    rm = mu if right_mu is None else right_mu
    if mu < 0 or lm < 0 or rm < 0:
        raise ValueError(f"endpoint exponents must be >= 0, got ({lm}, {rm})")
    if b < a:
        raise ValueError(f"integrate_endpoint_weighted requires a <= b, got [{a}, {b}]")
    if a == b:
        return 0.0
    cuts = [a] + _interior(breakpoints, a, b) + [b]
    pieces = len(cuts) - 1
    if lm == 0.0 and rm == 0.0:
        try:
            return math.fsum(
                _jacobi_piece(g, s0, s1, 0.0, 0.0, spec.abs_tol / pieces, spec.rel_tol, label)
                for s0, s1 in zip(cuts[:-1], cuts[1:])
            )
        except NonConvergenceError:
            value, _ = integrate_adaptive(_as_scalar(g, True), a, b, spec, breakpoints, label)
            return value

    abs_tol = spec.abs_tol / pieces
    total = 0.0
    for s0, s1 in zip(cuts[:-1], cuts[1:]):
        at_left = s0 == a
        at_right = s1 == b
        le = lm if at_left else 0.0
        re = rm if at_right else 0.0

        def h(z, at_left=at_left, at_right=at_right):
            out = np.asarray(g(z), dtype=float)
            if not at_left and lm:
                out = out * (z - a) ** lm
            if not at_right and rm:
                out = out * (b - z) ** rm
            return out

        total += _jacobi_piece(h, s0, s1, le, re, abs_tol, spec.rel_tol, label)
    return total


@lru_cache(maxsize=16)
def _legendre_rule(n: int) -> Tuple[np.ndarray, np.ndarray]:
    t, w = special.roots_legendre(n)
    t.setflags(write=False)
    w.setflags(write=False)
    return t, w


def _batch_segments(f, edges: np.ndarray, n: int) -> np.ndarray:
    t, w = _legendre_rule(n)
    lo, hi = edges[:-1], edges[1:]
    half = 0.5 * (hi - lo)
    z = lo[:, None] + half[:, None] * (1.0 + t[None, :])
    vals = np.asarray(f(z.ravel()), dtype=float).reshape(z.shape)
    return half * (vals @ w)


def oscillation_edges(lam: float, nu: float, a: float, b: float, breakpoints: Sequence[float] = ()) -> np.ndarray:
    """a, the points z_k/lam of J_nu zeros inside (a, b), the breakpoints, and b."""
    count = int(lam * b / math.pi) + 4
    zeros = bessel_J_zeros(nu, count)
    while zeros[-1] / lam < b:
        count *= 2
        zeros = bessel_J_zeros(nu, count)
    scaled = [z / lam for z in zeros]
    return np.array([a] + _interior(list(scaled) + list(breakpoints), a, b) + [b], dtype=float)


def integrate_oscillatory(
    f: Callable,
    lam: float,
    nu: float,
    a: float,
    b: float,
    spec: Optional[QuadSpec] = None,
    breakpoints: Sequence[float] = (),
    vectorized: bool = False,
    label: str = "oscillatory",
) -> float:
    """
    Integral over [a, b] of the full integrand f, whose oscillation follows
    J_nu(lam x). Segments between consecutive zeros are integrated separately
    and summed in ascending order of magnitude.

    With vectorized f every segment is first tried with a Gauss-Legendre pair
    in one array evaluation; segments where the pair disagrees fall back to
    integrate_adaptive.
    """
    spec = spec or DEFAULT_SPEC
    if lam <= 0:
        raise ValueError(f"lambda must be positive, got {lam}")
    if b < a:
        raise ValueError(f"integrate_oscillatory requires a <= b, got [{a}, {b}]")
    if a == b:
        return 0.0
    edges = oscillation_edges(lam, nu, a, b, breakpoints)
    segments = len(edges) - 1
    seg_spec = QuadSpec(
        abs_tol=max(spec.abs_tol / segments, 1e-15),
        rel_tol=spec.rel_tol,
        max_subdivisions=spec.max_subdivisions,
    )
    scalar_f = _as_scalar(f, vectorized)

    if vectorized:
        coarse = _batch_segments(f, edges, SEGMENT_RULE_NODES)
        fine = _batch_segments(f, edges, 2 * SEGMENT_RULE_NODES)
        parts = fine.copy()
        tol = np.maximum(seg_spec.abs_tol, seg_spec.rel_tol * np.abs(fine))
        for i in np.flatnonzero(np.abs(fine - coarse) > tol):
            parts[i], _ = integrate_adaptive(scalar_f, edges[i], edges[i + 1], seg_spec, label=f"{label}[{i}]")
        values = [float(v) for v in parts]
    else:
        values = [
            integrate_adaptive(scalar_f, edges[i], edges[i + 1], seg_spec, label=f"{label}[{i}]")[0]
            for i in range(segments)
        ]
    values.sort(key=abs)
    return math.fsum(values)
