import math

import numpy as np
import pytest
from scipy import special

from hypergroup_amalgam.models.QuadSpec import QuadSpec
from hypergroup_amalgam.services.quadrature import (
    NonConvergenceError,
    integrate_adaptive,
    integrate_endpoint_weighted,
    integrate_oscillatory,
    oscillation_edges,
)
from hypergroup_amalgam.services.specfun import bessel_j_norm


def test_adaptive_sine():
    value, err = integrate_adaptive(math.sin, 0.0, math.pi)
    assert value == pytest.approx(2.0, abs=1e-12)
    assert err < 1e-10


def test_adaptive_empty_interval():
    assert integrate_adaptive(math.exp, 1.0, 1.0) == (0.0, 0.0)
    with pytest.raises(ValueError):
        integrate_adaptive(math.exp, 1.0, 0.0)


def test_adaptive_breakpoints_for_jumps():
    def step(x):
        return 1.0 if x < 0.3 else 2.0

    value, _ = integrate_adaptive(step, 0.0, 1.0, breakpoints=[0.3, 5.0])
    assert value == pytest.approx(0.3 + 1.4, abs=1e-12)


def test_non_convergence_names_the_integral():
    spec = QuadSpec(max_subdivisions=1)
    with pytest.raises(NonConvergenceError, match="wiggle"):
        integrate_adaptive(lambda x: math.sin(200.0 * x) * math.exp(x), 0.0, 10.0, spec, label="wiggle")


def test_endpoint_weighted_beta_integral():
    value = integrate_endpoint_weighted(np.ones_like, 0.0, 1.0, 0.5)
    assert value == pytest.approx(math.pi / 8.0, abs=1e-12)


def test_endpoint_weighted_split_pieces():
    value = integrate_endpoint_weighted(np.ones_like, 0.0, 1.0, 0.5, breakpoints=[0.3, 0.7])
    assert value == pytest.approx(math.pi / 8.0, abs=1e-11)


def test_endpoint_weighted_one_sided():
    value = integrate_endpoint_weighted(np.ones_like, 0.0, 1.0, 0.5, left_mu=2.0, right_mu=0.0)
    assert value == pytest.approx(1.0 / 3.0, abs=1e-12)


def test_endpoint_weighted_without_weights():
    value = integrate_endpoint_weighted(lambda z: z * z, 0.0, 1.0, 0.0)
    assert value == pytest.approx(1.0 / 3.0, abs=1e-12)


def test_endpoint_weighted_rejects_negative_exponent():
    with pytest.raises(ValueError):
        integrate_endpoint_weighted(np.ones_like, 0.0, 1.0, -0.5)


def test_oscillation_edges_cover_interval():
    edges = oscillation_edges(10.0, 0.0, 0.0, 5.0, breakpoints=[1.0])
    assert edges[0] == 0.0 and edges[-1] == 5.0
    assert np.all(np.diff(edges) > 0)
    assert 1.0 in edges
    interior = edges[1:-1]
    assert np.max(np.abs(special.j0(10.0 * interior[interior != 1.0]))) < 1e-10


@pytest.mark.parametrize("vectorized", [True, False])
def test_oscillatory_matches_closed_form(vectorized):
    lam, b = 10.0, 5.0

    def f(x):
        return x * special.j0(lam * x)

    value = integrate_oscillatory(f, lam, 0.0, 0.0, b, vectorized=vectorized)
    assert value == pytest.approx(b * special.j1(lam * b) / lam, abs=1e-10)


def test_oscillatory_validates_lambda():
    with pytest.raises(ValueError):
        integrate_oscillatory(np.sin, 0.0, 0.0, 0.0, 1.0)


@pytest.mark.parametrize("degree", range(13))
def test_adaptive_is_exact_on_polynomials(degree):
    value, _ = integrate_adaptive(lambda x: (1.0 + x) ** degree, 0.0, 1.0)
    assert value == pytest.approx((2.0 ** (degree + 1) - 1.0) / (degree + 1), rel=1e-13)


@pytest.mark.parametrize("mu", [0.5, 1.5, 2.0])
@pytest.mark.parametrize("degree", [0, 3, 7, 12])
def test_endpoint_weighted_is_exact_on_polynomials(mu, degree):
    value = integrate_endpoint_weighted(lambda z: z ** degree, 0.0, 1.0, mu)
    assert value == pytest.approx(special.beta(degree + mu + 1.0, mu + 1.0), rel=1e-12)


def test_endpoint_weighted_without_weights_matches_adaptive():
    def g(z):
        return np.exp(z) * np.cos(3.0 * z)

    value = integrate_endpoint_weighted(g, 0.0, 2.0, 0.0, breakpoints=[0.5, 1.2])
    expected, _ = integrate_adaptive(lambda z: math.exp(z) * math.cos(3.0 * z), 0.0, 2.0)
    assert value == pytest.approx(expected, abs=1e-12)


def test_endpoint_weighted_without_weights_falls_back_on_kinks():
    # the kink at 0.3 is not declared, so node doubling cannot settle
    value = integrate_endpoint_weighted(lambda z: np.abs(z - 0.3), 0.0, 1.0, 0.0)
    assert value == pytest.approx(0.045 + 0.245, abs=1e-9)


@pytest.mark.parametrize("lam", [0.5, 2.0, 5.0])
def test_oscillatory_agrees_with_adaptive_at_low_frequency(lam):
    def f(x):
        return x * x * math.exp(-x) * special.j0(lam * x)

    oscillatory = integrate_oscillatory(f, lam, 0.0, 0.0, 4.0)
    adaptive, _ = integrate_adaptive(f, 0.0, 4.0)
    assert oscillatory == pytest.approx(adaptive, abs=1e-9)


def test_oscillatory_sine():
    # zeros of J_1/2(50 x) are those of sin(50 x)
    value = integrate_oscillatory(lambda x: math.sin(50.0 * x), 50.0, 0.5, 0.0, 1.0)
    assert value == pytest.approx((1.0 - math.cos(50.0)) / 50.0, abs=1e-12)


def test_oscillatory_indicator_transform_at_half():
    lam = 50.0
    value = integrate_oscillatory(
        lambda x: x * x * bessel_j_norm(0.5, lam * x), lam, 0.5, 0.0, 1.0, vectorized=True
    )
    assert value == pytest.approx((math.sin(lam) - lam * math.cos(lam)) / lam ** 3, abs=1e-12)
