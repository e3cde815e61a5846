import math

import numpy as np
import pytest

from hypergroup_amalgam.models.QuadSpec import QuadSpec
from hypergroup_amalgam.models.TestFunction import DualFunction, TestFunction
from hypergroup_amalgam.services.bessel_kingman import convolve, zero_function
from hypergroup_amalgam.services.fourier import (
    TailDominatesError,
    asymptotic_envelope_check,
    bump_hat_closed_form,
    envelope_threshold,
    fourier_transform,
    indicator_hat_closed_form,
    indicator_hat_dual,
    inverse_transform,
    plancherel_check,
    plancherel_constant,
    transform_decay_exponent,
)

from tests.conftest import DEFAULT_ALPHAS


@pytest.mark.parametrize("lam", [0.3, 1.0, 4.0, 17.5, 120.0])
def test_indicator_hat_at_half_is_elementary(lam):
    expected = (math.sin(lam) - lam * math.cos(lam)) / lam ** 3
    assert indicator_hat_closed_form(0.5, lam) == pytest.approx(expected, abs=1e-10)


@pytest.mark.parametrize("alpha", DEFAULT_ALPHAS)
def test_indicator_hat_at_origin(alpha):
    assert indicator_hat_closed_form(alpha, 0.0) == pytest.approx(1.0 / (2.0 * alpha + 2.0), rel=1e-14)
    assert indicator_hat_closed_form(alpha, 1e-4) == pytest.approx(1.0 / (2.0 * alpha + 2.0), rel=1e-7)


def test_closed_form_rejects_negative_lambda():
    with pytest.raises(ValueError):
        indicator_hat_closed_form(0.5, np.array([1.0, -1.0]))


def test_scaled_indicator_hat():
    g = indicator_hat_dual(0.5, radius=2.0)
    assert g(1.0) == pytest.approx(8.0 * indicator_hat_closed_form(0.5, 2.0), rel=1e-14)
    assert g.decay_exponent_hint == -2.0
    assert g.oscillation_frequencies == (2.0,)


@pytest.mark.slow
@pytest.mark.parametrize("alpha", DEFAULT_ALPHAS)
def test_numerical_transform_matches_closed_form(alpha, unit):
    f_hat = fourier_transform(alpha, unit)
    lams = np.array([0.0, 0.5, 2.0, 7.0, 25.0, 80.0])
    assert f_hat(lams) == pytest.approx(indicator_hat_closed_form(alpha, lams), abs=1e-8)


def test_numerical_transform_at_half(unit):
    f_hat = fourier_transform(0.5, unit)
    for lam in (0.0, 3.0, 40.0):
        assert f_hat(lam) == pytest.approx(indicator_hat_closed_form(0.5, lam), abs=1e-8)


def test_bump_transform(smooth_bump):
    f_hat = fourier_transform(1.0, smooth_bump)
    for lam in (0.0, 1.0, 9.0, 30.0):
        assert f_hat(lam) == pytest.approx(bump_hat_closed_form(1.0, lam), abs=1e-9)
    assert bump_hat_closed_form(1.0, 0.0) == pytest.approx(1.0 / 24.0)


def test_transform_needs_compact_support():
    with pytest.raises(ValueError):
        fourier_transform(0.5, TestFunction(evaluate=np.exp, label="exp"))


@pytest.mark.parametrize("alpha", [0.5, 1.5])
def test_envelope_constant_is_stable(alpha):
    n_alpha = envelope_threshold(alpha)
    short, violation_short = asymptotic_envelope_check(alpha, n_alpha, 1000.0, 4000)
    long, violation_long = asymptotic_envelope_check(alpha, n_alpha, 2000.0, 4000)
    assert long == pytest.approx(short, rel=0.05)
    assert violation_short <= 0.0
    assert violation_long <= 0.0


def test_envelope_threshold_and_domain():
    assert envelope_threshold(0.5) == 15.0
    with pytest.raises(ValueError):
        asymptotic_envelope_check(0.5, 5.0, 100.0, 100)
    with pytest.raises(ValueError):
        asymptotic_envelope_check(0.5, 20.0, 10.0, 100)


def test_plancherel_constant_at_half():
    assert plancherel_constant(0.5) == pytest.approx(2.0 / math.pi, rel=1e-14)


def bump_hat(alpha):
    return DualFunction(
        evaluate=lambda lam: bump_hat_closed_form(alpha, lam),
        label="hat[bump]",
        decay_exponent_hint=-(alpha + 3.5),
        oscillation_frequencies=(1.0,),
    )


@pytest.mark.slow
def test_inverse_recovers_bump():
    spec = QuadSpec(abs_tol=1e-6, rel_tol=1e-8)
    recovered = inverse_transform(0.5, bump_hat(0.5), 400.0, spec)
    for x in (0.3, 0.6):
        assert recovered(x) == pytest.approx((1.0 - x * x) ** 2, abs=1e-4)


def test_inverse_tail_dominates_for_slow_decay():
    g = indicator_hat_dual(0.5)
    inverse = inverse_transform(0.5, g, 100.0)
    with pytest.raises(TailDominatesError) as info:
        inverse(0.5)
    assert info.value.tail > info.value.limit


def test_inverse_rejects_too_slow_hint():
    g = DualFunction(evaluate=np.ones_like, label="flat", decay_exponent_hint=-1.0)
    with pytest.raises(ValueError):
        inverse_transform(0.5, g, 100.0)
    with pytest.raises(ValueError):
        inverse_transform(0.5, bump_hat(0.5), 0.0)


@pytest.mark.slow
def test_plancherel_for_bump(smooth_bump):
    lhs, rhs = plancherel_check(0.5, smooth_bump, 100.0)
    assert lhs == pytest.approx(rhs, abs=1e-6)


def test_plancherel_of_zero_function():
    assert plancherel_check(1.0, zero_function(), 50.0) == (0.0, 0.0)


def test_transform_carries_smoothness_of_f(unit, smooth_bump):
    bump_transform = fourier_transform(1.0, smooth_bump)
    assert bump_transform.decay_exponent_hint == pytest.approx(-4.5)
    assert bump_transform.oscillation_frequencies == (1.0,)
    assert fourier_transform(0.5, unit).decay_exponent_hint == pytest.approx(-2.0)
    assert transform_decay_exponent(0.5, TestFunction(evaluate=np.ones_like, support_hi=1.0)) == -2.0


def test_tail_bound_follows_decay_and_beat():
    spec = QuadSpec(abs_tol=2e-3, rel_tol=1e-6)
    inverse = inverse_transform(0.5, indicator_hat_dual(0.5), 400.0, spec)
    for x in (0.25, 0.5, 0.75, 2.0):
        assert inverse.tail_bound(x) < 2e-2
    # the jump of 1_[0,1) at x = 1 is not recoverable from a truncated integral
    assert inverse.tail_bound(1.0) > 2e-2
    with pytest.raises(TailDominatesError):
        inverse(1.0)
    smooth = inverse_transform(1.0, bump_hat(1.0), 400.0, QuadSpec(abs_tol=1e-6, rel_tol=1e-8))
    assert smooth.tail_bound(0.1) < 1e-5


@pytest.mark.slow
def test_inverse_recovers_indicator_away_from_the_jump(unit):
    spec = QuadSpec(abs_tol=2e-3, rel_tol=1e-6)
    recovered = inverse_transform(0.5, fourier_transform(0.5, unit), 400.0, spec)
    for x in (0.25, 0.5, 0.75):
        assert recovered(x) == pytest.approx(1.0, abs=2e-2)
    assert recovered(2.0) == pytest.approx(0.0, abs=2e-2)


@pytest.mark.slow
def test_inverse_recovers_bump_at_ten_points(smooth_bump):
    spec = QuadSpec(abs_tol=1e-6, rel_tol=1e-8)
    recovered = inverse_transform(1.0, fourier_transform(1.0, smooth_bump), 400.0, spec)
    xs = np.linspace(0.1, 0.9, 10)
    assert recovered(xs) == pytest.approx((1.0 - xs * xs) ** 2, abs=1e-5)


def test_transform_is_linear(unit, smooth_bump):
    combo = TestFunction(
        evaluate=lambda x: 2.0 * unit(x) - 3.0 * smooth_bump(x),
        support_hi=1.0,
        label="2*unit-3*bump",
    )
    combo_hat = fourier_transform(0.75, combo)
    unit_hat = fourier_transform(0.75, unit)
    for lam in (0.5, 3.0, 12.0, 45.0):
        expected = 2.0 * unit_hat(lam) - 3.0 * bump_hat_closed_form(0.75, lam)
        assert combo_hat(lam) == pytest.approx(expected, abs=1e-9)


@pytest.mark.parametrize("alpha", [0.5, 2.5])
def test_transform_is_continuous_at_origin(alpha, unit):
    f_hat = fourier_transform(alpha, unit)
    assert f_hat(1e-6) == pytest.approx(f_hat(0.0), abs=1e-10)
    assert f_hat(0.0) == pytest.approx(1.0 / (2.0 * alpha + 2.0), abs=1e-10)


@pytest.mark.slow
def test_self_convolution_has_nonnegative_transform(smooth_bump):
    h_hat = fourier_transform(1.0, convolve(1.0, smooth_bump, smooth_bump))
    for lam in (0.0, 1.5, 4.0, 9.0):
        value = h_hat(lam)
        assert value >= -1e-8
        assert value == pytest.approx(bump_hat_closed_form(1.0, lam) ** 2, abs=1e-7)


@pytest.mark.slow
def test_plancherel_for_indicator(unit):
    lhs, rhs = plancherel_check(0.5, unit, 400.0)
    assert lhs == pytest.approx(1.0 / 3.0, abs=1e-10)
    assert rhs == pytest.approx(lhs, abs=1e-3)
