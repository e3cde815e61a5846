import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypergroup_amalgam.models.ExponentPair import ExponentPair
from hypergroup_amalgam.models.RunConfig import RunConfig
from hypergroup_amalgam.models.VerificationReport import ReportSchemaError, validate_report_payload
from hypergroup_amalgam.services.bessel_kingman import point_convolution
from hypergroup_amalgam.services.finite_hypergroup import cyclic_group, two_point
from hypergroup_amalgam.services.verify import (
    EXCEPTIONAL_INDEX_LIMIT,
    SUITES,
    ExponentIdentityError,
    check_embeddings,
    check_exponent_identity,
    check_finite_equalities,
    check_fournier,
    check_gn_partition,
    check_hausdorff_young,
    check_kernel_normalization,
    check_norm_equivalence,
    check_translation_bound,
    check_young,
    exceptional_indices,
    hausdorff_young_threshold,
    is_one_one,
    run_suite,
    stepping_stone_bound,
    suite_jobs,
    translation_ratio,
    translation_window_bounds,
)


def test_window_bounds_at_half():
    assert translation_window_bounds(0.5, 0.5, 1.0) == pytest.approx(5.0)
    assert translation_window_bounds(0.5, 1.0, 1.0) == pytest.approx(14.0)
    assert translation_window_bounds(0.5, 3.0, 1.0) == pytest.approx(12.0)
    assert translation_window_bounds(0.5, 3.0, 2.0) == pytest.approx(6.0)
    with pytest.raises(ValueError):
        translation_window_bounds(0.5, -1.0, 1.0)


@pytest.mark.parametrize("n", [1, 2, 5])
def test_stepping_stone_is_exact_at_half(unit, n):
    assert point_convolution(0.5, n + 1.0, n + 0.5, unit) == pytest.approx(stepping_stone_bound(0.5, n), rel=1e-10)


def test_stepping_stone_bound_value():
    assert stepping_stone_bound(0.5, 1) == pytest.approx(0.0625, rel=1e-14)


@given(n=st.integers(min_value=1, max_value=40), halves=st.integers(min_value=0, max_value=160))
@settings(max_examples=300, deadline=None)
def test_exceptional_index_count_is_bounded(n, halves):
    found = exceptional_indices(n, 0.5 * halves)
    assert 1 in found
    assert len(found) <= EXCEPTIONAL_INDEX_LIMIT


def test_translation_by_zero_keeps_block():
    ratio, sups = translation_ratio(1.0, 3, 0.0)
    assert ratio == pytest.approx(1.0)
    assert sups == {3: 1.0}


def test_exponent_identity():
    check_exponent_identity(ExponentPair.of(1, 1), ExponentPair.of(2, 2), ExponentPair.of(2, 2))
    with pytest.raises(ExponentIdentityError):
        check_exponent_identity(ExponentPair.of(1, 1), ExponentPair.of(1, 1), ExponentPair.of(2, 2))


def test_young_rejects_bad_triples_before_any_work(run_config):
    triples = [(ExponentPair.of(2, 2), ExponentPair.of(2, 2), ExponentPair.of(2, 2))]
    with pytest.raises(ExponentIdentityError):
        check_young(0.5, triples=triples, config=run_config)


def test_is_one_one():
    assert is_one_one(ExponentPair.of(1, 1), ExponentPair.of(1, 1))
    assert not is_one_one(ExponentPair.of(1, 1), ExponentPair.of(1, 2))


def test_hausdorff_young_threshold():
    assert hausdorff_young_threshold(0.5) == pytest.approx(1.5)
    assert hausdorff_young_threshold(1.5) == pytest.approx(5.0 / 3.0)


def test_kernel_normalization_report(run_config):
    report = check_kernel_normalization(0.75, config=run_config)
    assert report.passed
    assert report.check_name == "kernel_normalization"
    assert len(report.details) == 16
    assert report.measured_constants["max |mass - 1|"] <= 1e-8
    inputs = [d.input for d in report.details]
    assert "x=0.3 y=2.7" in inputs
    assert "x=10 y=10" in inputs


def test_finite_equalities_report(run_config):
    report = check_finite_equalities(config=run_config)
    assert report.passed
    assert report.alpha is None
    assert report.metadata["weights[two-point(a=0.25)]"] == "1 4"
    assert report.measured_constants["max equality gap"] <= 1e-12


def test_finite_report_body_is_deterministic(run_config):
    catalog = [cyclic_group(3), two_point(0.5)]
    first = check_finite_equalities(catalog, trials=10, config=run_config)
    second = check_finite_equalities(catalog, trials=10, config=run_config)
    assert first.body_json() == second.body_json()
    other = check_finite_equalities(catalog, trials=10, config=RunConfig(seed=1))
    assert other.body_json() != first.body_json()


def test_gn_partition(run_config):
    report = check_gn_partition(0.5, n_max=3, config=run_config)
    assert report.passed
    assert report.measured_constants["max |g_n - 1|"] < 1e-7
    with pytest.raises(ValueError):
        check_gn_partition(0.5, n_max=2, config=run_config)


def test_suite_jobs():
    assert suite_jobs("finite", [0.5, 1.0]) == [("finite", None)]
    assert suite_jobs("young", [0.5, 1.0]) == [("young", 0.5), ("young", 1.0)]
    jobs = suite_jobs("all", [0.5])
    assert jobs[-1] == ("finite", None)
    assert len(jobs) == len(SUITES) - 1
    with pytest.raises(ValueError):
        suite_jobs("nope", [0.5])


def test_run_suite_collects_reports(tmp_path):
    config = RunConfig(alpha_list=[0.5, 2.5], output_dir=tmp_path, threads=2)
    reports, errors = run_suite("kernel", config)
    assert errors == []
    assert [r.alpha for r in reports] == [0.5, 2.5]
    assert all(r.config_digest == config.digest() for r in reports)


@pytest.mark.slow
def test_young_one_one_is_exact_at_half(unit, run_config):
    triples = [(ExponentPair.of(1, 1), ExponentPair.of(1, 1), ExponentPair.of(1, 1))]
    report = check_young(0.5, catalog=[unit], triples=triples, config=run_config)
    assert report.passed
    assert report.details[0].lhs == pytest.approx(1.0 / 9.0, abs=1e-8)
    assert report.measured_constants["C(1,1)*(1,1)->(1,1)"] == pytest.approx(1.0, abs=1e-6)


@pytest.mark.slow
@pytest.mark.parametrize("alpha", [0.5, 1.5])
def test_young_default_catalog(alpha, run_config):
    assert check_young(alpha, config=run_config).passed


@pytest.mark.slow
@pytest.mark.parametrize("alpha", [0.5, 2.5])
def test_norm_equivalence(alpha, run_config):
    report = check_norm_equivalence(alpha, config=run_config)
    assert report.passed
    assert math.isfinite(report.measured_constants["R_high(p=1)"])


@pytest.mark.slow
def test_translation_bound(run_config):
    report = check_translation_bound(0.5, n_max=4, config=run_config)
    # a small n_max only exercises the identity, finiteness and counting details
    assert all("growth" in d.input for d in report.failures())
    assert report.measured_constants["max exceptional indices"] <= EXCEPTIONAL_INDEX_LIMIT
    assert math.isfinite(report.measured_constants["C_meas"])


@pytest.mark.slow
def test_hausdorff_young(run_config):
    report = check_hausdorff_young(0.5, config=run_config)
    assert report.passed
    assert report.measured_constants["q0"] == pytest.approx(1.5)


@pytest.mark.slow
def test_fournier(run_config):
    report = check_fournier(1.0, config=run_config)
    assert report.passed
    assert report.metadata["neighborhood"] == "[0,1)"


def test_suite_reports_match_the_schema(tmp_path):
    reports, errors = run_suite("kernel", RunConfig(alpha_list=[0.5], output_dir=tmp_path, threads=1))
    assert errors == []
    payload = reports[0].validated_payload()
    validate_report_payload(payload)
    payload["details"][0]["margin"] = "large"
    with pytest.raises(ReportSchemaError, match="details/0/margin"):
        validate_report_payload(payload)
    del payload["seed"]
    with pytest.raises(ReportSchemaError):
        validate_report_payload(payload)


def test_refined_recheck_appends_a_detail(tmp_path):
    config = RunConfig(alpha_list=[1.0], output_dir=tmp_path, threads=1, recheck_refined=True)
    reports, errors = run_suite("kernel", config)
    assert errors == []
    report = reports[0]
    assert report.passed
    assert len(report.details) == 17
    assert report.details[-1].input == "passes with quadrature tolerances halved"
    assert report.details[-1].margin == 0.0
    assert report.metadata["refined_abs_tol"] == "5e-11"
    validate_report_payload(report.validated_payload())


def test_refined_recheck_is_off_by_default(tmp_path):
    reports, _ = run_suite("kernel", RunConfig(alpha_list=[1.0], output_dir=tmp_path, threads=1))
    assert len(reports[0].details) == 16


def test_embedding_suite_is_registered():
    assert "embedding" in SUITES
    assert suite_jobs("embedding", [0.5, 1.0]) == [("embedding", 0.5), ("embedding", 1.0)]


def test_embeddings(run_config):
    pairs = [((1, 1), (2, 1)), ((1, "inf"), (1, 1))]
    report = check_embeddings(0.5, pairs=pairs, config=run_config)
    assert report.passed
    assert report.check_name == "embedding"
    assert report.config_digest == run_config.digest()
    assert len(report.details) == 4


@pytest.mark.slow
def test_hausdorff_young_envelope_details(run_config):
    report = check_hausdorff_young(1.0, config=run_config)
    envelope = [d for d in report.details if "C*" in d.input]
    assert len(envelope) == 2
    assert all(d.margin >= 0 for d in envelope)
    assert report.measured_constants["C*"] > 0


@pytest.mark.slow
def test_translation_bound_default_runs_in_minutes(run_config):
    report = check_translation_bound(0.5, config=run_config)
    assert report.passed
    assert report.runtime_seconds < 300.0


@pytest.mark.slow
def test_default_embedding_pairs(run_config):
    assert check_embeddings(1.5, config=run_config).passed
