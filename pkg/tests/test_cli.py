import json
import math
from pathlib import Path

import pytest

from hypergroup_amalgam.cli import main, summary_table
from hypergroup_amalgam.constants.constants import (
    EXIT_BAD_FLAGS,
    EXIT_BAD_HYPERGROUP,
    EXIT_NON_CONVERGENCE,
    EXIT_OK,
    EXIT_TAIL_DIVERGENCE,
)
from hypergroup_amalgam.models.VerificationReport import ReportBuilder

DATA_DIR = Path(__file__).resolve().parents[1] / "hypergroup_amalgam" / "data"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_kernel(capsys, tmp_path):
    code, out, _ = run(capsys, "eval", "--subject", "kernel", "--alpha", "0.5",
                       "--x", "1", "--y", "1", "--z", "1", "--output-dir", str(tmp_path))
    assert code == EXIT_OK
    assert float(out.strip()) == pytest.approx(0.5, rel=1e-14)
    rows = json.loads((tmp_path / "eval_kernel_alpha0.5.json").read_text())
    assert rows[0]["z"] == 1.0


def test_eval_translate_by_zero_is_identity(capsys, tmp_path):
    code, out, _ = run(capsys, "eval", "--subject", "translate", "--alpha", "1.5", "--y", "0",
                       "--x", "0.25,0.5,1.5", "--f", "unit-indicator", "--output-dir", str(tmp_path))
    assert code == EXIT_OK
    assert [float(v) for v in out.split()] == [1.0, 1.0, 0.0]


def test_eval_indicator_hat_grid_as_csv(capsys, tmp_path):
    code, out, _ = run(capsys, "eval", "--subject", "indicator-hat", "--alpha", "0.5",
                       "--lambda", "0:50:0.1", "--format", "csv", "--output-dir", str(tmp_path))
    assert code == EXIT_OK
    assert out.startswith("wrote 501 rows")
    lines = (tmp_path / "eval_indicator-hat_alpha0.5.csv").read_text().splitlines()
    assert lines[0] == "lambda,value"
    assert len(lines) == 502
    lam, value = (float(v) for v in lines[11].split(","))
    assert value == pytest.approx((math.sin(lam) - lam * math.cos(lam)) / lam ** 3, abs=1e-12)


def test_eval_requires_grid_flags(capsys, tmp_path):
    code, _, err = run(capsys, "eval", "--subject", "kernel", "--x", "1", "--output-dir", str(tmp_path))
    assert code == EXIT_BAD_FLAGS
    assert "--y" in err


def test_norm_discrete(capsys, tmp_path):
    code, out, _ = run(capsys, "norm", "--norm", "discrete", "--f", "unit-indicator", "--alpha", "0.5",
                       "--p", "1", "--q", "1", "--output-dir", str(tmp_path))
    assert code == EXIT_OK
    value, tail = (float(v) for v in out.split())
    assert value == pytest.approx(1.0 / 3.0, abs=1e-12)
    assert tail == 0.0
    record = json.loads((tmp_path / "norm_discrete_unit-indicator_alpha0.5.json").read_text())
    assert record["p"] == "1" and record["q"] == "1"
    assert record["diverges"] is False


def test_norm_lp(capsys, tmp_path):
    code, out, _ = run(capsys, "norm", "--norm", "lp", "--f", "unit-indicator", "--alpha", "0.5",
                       "--p", "2", "--output-dir", str(tmp_path))
    assert code == EXIT_OK
    assert float(out.split()[0]) == pytest.approx(math.sqrt(1.0 / 3.0), abs=1e-12)


def test_norm_continuous_rejects_infinite_p(capsys, tmp_path):
    code, _, _ = run(capsys, "norm", "--norm", "continuous", "--f", "bump", "--p", "inf",
                     "--output-dir", str(tmp_path))
    assert code == EXIT_BAD_FLAGS


def test_norm_reports_tail_divergence(capsys, tmp_path):
    code, out, _ = run(capsys, "norm", "--norm", "discrete", "--f", "indicator-hat", "--alpha", "0.5",
                       "--p", "inf", "--q", "1.4", "--output-dir", str(tmp_path))
    assert code == EXIT_TAIL_DIVERGENCE
    assert out.split()[1] == "inf"
    record = json.loads((tmp_path / "norm_discrete_indicator-hat_alpha0.5.json").read_text())
    assert record["diverges"] is True
    assert record["tail_estimate"] is None


@pytest.mark.parametrize("argv", [
    ["norm", "--norm", "discrete", "--f", "nope"],
    ["norm", "--norm", "lp", "--f", "bump", "--alpha", "0.3"],
    ["norm", "--norm", "lp", "--f", "bump", "--p", "0.5"],
])
def test_bad_values_exit_2(capsys, tmp_path, argv):
    code, _, err = run(capsys, *argv, "--output-dir", str(tmp_path))
    assert code == EXIT_BAD_FLAGS
    assert err.startswith("error:")


def test_unknown_flag_is_an_argparse_error(capsys):
    with pytest.raises(SystemExit) as info:
        main(["norm", "--norm", "discrete", "--f", "bump", "--bogus"])
    assert info.value.code == EXIT_BAD_FLAGS


@pytest.mark.parametrize("name, expected", [("z2.hyp", "1 1"), ("two_point_50.hyp", "1 2"), ("two_point_25.hyp", "1 4")])
def test_load_hypergroup_prints_weights(capsys, name, expected):
    code, out, _ = run(capsys, "load-hypergroup", str(DATA_DIR / name))
    assert code == EXIT_OK
    assert out.strip() == expected


def test_load_hypergroup_reports_bad_row(capsys, tmp_path):
    path = tmp_path / "bad.hyp"
    path.write_text(json.dumps({"size": 2, "involution": [0, 1], "tensor": [1, 0, 0, 1, 0, 1, 0.9, 0]}))
    code, _, err = run(capsys, "load-hypergroup", str(path))
    assert code == EXIT_BAD_HYPERGROUP
    assert "row (1,1) sums to 0.9" in err
    assert "row-sum" in err


def test_load_hypergroup_rejects_malformed_json(capsys, tmp_path):
    path = tmp_path / "broken.hyp"
    path.write_text("{ not json")
    code, _, _ = run(capsys, "load-hypergroup", str(path))
    assert code == EXIT_BAD_HYPERGROUP


def test_verify_finite_suite(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "--suite", "finite", "--file", str(DATA_DIR / "z2.hyp"),
                       "--file", str(DATA_DIR / "two_point_75.hyp"), "--threads", "1",
                       "--output-dir", str(tmp_path))
    assert code == EXIT_OK
    assert "finite_equalities" in out
    report = json.loads((tmp_path / "finite_equalities.json").read_text())
    assert report["passed"] is True
    assert report["alpha"] is None


def test_verify_kernel_suite(capsys, tmp_path):
    code, _, _ = run(capsys, "verify", "--suite", "kernel", "--alpha", "0.5,1.5", "--threads", "2",
                     "--output-dir", str(tmp_path))
    assert code == EXIT_OK
    assert sorted(p.name for p in tmp_path.glob("*.json")) == [
        "kernel_normalization_alpha0.5.json",
        "kernel_normalization_alpha1.5.json",
    ]


def test_summary_table():
    builder = ReportBuilder("young", 0.5, tolerance=0.0)
    builder.add_bound("bad", 2.0, 1.0)
    frame = summary_table([builder.build()])
    assert frame.loc[0, "failures"] == 1
    assert not frame.loc[0, "passed"]


def test_verify_gn_suite(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "--suite", "gn", "--alpha", "0.5", "--threads", "1",
                       "--output-dir", str(tmp_path))
    assert code == EXIT_OK
    report = json.loads((tmp_path / "gn_partition_alpha0.5.json").read_text())
    assert report["passed"] is True


def test_verify_kernel_with_refined_recheck(capsys, tmp_path):
    code, _, _ = run(capsys, "verify", "--suite", "kernel", "--alpha", "1", "--recheck-refined",
                     "--threads", "1", "--output-dir", str(tmp_path))
    assert code == EXIT_OK
    report = json.loads((tmp_path / "kernel_normalization_alpha1.json").read_text())
    assert report["details"][-1]["input"] == "passes with quadrature tolerances halved"


def test_quadrature_budget_exhaustion_exits_3(capsys, tmp_path):
    config = tmp_path / "config.json"
    config.write_text(json.dumps({"quad": {"abs_tol": 1e-15, "rel_tol": 1e-15, "max_subdivisions": 1}}))
    code, _, err = run(capsys, "norm", "--norm", "discrete", "--f", "hat:unit-indicator", "--alpha", "0.5",
                       "--p", "1", "--q", "1", "--config", str(config), "--output-dir", str(tmp_path))
    assert code == EXIT_NON_CONVERGENCE
    assert "integral '" in err


def _bodies(directory: Path) -> dict:
    out = {}
    for path in sorted(directory.glob("*.json")):
        report = json.loads(path.read_text())
        report.pop("runtime_seconds")
        out[path.name] = report
    return out


@pytest.mark.slow
def test_verify_all_is_deterministic(capsys, tmp_path):
    for name in ("first", "second"):
        code, _, _ = run(capsys, "verify", "--suite", "all", "--alpha", "0.5", "--threads", "4",
                         "--output-dir", str(tmp_path / name))
        assert code == EXIT_OK
    first, second = _bodies(tmp_path / "first"), _bodies(tmp_path / "second")
    assert len(first) == 9
    assert first == second
