import os
import tempfile

import pytest

from hypergroup_amalgam.models.RunConfig import RunConfig
from hypergroup_amalgam.services.bessel_kingman import bump, indicator

DEFAULT_ALPHAS = [0.5, 0.75, 1.0, 1.5, 2.5]


def pytest_configure(config):
    # keep log files out of the working tree
    os.environ.setdefault("HYPERGROUP_LOG_DIR", tempfile.mkdtemp(prefix="hypergroup-logs-"))
    # create the logger singleton now, while sys.stderr is the session-wide
    # capture stream, so its console handler never binds to a per-test
    # capsys stream that is closed when that test ends
    from hypergroup_amalgam.log.logger_singleton import getLogger
    getLogger()


@pytest.fixture
def unit():
    return indicator(0.0, 1.0, "unit-indicator")


@pytest.fixture
def smooth_bump():
    return bump()


@pytest.fixture
def run_config(tmp_path):
    return RunConfig(output_dir=tmp_path / "reports", threads=1)
