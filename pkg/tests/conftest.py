from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from hardyparadox import measured

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

DATA_DIR = Path(__file__).resolve().parents[1] / "src" / "hardyparadox" / "data"

# lines collected by test_acceptance.py, echoed after the run
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def data_dir():
    return DATA_DIR


@pytest.fixture(params=measured.SCENARIOS, ids=lambda k: "[{};{},{}]".format(*k))
def measured_key(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
