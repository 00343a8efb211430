import json
from pathlib import Path

import pytest

from wmideals.cli import bundled_fixture_dir
from wmideals.mhs import SncConfiguration

FIXTURES = bundled_fixture_dir()
DATA = Path(__file__).parent / "data"


def load_fixture(name) -> SncConfiguration:
    return SncConfiguration.from_json(json.loads((FIXTURES / f"{name}.json").read_text()))


@pytest.fixture
def fixture_config():
    return load_fixture


# ---- acceptance summary ------------------------------------------------------

_criteria: dict[str, tuple[int, str]] = {}
_outcomes: dict[str, str] = {}


def pytest_collection_modifyitems(items):
    for item in items:
        marker = item.get_closest_marker("acceptance")
        if marker is not None:
            _criteria[item.nodeid] = (marker.args[0], marker.args[1])


def pytest_runtest_logreport(report):
    if report.nodeid not in _criteria:
        return
    if report.failed:
        _outcomes[report.nodeid] = "FAIL"
    elif report.when == "call" and report.nodeid not in _outcomes:
        _outcomes[report.nodeid] = "PASS"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, (number, title) in sorted(_criteria.items(), key=lambda kv: kv[1][0]):
        outcome = _outcomes.get(nodeid, "NOT RUN")
        terminalreporter.write_line(f"[{outcome}] criterion {number}: {title}")
