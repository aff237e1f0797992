import json
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from smoothdual.spectrum import CuspidalLabel, Inventory  # noqa: E402

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture
def chi():
    return Inventory([CuspidalLabel("chi", 1, 1)])


@pytest.fixture
def chi_tau():
    return Inventory([CuspidalLabel("chi", 1, 1), CuspidalLabel("tau", 2, 1)])


@pytest.fixture
def write_json(tmp_path):
    def write(name, data):
        path = tmp_path / name
        path.write_text(json.dumps(data))
        return str(path)
    return write


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion checked by this test")
    config._criteria = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None and not (report.when == "setup" and report.passed):
        key = tuple(marker.args)
        results = item.config._criteria
        results[key] = results.get(key, True) and not report.failed and not report.skipped


def pytest_terminal_summary(terminalreporter, config):
    if not config._criteria:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), ok in sorted(config._criteria.items()):
        terminalreporter.write_line(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {title}")
