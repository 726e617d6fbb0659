import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_criteria: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call":
        return
    number, title = marker.args
    entry = _criteria.setdefault(number, {"title": title, "results": []})
    entry["results"].append((item.name, report.passed))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        entry = _criteria[number]
        passed = sum(ok for _, ok in entry["results"])
        total = len(entry["results"])
        status = "PASS" if passed == total else "FAIL"
        terminalreporter.write_line(
            f"criterion {number:>2} {status}  {entry['title']}  ({passed}/{total} checks)")
        for name, ok in entry["results"]:
            if not ok:
                terminalreporter.write_line(f"             failed check: {name}")


@pytest.fixture
def rng():
    return random.Random(20261016)
