import time
from collections import OrderedDict

import pytest

SUITE_BUDGET_S = 30.0

_criteria = OrderedDict()
_start = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion a test belongs to")


def pytest_sessionstart(session):
    _start["t"] = time.perf_counter()


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or (report.when != "call" and report.passed):
        return
    number, title = marker.args
    entry = _criteria.setdefault(number, {"title": title, "passed": True, "failures": []})
    if report.failed:
        entry["passed"] = False
        entry["failures"].append(item.name)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(_criteria):
        entry = _criteria[number]
        status = "PASS" if entry["passed"] else "FAIL"
        line = f"criterion {number:>2} {status}: {entry['title']}"
        if entry["failures"]:
            line += f"  [failed: {', '.join(entry['failures'])}]"
        tr.write_line(line)
    elapsed = time.perf_counter() - _start["t"]
    status = "PASS" if elapsed < SUITE_BUDGET_S else "FAIL"
    tr.write_line(f"suite runtime {status}: {elapsed:.1f} s (budget {SUITE_BUDGET_S:.0f} s)")


def pytest_sessionfinish(session, exitstatus):
    if _criteria and time.perf_counter() - _start["t"] >= SUITE_BUDGET_S and exitstatus == 0:
        session.exitstatus = 1
