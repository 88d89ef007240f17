from __future__ import annotations

import pytest

_results: dict[str, dict] = {}


def pytest_configure(config):
    config.addinivalue_line(
        "markers",
        "acceptance(criterion, title): ties a test to a numbered acceptance "
        "criterion so the summary prints one pass/fail line per criterion",
    )


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    criterion, title = marker.args
    entry = _results.setdefault(str(criterion), {"title": title, "failed": 0, "ran": 0})
    if report.when == "call":
        entry["ran"] += 1
        if report.failed:
            entry["failed"] += 1
    elif report.failed:  # setup/teardown error
        entry["failed"] += 1


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _results:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for criterion in sorted(_results, key=lambda c: (len(c), c)):
        entry = _results[criterion]
        status = "PASS" if entry["failed"] == 0 and entry["ran"] > 0 else "FAIL"
        terminalreporter.write_line(
            f"criterion {criterion}: {status} - {entry['title']}"
        )
