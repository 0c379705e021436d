import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_ACCEPTANCE = {}


@pytest.fixture
def criterion(request):
    """Record a named acceptance criterion's outcome for the terminal summary."""
    def record(label):
        _ACCEPTANCE[request.node.nodeid] = label
    return record


def pytest_runtest_logreport(report):
    if report.when == "call" and report.nodeid in _ACCEPTANCE:
        label = _ACCEPTANCE[report.nodeid]
        _ACCEPTANCE[report.nodeid] = (label, report.outcome, report.duration)


def pytest_terminal_summary(terminalreporter):
    rows = [v for v in _ACCEPTANCE.values() if isinstance(v, tuple)]
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for label, outcome, duration in sorted(rows):
        mark = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{mark}] {label} ({duration:.2f}s)")
