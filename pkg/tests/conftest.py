import os

import pytest

ALPHAS = (1.2, 1.5, 1.8)

_acceptance_lines = []


def record(criterion, passed, detail):
    """Collect one acceptance line; printed in the terminal summary."""
    _acceptance_lines.append(f"[{'PASS' if passed else 'FAIL'}] {criterion}: {detail}")


@pytest.fixture
def report():
    return record


def pytest_collection_modifyitems(config, items):
    if os.environ.get("STABLESUP_SLOW"):
        return
    skip = pytest.mark.skip(reason="slow Monte Carlo; set STABLESUP_SLOW=1")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
