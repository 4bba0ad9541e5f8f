import numpy as np
import pytest

# (criterion, passed, detail) rows recorded by test_acceptance.py
ACCEPTANCE_RESULTS = []


@pytest.fixture
def rng():
    return np.random.default_rng(20070306)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}: {detail}")
