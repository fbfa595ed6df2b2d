"""Shared fixtures and terminal reporting for the test suite."""

from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

from shiftdecomp import make_field

settings.register_profile(
    "default",
    max_examples=50,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

# Populated by the acceptance tests; echoed after the pytest summary so the
# per-criterion verdict lines are visible in captured terminal output.
ACCEPTANCE_RESULTS: list[str] = []


@pytest.fixture(scope="session")
def f7():
    return make_field(7)


@pytest.fixture(scope="session")
def f11():
    return make_field(11)


@pytest.fixture(scope="session")
def f13():
    return make_field(13)


@pytest.fixture(scope="session")
def f19():
    return make_field(19)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance results")
        for line in ACCEPTANCE_RESULTS:
            terminalreporter.write_line(line)
