import os

import pytest
from hypothesis import HealthCheck, settings

from qweyl.presentation import parse_spec
from qweyl.sampling import symbolic_presentation

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("thorough", max_examples=400, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

DATA = os.path.join(os.path.dirname(__file__), "data")


@pytest.fixture(scope="session")
def A1():
    return symbolic_presentation(1)


@pytest.fixture(scope="session")
def A2():
    return symbolic_presentation(2)


@pytest.fixture(scope="session")
def A3():
    return symbolic_presentation(3)


@pytest.fixture(scope="session")
def B2():
    """n=2 with names q1, q2, g as in the file-format docs."""
    return parse_spec("indeterminates: q1 q2 g\nn: 2\nq: q1, q2\ngamma: 1, g ; 1/g, 1\n")


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: one test per acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
