import pytest
from hypothesis import HealthCheck, settings

from wreathsigma import catalog

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(scope="session")
def zwrz():
    return catalog.zwrz()


@pytest.fixture(scope="session")
def lamplighter():
    return catalog.lamplighter(2)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
