import pytest

from report import LINES
from systems import SCOPE_SYSTEMS, SMALL_SYSTEMS


def pytest_terminal_summary(terminalreporter):
    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in LINES:
            terminalreporter.write_line(line)


@pytest.fixture(params=SMALL_SYSTEMS, ids=str)
def small_system(request):
    return request.param


@pytest.fixture(params=SCOPE_SYSTEMS, ids=str)
def scope_system(request):
    return request.param
