import pytest

from symhyp.gf import field_new

ACCEPTANCE_LINES = []


@pytest.fixture(params=[(5, 1), (7, 1), (2, 3), (3, 2)], ids=["F5", "F7", "F8", "F9"])
def small_field(request):
    return field_new(*request.param)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
