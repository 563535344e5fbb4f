import pytest

from fd2p.algebra import AlgebraContext

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def ctx3():
    return AlgebraContext.create(3, 1)


@pytest.fixture(scope="session")
def ctx5():
    return AlgebraContext.create(5, 1)


@pytest.fixture(scope="session")
def ctx7():
    return AlgebraContext.create(7, 1)


@pytest.fixture(scope="session")
def ctx32():
    return AlgebraContext.create(3, 2)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
