import numpy as np
import pytest

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def test_grid():
    """9 x 9 grid over |Re alpha|, |Im alpha| <= 2."""
    axis = np.linspace(-2.0, 2.0, 9)
    return axis[:, None] + 1j * axis[None, :]
