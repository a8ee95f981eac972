import pytest

from deltabound.model import DeltaPotential

# Roots of the transcendental conditions, from 40-digit mpmath bisection
# (independent of the package code).
B_EVEN_A1_L1 = 0.6392322713805368975   # exp(-2b) = 2b - 1
B_ODD_A2_L1 = 0.7968121300200200462    # exp(-2b) = 1 - b
B_EVEN_A2_L1 = 1.108857552878545055    # exp(-2b) = b - 1
B_TOP_A2_D1 = 1.543404638418208448     # cosh b - sinh(b)/b = 1

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def single():
    return DeltaPotential(((2.0, 0.0),))


@pytest.fixture
def double_a2():
    return DeltaPotential(((2.0, -1.0), (2.0, 1.0)))


@pytest.fixture
def double_a1():
    return DeltaPotential(((1.0, -1.0), (1.0, 1.0)))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
