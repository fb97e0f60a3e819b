import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from reflexpoly import from_hrep, from_vrep

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"


def triangle(a, b, c=1):
    """{x >= -1, y >= -1, a*x + b*y <= c}."""
    return from_hrep([((-1, 0), 1), ((0, -1), 1), ((a, b), c)], 2)


@pytest.fixture(scope="session")
def reflexive_triangle():
    return triangle(2, 3)


@pytest.fixture(scope="session")
def dual_fano_triangle():
    return triangle(1, 3)


@pytest.fixture(scope="session")
def dual_integral_triangle():
    return triangle(3, 3)


@pytest.fixture(scope="session")
def unit_square():
    return from_vrep([(0, 0), (1, 0), (0, 1), (1, 1)])


@pytest.fixture(scope="session")
def sym_square():
    return from_vrep([(-1, -1), (1, -1), (-1, 1), (1, 1)])


@pytest.fixture(scope="session")
def half_segment():
    return from_hrep([((-1,), 0), ((1,), Fraction(1, 2))], 1)


@pytest.fixture(scope="session")
def unit_interval():
    return from_hrep([((-1,), 0), ((1,), 1)], 1)
