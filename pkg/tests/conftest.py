from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from tripts.geometry import PointSet

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def point_sets(draw, min_size=1, max_size=25, resolution=64):
    """General-position rational point sets: distinct y on a grid."""
    n = draw(st.integers(min_size, max_size))
    ys = draw(st.lists(st.integers(0, resolution - 1), min_size=n, max_size=n, unique=True))
    xs = draw(st.lists(st.integers(-resolution, resolution), min_size=n, max_size=n))
    return PointSet([(Fraction(x, resolution), Fraction(y, resolution)) for x, y in zip(xs, ys)])


def pts(*coords, labels=None):
    return PointSet([(Fraction(x), Fraction(y)) for x, y in coords], labels=labels)


@pytest.fixture
def star4():
    # G_down is a star: three degree-one vertices
    return PointSet([(Fraction(7, 8), Fraction(7, 8)), (Fraction(1, 4), Fraction(5, 8)),
                     (Fraction(5, 8), Fraction(0)), (Fraction(5, 8), Fraction(1, 2))])


ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
