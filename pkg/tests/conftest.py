from fractions import Fraction as F
import random

import numpy as np
import pytest

from trijacobi.suites import random_rational_params

FLOAT_PARAMS = [(0.0, 0.0, 0.0), (1.0, 2.0, 3.0), (0.5, 0.3, 1.7)]
RATIONAL_PARAMS = random_rational_params(random.Random(2024), count=5)
FIXED_RATIONAL = (F(1, 3), F(2, 7), F(-1, 5))

CAYLEY = {
    # row g, column h -> g h, transcribed from the group table of the triangle
    "e": ["e", "pi", "sigma", "tau", "rot2pi3", "rot4pi3"],
    "pi": ["pi", "e", "rot2pi3", "rot4pi3", "sigma", "tau"],
    "sigma": ["sigma", "rot4pi3", "e", "rot2pi3", "tau", "pi"],
    "tau": ["tau", "rot2pi3", "rot4pi3", "e", "pi", "sigma"],
    "rot2pi3": ["rot2pi3", "tau", "pi", "sigma", "rot4pi3", "e"],
    "rot4pi3": ["rot4pi3", "sigma", "tau", "pi", "e", "rot2pi3"],
}
CAYLEY_ORDER = ["e", "pi", "sigma", "tau", "rot2pi3", "rot4pi3"]

# lines collected by the acceptance tests, printed once at the end of the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def interior_points(rng):
    pts = []
    while len(pts) < 10:
        u, v = rng.random(2)
        if u + v < 1:
            pts.append((u, v))
    pts = np.array(pts)
    return pts[:, 0], pts[:, 1]
