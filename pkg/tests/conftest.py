import math

import numpy as np
import pytest

CORNERS = np.array([(0, 0), (1, 0), (1, 1), (0, 1)], dtype=float)
CORNERS_CENTER = np.array([(0, 0), (1, 0), (1, 1), (0, 1), (0.5, 0.5)], dtype=float)
P5 = np.array([(0, 0), (4, 0), (4, 2), (0, 2), (2, 1)], dtype=float)

# acceptance lines collected during the run, echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def random_instance(rng: np.random.Generator, lo: int, hi: int, lattice: bool = False) -> np.ndarray:
    """Distinct random points; ``lattice`` snaps to a coarse grid to provoke ties."""
    while True:
        n = int(rng.integers(lo, hi + 1))
        scale = float(rng.uniform(0.5, 5.0))
        shift = rng.uniform(-3, 3, size=2)
        pts = rng.random((n, 2))
        if lattice:
            pts = np.round(pts * 4) / 4
        pts = np.unique(pts, axis=0) * scale + shift
        if len(pts) >= lo:
            return pts[rng.permutation(len(pts))]


def diam(pts) -> float:
    span = np.ptp(np.asarray(pts, dtype=float), axis=0)
    return float(math.hypot(*span))


@pytest.fixture
def corners():
    return CORNERS.copy()


@pytest.fixture
def corners_center():
    return CORNERS_CENTER.copy()


@pytest.fixture
def p5():
    return P5.copy()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
