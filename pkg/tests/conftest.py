from pathlib import Path

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "ci",
    derandomize=True,
    max_examples=150,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")

DATA_DIR = Path(__file__).parent / "data"

# 5x5 worked system: simple spectrum {1..5}, two decoupled scalar states.
GOLDEN_A = np.array(
    [
        [3.0, 1.5, -1.5, -1.0, 0.5],
        [0.0, 2.0, 0.0, 0.0, 0.0],
        [-2.0, -1.5, 2.5, -1.0, -0.5],
        [0.0, 0.0, 0.0, 3.0, 0.0],
        [2.0, 1.5, 1.5, 1.0, 4.5],
    ]
)

# Left eigenvectors of GOLDEN_A in integer scaling, ordered by descending
# eigenvalue (5, 4, 3, 2, 1).
GOLDEN_EIGENVALUES = np.array([5.0, 4.0, 3.0, 2.0, 1.0])
GOLDEN_LEFT_EIGENVECTORS = np.array(
    [
        [1.0, 1.0, 0.0, 0.0, 1.0],
        [0.0, 0.0, 1.0, 0.0, 1.0],
        [0.0, 0.0, 0.0, 1.0, 0.0],
        [0.0, 1.0, 0.0, 0.0, 0.0],
        [1.0, 0.0, 1.0, 1.0, 0.0],
    ]
)

GOLDEN_PATTERNS = ["**00*", "00*0*", "000*0", "0*000", "*0**0"]

# Reachability display for b = [0,1,1,1,0]: row k holds (A^(k-1) b)^T.
GOLDEN_KRYLOV_ROWS = np.array(
    [
        [0.0, 1.0, 1.0, 1.0, 0.0],
        [-1.0, 2.0, 0.0, 3.0, 4.0],
        [-1.0, 4.0, -6.0, 9.0, 22.0],
        [14.0, 8.0, -39.0, 27.0, 103.0],
        [137.0, 16.0, -216.0, 81.0, 472.0],
    ]
)

GOLDEN_COVER_SETS = [{1, 5}, {1, 4}, {2, 5}, {3, 5}, {1, 2}]


@pytest.fixture(scope="session")
def golden_a():
    return GOLDEN_A.copy()


@pytest.fixture(scope="session")
def golden_basis():
    from mincontrol import left_eigenbasis

    return left_eigenbasis(GOLDEN_A)


@pytest.fixture(scope="session")
def golden_path():
    return str(DATA_DIR / "golden5.json")


def random_simple_matrix(rng, n, gap_tol=1e-6):
    """Uniform [-1, 1] matrix, redrawn until the spectrum is simple."""
    from mincontrol import is_simple

    while True:
        A = rng.uniform(-1.0, 1.0, (n, n))
        if is_simple(np.linalg.eigvals(A), gap_tol):
            return A
