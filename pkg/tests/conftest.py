"""Shared fixtures."""

import numpy as np
import pytest

from saddlepoint.engine.view import BaseMatrix

# 9x9 matrix with a strict saddlepoint a[5][5] = 0
SADDLE9 = [
    [-0.08, 0.55, 0.98, 1.21, 1.24, 1.07, 0.7, 0.13, -0.64],
    [-0.69, -0.06, 0.37, 0.6, 0.63, 0.46, 0.09, -0.48, -1.25],
    [-1.1, -0.47, -0.04, 0.19, 0.22, 0.05, -0.32, -0.89, -1.66],
    [-1.31, -0.68, -0.25, -0.02, 0.01, -0.16, -0.53, -1.1, -1.87],
    [-1.32, -0.69, -0.26, -0.03, 0.0, -0.17, -0.54, -1.11, -1.88],
    [-1.13, -0.5, -0.07, 0.16, 0.19, 0.02, -0.35, -0.92, -1.69],
    [-0.74, -0.11, 0.32, 0.55, 0.58, 0.41, 0.04, -0.53, -1.3],
    [-0.15, 0.48, 0.91, 1.14, 1.17, 1.0, 0.63, 0.06, -0.71],
    [0.64, 1.27, 1.7, 1.93, 1.96, 1.79, 1.42, 0.85, 0.08],
]

# 3x3 matrix without saddlepoint, C = 2 and R = 6
M3 = [[0, 7, 5], [6, 4, 2], [3, 1, 8]]

TIES = [[1, 1], [2, 3]]


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


@pytest.fixture
def saddle9():
    return BaseMatrix(SADDLE9)


@pytest.fixture
def m3():
    return BaseMatrix(M3)


@pytest.fixture
def ties():
    return BaseMatrix(TIES)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def random_small(rng, max_size=8, duplicates=False):
    """Random matrix of side 1..max_size, optionally with few distinct values."""
    m = int(rng.integers(1, max_size + 1))
    n = int(rng.integers(1, max_size + 1))
    if duplicates:
        return rng.integers(0, 4, size=(m, n)).astype(float)
    return rng.standard_normal((m, n))
