"""
Instance generator - seeded test matrices per family.

Families:
    planted-ssp: a_{i*,j*} = 0, the rest of row i* negative, the rest of
        column j* positive, everything else standard normal.
    planted-sp: k zeros in one row; the rest of that row negative, the rest of
        those k columns positive. Gives exactly k saddlepoints of value 0
        (an SSP when k = 1).
    no-sp: every row peaks (value > 2) in its own column of a random cycle,
        all other entries in [0, 1); no saddlepoint when m, n >= 2.
    random: i.i.d. standard normal.
    constant: all ones.
"""

import logging
from typing import List, Tuple

import numpy as np

from saddlepoint.errors import ContractError
from saddlepoint.models.result import InstanceFamily

logger = logging.getLogger(__name__)

Position = Tuple[int, int]


class InstanceGenerator:
    """Deterministic generator; identical (family, m, n, seed, k) give identical matrices."""

    LOW = 0.001

    def __init__(self, seed: int):
        self.seed = seed
        self.rng = np.random.default_rng(seed)

    def generate(self, family: InstanceFamily, m: int, n: int, multiplicity: int = 1) -> Tuple[np.ndarray, List[Position]]:
        """
        Build one instance.

        Args:
            family: Instance family
            m: Rows
            n: Columns
            multiplicity: Number of saddlepoints for planted-sp

        Returns:
            (matrix, planted 1-based positions; empty for unplanted families)
        """
        if m < 1 or n < 1:
            raise ContractError(f"Dimensions must be positive, got {m}x{n}")
        family = InstanceFamily(family)
        if family == InstanceFamily.PLANTED_SSP:
            return self._planted(m, n, 1)
        if family == InstanceFamily.PLANTED_SP:
            if not 1 <= multiplicity <= min(m, n):
                raise ContractError(f"Multiplicity {multiplicity} infeasible for {m}x{n} (need 1..{min(m, n)})")
            return self._planted(m, n, multiplicity)
        if family == InstanceFamily.NO_SP:
            return self._no_sp(m, n), []
        if family == InstanceFamily.RANDOM:
            return self.rng.standard_normal((m, n)), []
        return np.ones((m, n), dtype=np.float64), []

    def _planted(self, m: int, n: int, k: int) -> Tuple[np.ndarray, List[Position]]:
        data = self.rng.standard_normal((m, n))
        row = int(self.rng.integers(m))
        cols = sorted(int(c) for c in self.rng.choice(n, size=k, replace=False))
        data[row, :] = -self.rng.uniform(self.LOW, 1.0, size=n)
        for col in cols:
            data[:, col] = self.rng.uniform(self.LOW, 1.0, size=m)
            data[row, col] = 0.0
        logger.debug("Planted %d saddlepoint(s) in row %d of %dx%d", k, row + 1, m, n)
        return data, [(row + 1, col + 1) for col in cols]

    def _no_sp(self, m: int, n: int) -> np.ndarray:
        if min(m, n) < 2:
            raise ContractError(f"no-sp needs at least 2 rows and 2 columns, got {m}x{n}")
        data = self.rng.uniform(0.0, 1.0, size=(m, n))
        cycle = self.rng.permutation(n)
        for i in range(m):
            data[i, cycle[i % n]] = 2.0 + self.rng.uniform(0.0, 1.0)
        return data


def generate(family: InstanceFamily, m: int, n: int, seed: int, multiplicity: int = 1) -> np.ndarray:
    """Matrix of the given family, deterministic per seed."""
    data, _ = InstanceGenerator(seed).generate(family, m, n, multiplicity)
    return data
