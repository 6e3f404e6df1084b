"""
Iterated logarithms and the pinned query budgets of every algorithm.

The constants come from `config` so a calibration run can override them
through SADDLEPOINT_BUDGET_* without touching code.
"""

import math
from typing import Optional

from saddlepoint.config import config
from saddlepoint.models.result import Algorithm


def lg_star(n: float) -> int:
    """Number of times lg must be applied to n to reach a value <= 1."""
    count = 0
    value = float(n)
    while value > 1:
        value = math.log2(value)
        count += 1
    return count


def ceil_lg(n: int) -> int:
    """ceil(lg n) for n >= 1, exact on integers."""
    if n <= 1:
        return 0
    return (n - 1).bit_length()


def lg_lg(n: int) -> float:
    """lg lg n, clamped at zero for n <= 2."""
    if n <= 2:
        return 0.0
    return max(0.0, math.log2(math.log2(n)))


def baseline_budget(n: int) -> int:
    return 2 * n - 1


def simple_budget(n: int, c1: Optional[float] = None) -> float:
    c1 = config.budget_simple if c1 is None else c1
    return c1 * n * 2 ** lg_star(n)


def fast_budget(n: int, c2: Optional[float] = None) -> float:
    c2 = config.budget_fast if c2 is None else c2
    return c2 * n * max(1, lg_star(n))


def alternative_budget(n: int, c3: Optional[float] = None) -> float:
    c3 = config.budget_alternative if c3 is None else c3
    return c3 * n * (lg_lg(n) + 1)


def square_budget(algorithm: Algorithm, n: int) -> float:
    """Budget of one n x n PSP/SSP computation for the given algorithm."""
    if algorithm == Algorithm.BASELINE:
        return baseline_budget(n)
    if algorithm == Algorithm.SIMPLE:
        return simple_budget(n)
    if algorithm == Algorithm.ALTERNATIVE:
        return alternative_budget(n)
    return fast_budget(n)


def rect_budget(algorithm: Algorithm, m: int, n: int) -> float:
    """
    Budget of a rectangular solve: one square budget per n-row chunk plus
    one comparison-free allowance per chunk, plus the staircase test.
    """
    long_side, short_side = max(m, n), min(m, n)
    chunks = -(-long_side // short_side)
    square = square_budget(algorithm if algorithm != Algorithm.ALTERNATIVE else Algorithm.FAST, short_side)
    return chunks * square + chunks + staircase_budget(m, n)


def staircase_budget(m: int, n: int) -> int:
    """Queries of one feasibility test: two walks plus a verification."""
    return 3 * (m + n)


def ssp_budget(algorithm: Algorithm, m: int, n: int) -> float:
    """Whole find_ssp budget: the PSP part plus the feasibility test."""
    if m == n and algorithm == Algorithm.ALTERNATIVE:
        return alternative_budget(n)
    if m == n:
        return square_budget(algorithm, n) + staircase_budget(m, n)
    return rect_budget(algorithm, m, n)


def locate_budget(k: int, m: int, n: int, c4: Optional[float] = None) -> float:
    c4 = config.budget_locate if c4 is None else c4
    return c4 * max(1, k) * (m + n)
