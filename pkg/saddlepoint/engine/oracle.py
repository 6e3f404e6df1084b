"""
Reference oracle - brute-force ground truth over all m*n entries.

Reads go through the same view channel as every algorithm, so an oracle scan
costs exactly m*n queries and can double-check counter arithmetic. Ties in
row maxima and column minima go to the smallest index.
"""

import logging
from typing import Any, List, Tuple

from saddlepoint.engine.view import MatrixView, unwrap
from saddlepoint.models.matrix import Entry, Interval, OracleReport

logger = logging.getLogger(__name__)


def _read_all(view: MatrixView) -> List[List[Any]]:
    return view.to_rows()


def _row_maxima(view: MatrixView, grid: List[List[Any]]) -> List[int]:
    best = []
    for row in grid:
        k = 0
        for j in range(1, len(row)):
            if view.lt(row[k], row[j]):
                k = j
        best.append(k)
    return best


def _col_minima(view: MatrixView, grid: List[List[Any]]) -> List[int]:
    best = []
    for j in range(len(grid[0])):
        k = 0
        for i in range(1, len(grid)):
            if view.lt(grid[i][j], grid[k][j]):
                k = i
        best.append(k)
    return best


def psp_interval(view: MatrixView) -> Tuple[Any, Any]:
    """(C, R) in the order of `view` (values may be reversed)."""
    grid = _read_all(view)
    return _interval_of(view, grid, _row_maxima(view, grid), _col_minima(view, grid))


def _interval_of(view: MatrixView, grid, row_best, col_best) -> Tuple[Any, Any]:
    lower = grid[col_best[0]][0]
    for j in range(1, len(col_best)):
        candidate = grid[col_best[j]][j]
        if view.lt(lower, candidate):
            lower = candidate
    upper = grid[0][row_best[0]]
    for i in range(1, len(row_best)):
        candidate = grid[i][row_best[i]]
        if view.lt(candidate, upper):
            upper = candidate
    return lower, upper


def oracle_scan(view: MatrixView) -> OracleReport:
    """
    Full brute-force report: r(i), c(j), [C, R], all PSPs, all SPs and the SSP.

    Args:
        view: Any m x n view.

    Returns:
        OracleReport with entries in root coordinates.
    """
    grid = _read_all(view)
    m, n = view.rows, view.cols
    row_best = _row_maxima(view, grid)
    col_best = _col_minima(view, grid)
    lower, upper = _interval_of(view, grid, row_best, col_best)

    row_maxima = [view.entry(i + 1, row_best[i] + 1, grid[i][row_best[i]]) for i in range(m)]
    col_minima = [view.entry(col_best[j] + 1, j + 1, grid[col_best[j]][j]) for j in range(n)]

    psp_entries: List[Entry] = []
    sp_entries: List[Entry] = []
    ssp = None
    for i in range(m):
        row_max = grid[i][row_best[i]]
        for j in range(n):
            value = grid[i][j]
            if not (view.le(lower, value) and view.le(value, upper)):
                continue
            entry = view.entry(i + 1, j + 1, value)
            psp_entries.append(entry)
            col_min = grid[col_best[j]][j]
            if view.le(row_max, value) and view.le(value, col_min):
                sp_entries.append(entry)
                if ssp is None and is_strict_saddlepoint(view, grid, i, j):
                    ssp = entry

    logger.debug("Oracle scan %dx%d: %d PSPs, %d SPs, SSP=%s", m, n, len(psp_entries), len(sp_entries), ssp)
    return OracleReport(
        rows=m,
        cols=n,
        row_maxima=row_maxima,
        col_minima=col_minima,
        interval=Interval(lower=unwrap(lower), upper=unwrap(upper)),
        psp_entries=psp_entries,
        sp_entries=sp_entries,
        ssp=ssp,
    )


def is_strict_saddlepoint(view: MatrixView, grid: List[List[Any]], i: int, j: int) -> bool:
    """Strict check on a cached grid (0-based i, j)."""
    value = grid[i][j]
    for k, other in enumerate(grid[i]):
        if k != j and not view.lt(other, value):
            return False
    for k in range(len(grid)):
        if k != i and not view.lt(value, grid[k][j]):
            return False
    return True


def verify_psp(view: MatrixView, value: Any) -> bool:
    """
    True iff `value` lies in [C, R] of `view`.

    `value` must be in the order of `view`; use `view.orient` for raw values
    of a reflected view.
    """
    for i in range(1, view.rows + 1):
        if not any(view.le(value, view.query(i, j)) for j in range(1, view.cols + 1)):
            return False
    for j in range(1, view.cols + 1):
        if not any(view.le(view.query(i, j), value) for i in range(1, view.rows + 1)):
            return False
    return True


def quadratic_sp(view: MatrixView) -> List[Entry]:
    """All (non-strict) saddlepoints: intersect row maxima with column minima."""
    grid = _read_all(view)
    row_best = _row_maxima(view, grid)
    col_best = _col_minima(view, grid)
    found = []
    for i, row in enumerate(grid):
        row_max = row[row_best[i]]
        for j, value in enumerate(row):
            if view.le(row_max, value) and view.le(value, grid[col_best[j]][j]):
                found.append(view.entry(i + 1, j + 1, value))
    return found
