"""
Staircase search - the O(m+n) feasibility test for a candidate SSP value.

Both walks start at (1, 1) and move only down or right:

- horizontal: down when s < q, otherwise right; succeeds by leaving to the right.
- vertical: down when s <= q, otherwise right; succeeds by leaving at the bottom.

`test_value` combines them into a four-way verdict.
"""

import logging
from typing import Any, List

from saddlepoint.engine.view import MatrixView, unwrap
from saddlepoint.errors import InvariantError
from saddlepoint.models.search import SearchMode, SearchVerdict, StaircasePath, VerdictKind

logger = logging.getLogger(__name__)


def horizontal_search(view: MatrixView, s: Any, track_ties: bool = False) -> StaircasePath:
    """
    Walk that moves down while s < q and right otherwise.

    Args:
        view: Searched view.
        s: Candidate value in the order of `view`.
        track_ties: Record the columns in which an entry equal to s was met.

    Returns:
        StaircasePath; success iff the walk left through column n+1.
    """
    m, n = view.rows, view.cols
    i = j = 1
    steps = 0
    ties: List[int] = []
    while i <= m and j <= n:
        q = view.query(i, j)
        steps += 1
        if view.lt(s, q):
            i += 1
        else:
            if track_ties and view.le(s, q):
                ties.append(j)
            j += 1
    return StaircasePath(mode=SearchMode.HORIZONTAL, success=j > n, row=i, col=j, steps=steps, tie_columns=ties)


def vertical_search(view: MatrixView, s: Any) -> StaircasePath:
    """Walk that moves down while s <= q and right otherwise; success iff it left through row m+1."""
    m, n = view.rows, view.cols
    i = j = 1
    steps = 0
    while i <= m and j <= n:
        q = view.query(i, j)
        steps += 1
        if view.le(s, q):
            i += 1
        else:
            j += 1
    return StaircasePath(mode=SearchMode.VERTICAL, success=i > m, row=i, col=j, steps=steps)


def verify_ssp_candidate(view: MatrixView, i: int, j: int) -> bool:
    """
    Whether (i, j) is strictly the largest in its row and strictly the smallest in its column.

    Always makes exactly m+n-2 comparisons.
    """
    value = view.query(i, j)
    strict = True
    for k in range(1, view.cols + 1):
        if k != j:
            strict &= view.lt(view.query(i, k), value)
    for k in range(1, view.rows + 1):
        if k != i:
            strict &= view.lt(value, view.query(k, j))
    return strict


def test_value(view: MatrixView, s: Any) -> SearchVerdict:
    """
    Four-way feasibility test of the value s.

    Returns:
        FOUND with the verified SSP, ABSENT when the crossing candidate fails,
        GREATER when the horizontal walk fails (an SSP, if any, exceeds s) and
        LESS when the vertical walk fails (an SSP, if any, is below s).

    Raises:
        InvariantError: Both walks failed.
    """
    horizontal = horizontal_search(view, s)
    vertical = vertical_search(view, s)
    if not horizontal.success and not vertical.success:
        raise InvariantError(f"Both staircase searches failed for value {unwrap(s)!r}")
    if not horizontal.success:
        return SearchVerdict(kind=VerdictKind.GREATER)
    if not vertical.success:
        return SearchVerdict(kind=VerdictKind.LESS)

    i, j = horizontal.row, vertical.col
    if verify_ssp_candidate(view, i, j):
        logger.debug("Value %r verified as SSP at local (%d, %d)", unwrap(s), i, j)
        return SearchVerdict(kind=VerdictKind.FOUND, entry=view.entry(i, j), position=(i, j))
    return SearchVerdict(kind=VerdictKind.ABSENT)


def both_succeed_values(view: MatrixView) -> List[Any]:
    """
    Distinct entry values of `view` for which both walks succeed.

    Diagnostic only; reads every entry once and runs both walks per value.
    """
    values = sorted({value for row in view.to_rows() for value in row})
    found = []
    for value in values:
        if horizontal_search(view, value).success and vertical_search(view, value).success:
            found.append(unwrap(value))
    return found
