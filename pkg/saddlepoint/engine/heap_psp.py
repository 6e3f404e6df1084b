"""
Baseline pseudo-saddlepoint algorithm over an active triplet set.

H starts as the main diagonal and shrinks by one triplet per reduce step,
each step querying exactly one new entry, so an n x n view costs at most
2n-1 queries. Throughout:

- P1: at most one triplet per row and per column.
- P2: every row missing from H has an entry >= max(H).
- P3: every column missing from H has an entry <= min(H).
"""

import logging
from typing import Any, NamedTuple, Optional, Sequence, Set

from sortedcontainers import SortedList

from saddlepoint.engine.view import MatrixView, require_square, unwrap
from saddlepoint.errors import ContractError, InvariantError
from saddlepoint.models.matrix import Entry

logger = logging.getLogger(__name__)


class Triplet(NamedTuple):
    """A queried entry; field order gives the (value, row, col) ordering of H."""
    value: Any
    row: int
    col: int


class ActiveSet:
    """
    The set H with O(lg n) min/max access.

    P1 is enforced on insert. Ordering comparisons made inside the container
    are not charged to the view counters.
    """

    def __init__(self, triplets: Sequence[Triplet] = ()):
        self._items = SortedList()
        self._rows: Set[int] = set()
        self._cols: Set[int] = set()
        for triplet in triplets:
            self.insert(triplet)

    def __len__(self) -> int:
        return len(self._items)

    def __iter__(self):
        return iter(self._items)

    @property
    def rows(self) -> Set[int]:
        return set(self._rows)

    @property
    def cols(self) -> Set[int]:
        return set(self._cols)

    def peek_min(self) -> Triplet:
        return self._items[0]

    def peek_max(self) -> Triplet:
        return self._items[-1]

    def pop_min(self) -> Triplet:
        return self._discard(self._items.pop(0))

    def pop_max(self) -> Triplet:
        return self._discard(self._items.pop())

    def insert(self, triplet: Triplet) -> None:
        if triplet.row in self._rows or triplet.col in self._cols:
            raise InvariantError(
                f"Triplet at ({triplet.row}, {triplet.col}) shares a row or column with H"
            )
        self._items.add(triplet)
        self._rows.add(triplet.row)
        self._cols.add(triplet.col)

    def _discard(self, triplet: Triplet) -> Triplet:
        self._rows.discard(triplet.row)
        self._cols.discard(triplet.col)
        return triplet


def reduce_step(active: ActiveSet, view: MatrixView) -> int:
    """
    Shrink H by one triplet with a single query.

    The queried entry a sits in the row of min(H) and the column of max(H).
    Cases are tried in order:

    1. a <= min(H): drop max(H).
    2. a >= max(H): drop min(H).
    3. otherwise: drop both and insert a.

    Returns:
        The case number that fired.
    """
    if len(active) < 2:
        raise ContractError(f"reduce_step needs |H| >= 2, got {len(active)}")
    low = active.peek_min()
    high = active.peek_max()
    a = view.query(low.row, high.col)
    if view.le(a, low.value):
        active.pop_max()
        return 1
    if view.le(high.value, a):
        active.pop_min()
        return 2
    active.pop_min()
    active.pop_max()
    active.insert(Triplet(a, low.row, high.col))
    return 3


def diagonal_set(view: MatrixView, diagonal: Optional[Sequence[Any]] = None) -> ActiveSet:
    """Initial H from the main diagonal, queried unless `diagonal` supplies the values."""
    n = view.rows
    if diagonal is None:
        diagonal = [view.query(i, i) for i in range(1, n + 1)]
    elif len(diagonal) != n:
        raise ContractError(f"Expected {n} diagonal values, got {len(diagonal)}")
    return ActiveSet([Triplet(value, i, i) for i, value in enumerate(diagonal, 1)])


def psp_baseline(view: MatrixView, diagonal: Optional[Sequence[Any]] = None) -> Entry:
    """
    Pseudo-saddlepoint of a square view in at most 2n-1 queries.

    Args:
        view: Square view.
        diagonal: Precomputed diagonal values in the order of `view`.

    Returns:
        The surviving entry, in root coordinates.
    """
    require_square(view, "psp_baseline")
    active = diagonal_set(view, diagonal)
    while len(active) > 1:
        reduce_step(active, view)
    survivor = active.peek_min()
    logger.debug("Baseline PSP on %dx%d: local (%d, %d) value %r",
                 view.rows, view.cols, survivor.row, survivor.col, unwrap(survivor.value))
    return view.entry(survivor.row, survivor.col, survivor.value)
