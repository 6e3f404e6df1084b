"""
Matrix views - the only channel through which algorithms read entries.

A view chain always ends in a `BaseMatrix` holding the dense data and the
`QueryCounters` shared by every layer on top of it. Layers:

- `ReflectView`: the n x m reflection -A^T, realised by transposing indices
  and reversing comparisons (no arithmetic on values).
- `SubView`: rows/columns restricted to index lists.
- `PermutedView`: row/column permutation with O(1) swaps plus a diagonal
  overlay, used by Transform.

Values returned by `query` are in the order of the view they come from: under
an odd number of reflections they are wrapped in `ReversedValue`. Entries
(`entry`, `locate`) are always unwound to root coordinates and raw values.
"""

from abc import ABC, abstractmethod
from typing import Any, Dict, List, NamedTuple, Sequence, Tuple

import numpy as np

from saddlepoint.errors import ContractError
from saddlepoint.models.matrix import Entry


class ReversedValue:
    """Order-reversal wrapper: a < b iff a.value > b.value."""

    __slots__ = ("value",)

    def __init__(self, value: Any):
        self.value = value

    def __lt__(self, other: "ReversedValue") -> bool:
        return self.value > other.value

    def __le__(self, other: "ReversedValue") -> bool:
        return self.value >= other.value

    def __gt__(self, other: "ReversedValue") -> bool:
        return self.value < other.value

    def __ge__(self, other: "ReversedValue") -> bool:
        return self.value <= other.value

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ReversedValue) and self.value == other.value

    def __hash__(self) -> int:
        return hash(("reversed", self.value))

    def __repr__(self) -> str:
        return f"ReversedValue({self.value!r})"


def reverse(value: Any) -> Any:
    """Flip the order of a value; reversing twice gives the raw value back."""
    if isinstance(value, ReversedValue):
        return value.value
    return ReversedValue(value)


def unwrap(value: Any) -> Any:
    """The raw value behind a possibly reversed one."""
    if isinstance(value, ReversedValue):
        return value.value
    return value


class CounterSnapshot(NamedTuple):
    queries: int
    comparisons: int


class QueryCounters:
    """
    Monotone query and comparison counters of one root matrix.

    Each root is owned by a single solve; independent roots never share
    counters, so no locking is done.
    """

    __slots__ = ("queries", "comparisons")

    def __init__(self) -> None:
        self.queries = 0
        self.comparisons = 0

    def lt(self, a: Any, b: Any) -> bool:
        self.comparisons += 1
        return a < b

    def le(self, a: Any, b: Any) -> bool:
        self.comparisons += 1
        return a <= b

    def snapshot(self) -> CounterSnapshot:
        return CounterSnapshot(self.queries, self.comparisons)

    def since(self, start: CounterSnapshot) -> CounterSnapshot:
        """Counts accumulated after `start` was taken."""
        return CounterSnapshot(self.queries - start.queries, self.comparisons - start.comparisons)


class MatrixView(ABC):
    """
    Read-only, instrumented access to an m x n matrix with 1-based indices.

    Subclasses implement `_fetch` (unchecked read) and `locate` (unchecked
    mapping to root coordinates); `query` adds the range check.
    """

    rows: int
    cols: int
    counters: QueryCounters
    reflected: bool

    @abstractmethod
    def _fetch(self, i: int, j: int) -> Any:
        ...

    @abstractmethod
    def locate(self, i: int, j: int) -> Tuple[int, int]:
        """Root coordinates of local position (i, j)."""

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def check_index(self, i: int, j: int) -> None:
        if not (1 <= i <= self.rows and 1 <= j <= self.cols):
            raise IndexError(f"Position ({i}, {j}) outside {self.rows}x{self.cols} view")

    def query(self, i: int, j: int) -> Any:
        """Entry at (i, j) after all layered transforms."""
        self.check_index(i, j)
        return self._fetch(i, j)

    def entry(self, i: int, j: int, value: Any = None) -> Entry:
        """
        Root-coordinate entry for local position (i, j).

        Pass `value` when it was already read to avoid a second query.
        """
        self.check_index(i, j)
        if value is None:
            value = self._fetch(i, j)
        row, col = self.locate(i, j)
        return Entry(row=row, col=col, value=unwrap(value))

    def orient(self, raw: Any) -> Any:
        """Bring a raw (root-domain) value into this view's order."""
        return ReversedValue(raw) if self.reflected else raw

    def lt(self, a: Any, b: Any) -> bool:
        """Counted strict comparison."""
        return self.counters.lt(a, b)

    def le(self, a: Any, b: Any) -> bool:
        """Counted weak comparison."""
        return self.counters.le(a, b)

    def reflect(self) -> "MatrixView":
        return ReflectView(self)

    def subview(self, rows: Sequence[int], cols: Sequence[int]) -> "MatrixView":
        return SubView(self, rows, cols)

    def permutable(self) -> "PermutedView":
        return PermutedView(self)

    def row_values(self, i: int) -> List[Any]:
        return [self.query(i, j) for j in range(1, self.cols + 1)]

    def to_rows(self) -> List[List[Any]]:
        """Every entry, row by row (m*n queries)."""
        return [self.row_values(i) for i in range(1, self.rows + 1)]


class BaseMatrix(MatrixView):
    """Dense root matrix; counts every read."""

    def __init__(self, data: Any):
        self.counters = QueryCounters()
        self.reflected = False
        if isinstance(data, np.ndarray):
            if data.ndim != 2 or data.size == 0:
                raise ContractError(f"Expected a non-empty 2-D array, got shape {data.shape}")
            self.rows, self.cols = data.shape
            self._read = data.item
            self._data = None
        else:
            rows = [list(row) for row in data]
            if not rows or not rows[0]:
                raise ContractError("Matrix must have at least one row and one column")
            width = len(rows[0])
            for k, row in enumerate(rows, 1):
                if len(row) != width:
                    raise ContractError(f"Row {k} has {len(row)} entries, expected {width}")
            self.rows, self.cols = len(rows), width
            self._read = None
            self._data = rows

    def _fetch(self, i: int, j: int) -> Any:
        self.counters.queries += 1
        if self._read is not None:
            return self._read(i - 1, j - 1)
        return self._data[i - 1][j - 1]

    def locate(self, i: int, j: int) -> Tuple[int, int]:
        return (i, j)


class ReflectView(MatrixView):
    """The reflection -A^T: transposed indices, reversed order."""

    def __init__(self, parent: MatrixView):
        self._parent = parent
        self.rows, self.cols = parent.cols, parent.rows
        self.counters = parent.counters
        self.reflected = not parent.reflected

    def _fetch(self, i: int, j: int) -> Any:
        return reverse(self._parent._fetch(j, i))

    def locate(self, i: int, j: int) -> Tuple[int, int]:
        return self._parent.locate(j, i)

    def reflect(self) -> MatrixView:
        return self._parent


class SubView(MatrixView):
    """Restriction to the given parent rows and columns (1-based, in order)."""

    def __init__(self, parent: MatrixView, rows: Sequence[int], cols: Sequence[int]):
        rows, cols = list(rows), list(cols)
        if not rows or not cols:
            raise ContractError("Subview needs non-empty row and column sets")
        for r in rows:
            if not 1 <= r <= parent.rows:
                raise IndexError(f"Row {r} outside 1..{parent.rows}")
        for c in cols:
            if not 1 <= c <= parent.cols:
                raise IndexError(f"Column {c} outside 1..{parent.cols}")
        self._parent = parent
        self._rows = rows
        self._cols = cols
        self.rows, self.cols = len(rows), len(cols)
        self.counters = parent.counters
        self.reflected = parent.reflected

    def _fetch(self, i: int, j: int) -> Any:
        return self._parent._fetch(self._rows[i - 1], self._cols[j - 1])

    def locate(self, i: int, j: int) -> Tuple[int, int]:
        return self._parent.locate(self._rows[i - 1], self._cols[j - 1])

    def subview(self, rows: Sequence[int], cols: Sequence[int]) -> MatrixView:
        rows, cols = list(rows), list(cols)
        for r in rows:
            if not 1 <= r <= self.rows:
                raise IndexError(f"Row {r} outside 1..{self.rows}")
        for c in cols:
            if not 1 <= c <= self.cols:
                raise IndexError(f"Column {c} outside 1..{self.cols}")
        return SubView(self._parent, [self._rows[r - 1] for r in rows], [self._cols[c - 1] for c in cols])


class PermutedView(MatrixView):
    """
    Row/column permutation layer with a diagonal overlay.

    Swaps are O(1) bookkeeping. Overlays are keyed on the current coordinates
    (i, i) and take precedence over the permutation; reading an overlaid
    position consumes no base query. Each overlay remembers the root entry its
    value was read from, which is what `locate` reports for it.
    """

    def __init__(self, parent: MatrixView):
        self._parent = parent
        self.rows, self.cols = parent.rows, parent.cols
        self.counters = parent.counters
        self.reflected = parent.reflected
        self._row_map: List[int] = list(range(1, self.rows + 1))
        self._col_map: List[int] = list(range(1, self.cols + 1))
        self._diagonal: Dict[int, Tuple[Any, Tuple[int, int]]] = {}

    def _fetch(self, i: int, j: int) -> Any:
        if i == j and self._diagonal:
            hit = self._diagonal.get(i)
            if hit is not None:
                return hit[0]
        return self._parent._fetch(self._row_map[i - 1], self._col_map[j - 1])

    def locate(self, i: int, j: int) -> Tuple[int, int]:
        if i == j and self._diagonal:
            hit = self._diagonal.get(i)
            if hit is not None:
                return hit[1]
        return self._parent.locate(self._row_map[i - 1], self._col_map[j - 1])

    def swap_rows(self, a: int, b: int) -> None:
        if not (1 <= a <= self.rows and 1 <= b <= self.rows):
            raise IndexError(f"Row swap ({a}, {b}) outside 1..{self.rows}")
        self._row_map[a - 1], self._row_map[b - 1] = self._row_map[b - 1], self._row_map[a - 1]

    def swap_cols(self, a: int, b: int) -> None:
        if not (1 <= a <= self.cols and 1 <= b <= self.cols):
            raise IndexError(f"Column swap ({a}, {b}) outside 1..{self.cols}")
        self._col_map[a - 1], self._col_map[b - 1] = self._col_map[b - 1], self._col_map[a - 1]

    def overlay_diagonal(self, i: int, value: Any, source: Tuple[int, int]) -> None:
        """
        Make (i, i) read as `value` from now on.

        `source` is the local position `value` was read from; its root
        coordinates are resolved now, before any later swap.
        """
        if not self.is_square:
            raise ContractError(f"Diagonal overlay needs a square view, got {self.rows}x{self.cols}")
        self.check_index(i, i)
        self.check_index(*source)
        self._diagonal[i] = (value, self.locate(*source))


def as_view(matrix: Any) -> MatrixView:
    """Wrap raw data in a `BaseMatrix` unless it already is a view."""
    if isinstance(matrix, MatrixView):
        return matrix
    return BaseMatrix(matrix)


def require_square(view: MatrixView, operation: str) -> int:
    """Side of a square view; `ContractError` otherwise."""
    if not view.is_square:
        raise ContractError(f"{operation} needs a square matrix, got {view.rows}x{view.cols}")
    return view.rows
