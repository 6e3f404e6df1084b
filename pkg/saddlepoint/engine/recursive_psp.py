"""
Bootstrapped pseudo-saddlepoint algorithms.

Both square algorithms cut an n x n view into blocks of side l = ceil(lg n)
and run the baseline algorithm over the matrix A' of block PSP values, each
A' entry materialised on first touch by a recursive call:

- `psp_square_simple` recurses on every touched block.
- `psp_square_fast` first runs `transform`, after which most diagonal boxes
  have a uniform diagonal and need no recursion at all.

`psp_rect` reduces an m x n view to ceil(m/n) square chunks.
"""

import logging
from typing import Any, Callable, Dict, List, Optional, Tuple

from saddlepoint.config import config
from saddlepoint.engine.budget import ceil_lg
from saddlepoint.engine.heap_psp import psp_baseline
from saddlepoint.engine.selection import select_rank
from saddlepoint.engine.view import MatrixView, PermutedView, require_square
from saddlepoint.errors import ContractError
from saddlepoint.models.blocks import BlockDecomposition, DiagonalSection, TransformState
from saddlepoint.models.matrix import Entry

logger = logging.getLogger(__name__)

BlockSolver = Callable[[MatrixView], Entry]


class BlockMatrixView(MatrixView):
    """
    The conceptual matrix A' whose (i, j) entry is a PSP value of block
    A[R_i, C_j].

    Entries are memoised per block; reading A' costs only the queries the
    block solver makes on the underlying view.
    """

    def __init__(self, view: MatrixView, decomposition: BlockDecomposition, solve_block: BlockSolver):
        self._view = view
        self._decomposition = decomposition
        self._solve_block = solve_block
        self._memo: Dict[Tuple[int, int], Tuple[Any, Entry]] = {}
        self.rows = self.cols = decomposition.count
        self.counters = view.counters
        self.reflected = view.reflected

    @property
    def solved(self) -> int:
        """Number of blocks materialised so far."""
        return len(self._memo)

    def block(self, bi: int, bj: int) -> MatrixView:
        """The underlying block A[R_bi, C_bj]."""
        return self._view.subview(self._decomposition.indices(bi), self._decomposition.indices(bj))

    def seed(self, b: int, value: Any, entry: Entry) -> None:
        """Install a known PSP for diagonal box b; `value` is in the view's order."""
        self._memo[(b, b)] = (value, entry)

    def _resolve(self, bi: int, bj: int) -> Tuple[Any, Entry]:
        hit = self._memo.get((bi, bj))
        if hit is None:
            entry = self._solve_block(self.block(bi, bj))
            hit = (self._view.orient(entry.value), entry)
            self._memo[(bi, bj)] = hit
        return hit

    def _fetch(self, i: int, j: int) -> Any:
        return self._resolve(i, j)[0]

    def locate(self, i: int, j: int) -> Tuple[int, int]:
        return self._resolve(i, j)[1].position


def transform(board: PermutedView, threshold: int) -> TransformState:
    """
    Make most of the diagonal of `board` uniform by antidiagonal medians.

    Each round on the trailing size x size quadrant selects the median v of
    its antidiagonal, partitions the antidiagonal three-way around v by paired
    row/column swaps, overlays v on the first ceil(size/2) diagonal positions
    and continues on the remaining quadrant, until size <= threshold.

    Args:
        board: Square permutable view; it is modified in place.
        threshold: Stopping size t.

    Returns:
        TransformState describing the uniform diagonal sections.
    """
    n = require_square(board, "transform")
    if not isinstance(board, PermutedView):
        raise ContractError("transform needs a permutable view")
    lo, size = 0, n
    sections: List[DiagonalSection] = []

    while size > threshold:
        def position(k: int) -> Tuple[int, int]:
            return (lo + size - k + 1, lo + k)

        values = [board.query(*position(k)) for k in range(1, size + 1)]
        half = (size + 1) // 2
        pivot = select_rank(values, half, board.counters)

        def swap(a: int, b: int) -> None:
            if a == b:
                return
            values[a - 1], values[b - 1] = values[b - 1], values[a - 1]
            board.swap_rows(position(a)[0], position(b)[0])
            board.swap_cols(position(a)[1], position(b)[1])

        low, mid, high = 1, 1, size
        while mid <= high:
            item = values[mid - 1]
            if board.lt(item, pivot):
                swap(low, mid)
                low += 1
                mid += 1
            elif board.lt(pivot, item):
                swap(mid, high)
                high -= 1
            else:
                mid += 1

        source = position(half)
        origin = board.entry(*source, value=values[half - 1])
        for i in range(1, half + 1):
            board.overlay_diagonal(lo + i, pivot, source)
        sections.append(DiagonalSection(start=lo + 1, end=lo + half, value=pivot, source=origin))
        logger.debug("Transform round: diagonal %d..%d set to %r", lo + 1, lo + half, origin.value)
        lo += half
        size -= half

    return TransformState(size=n, threshold=threshold, sections=sections, untouched_start=lo + 1, view=board)


def _at_base(n: int, cutoff: int, max_depth: Optional[int], depth: int) -> bool:
    return n <= max(cutoff, 1) or (max_depth is not None and depth >= max_depth)


def psp_square_simple(
    view: MatrixView,
    cutoff: Optional[int] = None,
    max_depth: Optional[int] = None,
    _depth: int = 0,
) -> Entry:
    """
    PSP of a square view with O(n 2^(lg* n)) queries.

    Args:
        view: Square view.
        cutoff: Side at or below which the baseline runs (config.psp_cutoff).
        max_depth: Recursion depth at which to fall back to the baseline.

    Returns:
        A PSP entry in root coordinates.
    """
    n = require_square(view, "psp_square_simple")
    cutoff = config.psp_cutoff if cutoff is None else cutoff
    if _at_base(n, cutoff, max_depth, _depth):
        return psp_baseline(view)

    decomposition = BlockDecomposition.build(n, ceil_lg(n))
    blocks = BlockMatrixView(
        view,
        decomposition,
        lambda block: psp_square_simple(block, cutoff, max_depth, _depth + 1),
    )
    winner = psp_baseline(blocks)
    logger.debug("Simple PSP depth %d on n=%d: %d of %d blocks solved",
                 _depth, n, blocks.solved, decomposition.count ** 2)
    return winner


def psp_square_fast(
    view: MatrixView,
    cutoff: Optional[int] = None,
    max_depth: Optional[int] = None,
    _depth: int = 0,
) -> Entry:
    """
    PSP of a square view with O(n lg* n) queries.

    Diagonal boxes inside one uniform Transform section are answered by the
    section's median; the remaining diagonal boxes run the baseline and
    off-diagonal blocks recurse on the transformed view.
    """
    n = require_square(view, "psp_square_fast")
    cutoff = config.psp_cutoff if cutoff is None else cutoff
    if _at_base(n, cutoff, max_depth, _depth):
        return psp_baseline(view)

    side = ceil_lg(n)
    board = view.permutable()
    state = transform(board, 2 * side)
    decomposition = BlockDecomposition.build(n, side)
    blocks = BlockMatrixView(
        board,
        decomposition,
        lambda block: psp_square_fast(block, cutoff, max_depth, _depth + 1),
    )

    uniform = 0
    for b in range(1, decomposition.count + 1):
        start, end = decomposition.intervals[b - 1]
        section = state.covering(start, end)
        if section is not None:
            blocks.seed(b, section.value, section.source)
            uniform += 1
        else:
            entry = psp_baseline(blocks.block(b, b))
            blocks.seed(b, board.orient(entry.value), entry)

    winner = psp_baseline(blocks)
    logger.debug("Fast PSP depth %d on n=%d: %d uniform boxes, %d blocks solved",
                 _depth, n, uniform, blocks.solved)
    return winner


def chunk_starts(m: int, n: int) -> List[int]:
    """First rows of the n-row chunks covering 1..m (m >= n); the last may overlap."""
    starts = list(range(1, m - n + 2, n))
    if m % n:
        starts.append(m - n + 1)
    return starts


def psp_rect(view: MatrixView, square_solver: Optional[BlockSolver] = None) -> Entry:
    """
    PSP of an m x n view via square chunks.

    Wide views are handled through their reflection. The tall view is split
    into n x n row chunks and the chunk PSP of minimum value is returned.

    Args:
        view: Any view.
        square_solver: PSP algorithm for the square chunks (psp_square_fast).
    """
    solver = square_solver or psp_square_fast
    if view.rows < view.cols:
        return psp_rect(view.reflect(), solver)
    m, n = view.rows, view.cols
    if m == n:
        return solver(view)

    columns = range(1, n + 1)
    best: Optional[Entry] = None
    best_value: Any = None
    for start in chunk_starts(m, n):
        entry = solver(view.subview(range(start, start + n), columns))
        value = view.orient(entry.value)
        if best is None or view.lt(value, best_value):
            best, best_value = entry, value
    logger.debug("Rectangular PSP on %dx%d over %d chunks: %r", m, n, len(chunk_starts(m, n)), best.value)
    return best
