"""
Alternating elimination - an O(n lg lg n) strict-saddlepoint algorithm.

Works on an alive region of the input that always contains the SSP when one
exists, and is always viewed with at least as many rows as columns (through
the reflection when needed):

1. Elimination steps: test the median v of one pick per row against the
   region; a GREATER verdict removes every column holding a pick <= v, a
   LESS verdict every row holding a pick >= v. Repeats until the short side
   is at most n/lg n.
2. Long-side passes: columns keep disjoint row samples R_j whose minima m_j
   sit in a max-heap; extracting max m_j = a[i][j] deletes rows R_j - {i}.
   Repeats until m' <= 4n'.
3. Finish: baseline PSP of the small region, one feasibility test and a
   strict re-check against the whole input.

Both phases are capped at `config.phase_cap(lg lg n)` rounds; hitting a cap
falls back to the PSP-plus-test path on the whole input.
"""

import heapq
import logging
import math
from typing import List, Optional, Set, Tuple

from saddlepoint.config import config
from saddlepoint.engine.budget import lg_lg
from saddlepoint.engine.heap_psp import psp_baseline
from saddlepoint.engine.recursive_psp import psp_rect
from saddlepoint.engine.selection import select_rank
from saddlepoint.engine.staircase import test_value, verify_ssp_candidate
from saddlepoint.engine.view import MatrixView, require_square, reverse
from saddlepoint.errors import ContractError
from saddlepoint.models.region import AliveRegion, ColumnSample
from saddlepoint.models.result import SspOutcome
from saddlepoint.models.search import SearchVerdict, VerdictKind

logger = logging.getLogger(__name__)


def short_side_limit(n: int) -> float:
    """n / lg n, the short-side size that ends the elimination steps."""
    if n <= 2:
        return float(n)
    return n / math.log2(n)


def oriented_view(view: MatrixView, region: AliveRegion) -> MatrixView:
    """The region as a view with m' >= n' (reflected when it has more columns)."""
    sub = view.subview(region.rows, region.cols)
    return sub.reflect() if region.flipped else sub


def to_input(region: AliveRegion, flipped: bool, i: int, j: int) -> Tuple[int, int]:
    """Input-view coordinates of local position (i, j) of the oriented region view."""
    if flipped:
        return (region.rows[j - 1], region.cols[i - 1])
    return (region.rows[i - 1], region.cols[j - 1])


def _drop_local_rows(region: AliveRegion, flipped: bool, local: Set[int]) -> None:
    if flipped:
        region.drop_cols({region.cols[r - 1] for r in local})
    else:
        region.drop_rows({region.rows[r - 1] for r in local})


def _drop_local_cols(region: AliveRegion, flipped: bool, local: Set[int]) -> None:
    if flipped:
        region.drop_rows({region.rows[c - 1] for c in local})
    else:
        region.drop_cols({region.cols[c - 1] for c in local})


def phase1_step(region: AliveRegion, view: MatrixView) -> Optional[SearchVerdict]:
    """
    One elimination step on `region` (mutated in place).

    Returns:
        A FOUND or ABSENT verdict for the region when the step settles it,
        with `position` in input-view coordinates; None after eliminating.
    """
    flipped = region.flipped
    work = oriented_view(view, region)
    m, n = work.rows, work.cols

    picks = []
    for i in range(1, m + 1):
        j = -(-i * n // m)
        picks.append((i, j, work.query(i, j)))
    pivot = select_rank([value for _, _, value in picks], (m + 1) // 2, work.counters)

    verdict = test_value(work, pivot)
    if verdict.kind == VerdictKind.FOUND:
        return SearchVerdict(kind=verdict.kind, entry=verdict.entry, position=to_input(region, flipped, *verdict.position))
    if verdict.kind == VerdictKind.ABSENT:
        return verdict

    if verdict.kind == VerdictKind.GREATER:
        doomed = {j for _, j, value in picks if work.le(value, pivot)}
        _drop_local_cols(region, flipped, doomed)
    else:
        doomed = {i for i, _, value in picks if work.le(pivot, value)}
        _drop_local_rows(region, flipped, doomed)
    logger.debug("Elimination step on %dx%d: %s, removed %d", m, n, verdict.kind.value, len(doomed))
    return None


def _sample_column(work: MatrixView, column: int, rows: List[int]) -> ColumnSample:
    minimum, witness = work.query(rows[0], column), rows[0]
    for i in rows[1:]:
        value = work.query(i, column)
        if work.lt(value, minimum):
            minimum, witness = value, i
    return ColumnSample(column=column, rows=rows, minimum=minimum, witness=witness)


def phase2_pass(region: AliveRegion, view: MatrixView, size: int) -> int:
    """
    One long-side reduction pass on `region` (mutated in place).

    Args:
        region: Alive region of `view`.
        view: The input view.
        size: Side n of the input, bounding the admissible short side.

    Returns:
        Number of long-side lines deleted (0 when m' <= 4n' already).
    """
    if region.short_side > short_side_limit(size):
        raise ContractError(
            f"Long-side pass needs a short side <= n/lg n, got {region.short_side} for n={size}"
        )
    if region.long_side <= 4 * region.short_side:
        return 0

    flipped = region.flipped
    work = oriented_view(view, region)
    m, n = work.rows, work.cols
    sample = m // (2 * n)

    samples = {j: _sample_column(work, j, list(range((j - 1) * sample + 1, j * sample + 1))) for j in range(1, n + 1)}
    pool = list(range(n * sample + 1, m + 1))
    pool.reverse()
    heap = [(reverse(p.minimum), j) for j, p in samples.items()]
    heapq.heapify(heap)

    deleted: Set[int] = set()
    for _ in range(n):
        _, j = heapq.heappop(heap)
        drawn = samples[j]
        deleted.update(r for r in drawn.rows if r != drawn.witness)
        fresh = [pool.pop() for _ in range(min(sample, len(pool)))]
        if fresh:
            drawn = _sample_column(work, j, fresh)
        else:
            drawn = ColumnSample(column=j, rows=[drawn.witness], minimum=drawn.minimum, witness=drawn.witness)
        samples[j] = drawn
        heapq.heappush(heap, (reverse(drawn.minimum), j))

    _drop_local_rows(region, flipped, deleted)
    logger.debug("Long-side pass on %dx%d: deleted %d rows", m, n, len(deleted))
    return len(deleted)


class AlternatingEliminator:
    """
    Runs the three stages of the alternating elimination on one square view.
    """

    def __init__(self, view: MatrixView):
        self.view = view
        self.size = require_square(view, "ssp_alternative")
        self.region = AliveRegion.full(self.size, self.size)
        self.cap = config.phase_cap(lg_lg(self.size))
        self.limit = short_side_limit(self.size)
        self.rounds = {"elimination": 0, "long_side": 0}

    def run(self) -> SspOutcome:
        """Decide whether the view has a strict saddlepoint."""
        if self.size == 1:
            return SspOutcome.of(self.view.entry(1, 1))

        outcome = self._step_eliminate()
        if outcome is not None:
            return outcome
        if not self._step_reduce_long_side():
            return self._fallback("long-side pass cap reached")
        return self._step_finish()

    def _confirm(self, i: int, j: int) -> SspOutcome:
        if verify_ssp_candidate(self.view, i, j):
            return SspOutcome.of(self.view.entry(i, j))
        return SspOutcome.absent()

    def _step_eliminate(self) -> Optional[SspOutcome]:
        while self.region.short_side > self.limit:
            if self.rounds["elimination"] >= self.cap:
                return self._fallback("elimination cap reached")
            self.rounds["elimination"] += 1
            verdict = phase1_step(self.region, self.view)
            if verdict is not None:
                if verdict.found:
                    return self._confirm(*verdict.position)
                return SspOutcome.absent()
            if self.region.is_empty:
                return SspOutcome.absent()
        return None

    def _step_reduce_long_side(self) -> bool:
        while self.region.long_side > 4 * self.region.short_side:
            if self.rounds["long_side"] >= self.cap:
                return False
            self.rounds["long_side"] += 1
            phase2_pass(self.region, self.view, self.size)
        return True

    def _step_finish(self) -> SspOutcome:
        flipped = self.region.flipped
        work = oriented_view(self.view, self.region)
        entry = psp_rect(work, psp_baseline)
        verdict = test_value(work, work.orient(entry.value))
        if not verdict.found:
            return SspOutcome.absent()
        return self._confirm(*to_input(self.region, flipped, *verdict.position))

    def _fallback(self, reason: str) -> SspOutcome:
        logger.info("Alternating elimination falls back to the PSP path: %s", reason)
        entry = psp_rect(self.view)
        verdict = test_value(self.view, self.view.orient(entry.value))
        return SspOutcome.of(verdict.entry) if verdict.found else SspOutcome.absent()


def ssp_alternative(view: MatrixView) -> SspOutcome:
    """
    Strict saddlepoint of a square view in O(n lg lg n) queries.

    Found entries are strictly verified against the whole view.
    """
    eliminator = AlternatingEliminator(view)
    outcome = eliminator.run()
    logger.debug("Alternating elimination on n=%d: %s after %s",
                 eliminator.size, outcome.status.value, eliminator.rounds)
    return outcome
