"""
Solver - front-end combining PSP computation with the feasibility test.

A PSP value s is computed by the selected algorithm and tested with the
staircase test. Since every PSP of a matrix with a strict saddlepoint has the
saddlepoint's value, a failed test proves that no SSP exists.
"""

import logging
import time
from typing import Any, Callable, List, Optional, Tuple

from saddlepoint.config import config
from saddlepoint.engine.alternating import ssp_alternative
from saddlepoint.engine.heap_psp import psp_baseline
from saddlepoint.engine.oracle import oracle_scan, verify_psp
from saddlepoint.engine.recursive_psp import psp_rect, psp_square_fast, psp_square_simple
from saddlepoint.engine.staircase import horizontal_search, test_value
from saddlepoint.engine.view import MatrixView, as_view
from saddlepoint.errors import InvariantError
from saddlepoint.models.matrix import Entry
from saddlepoint.models.result import Algorithm, SolveStats, SpValue, SspOutcome

logger = logging.getLogger(__name__)


class SaddlepointSolver:
    """
    Entry point for SSP decisions, SP values and SP location.

    Accepts any `MatrixView` or raw row data (wrapped in a fresh `BaseMatrix`).
    """

    def __init__(self, cutoff: Optional[int] = None, max_depth: Optional[int] = None):
        """
        Initialize the solver.

        Args:
            cutoff: Base-case side of the recursive algorithms (config.psp_cutoff)
            max_depth: Early-stopping depth (config.psp_max_depth)
        """
        self.cutoff = config.psp_cutoff if cutoff is None else cutoff
        self.max_depth = config.psp_max_depth if max_depth is None else max_depth

    def _square_solver(self, algorithm: Algorithm) -> Callable[[MatrixView], Entry]:
        if algorithm == Algorithm.BASELINE:
            return psp_baseline
        if algorithm == Algorithm.SIMPLE:
            return lambda view: psp_square_simple(view, self.cutoff, self.max_depth)
        return lambda view: psp_square_fast(view, self.cutoff, self.max_depth)

    def psp(self, matrix: Any, algorithm: Algorithm = Algorithm.AUTO) -> Entry:
        """
        A pseudo-saddlepoint of any m x n matrix.

        `alternative` has no PSP-only mode and runs the default path.
        """
        view = as_view(matrix)
        return psp_rect(view, self._square_solver(algorithm))

    def find_ssp(self, matrix: Any, algorithm: Algorithm = Algorithm.AUTO) -> Tuple[SspOutcome, SolveStats]:
        """
        Decide whether the matrix has a strict saddlepoint.

        Args:
            matrix: View or raw rows.
            algorithm: PSP algorithm; `alternative` on a non-square input runs `auto`.

        Returns:
            (SspOutcome, SolveStats) with counts taken over this call only.
        """
        view = as_view(matrix)
        if algorithm == Algorithm.ALTERNATIVE and not view.is_square:
            logger.info("Alternative algorithm needs a square input; using auto for %dx%d", view.rows, view.cols)
            algorithm = Algorithm.AUTO

        start = view.counters.snapshot()
        started = time.perf_counter_ns()
        if algorithm == Algorithm.ALTERNATIVE:
            outcome = ssp_alternative(view)
        else:
            entry = self.psp(view, algorithm)
            verdict = test_value(view, view.orient(entry.value))
            outcome = SspOutcome.of(verdict.entry) if verdict.found else SspOutcome.absent()
        elapsed = time.perf_counter_ns() - started
        used = view.counters.since(start)

        stats = SolveStats(
            algorithm=algorithm,
            rows=view.rows,
            cols=view.cols,
            queries=used.queries,
            comparisons=used.comparisons,
            elapsed_ns=elapsed,
        )
        logger.info("find_ssp %s on %dx%d: %s (%d queries, %d comparisons)",
                    algorithm.value, view.rows, view.cols, outcome.status.value, used.queries, used.comparisons)
        return outcome, stats

    def sp_value_assuming_exists(self, matrix: Any, algorithm: Algorithm = Algorithm.AUTO) -> SpValue:
        """
        The saddlepoint value, provided a saddlepoint exists.

        The assumption is not checked; without a saddlepoint the result is
        merely some PSP value.
        """
        entry = self.psp(matrix, algorithm)
        return SpValue(value=entry.value, entry=entry)

    def locate_sp(self, matrix: Any, value: Any) -> List[Entry]:
        """
        Saddlepoints of value `value` in O(k(m+n)) queries, k its multiplicity.

        Only columns where the horizontal walk met `value` are scanned, so the
        result need not list every saddlepoint of the matrix. An empty list
        means no saddlepoint of that value was found.
        """
        view = as_view(matrix)
        s = view.orient(value)
        path = horizontal_search(view, s, track_ties=True)

        found = []
        for col in path.tie_columns:
            for row in range(1, view.rows + 1):
                q = view.query(row, col)
                if view.le(q, s) and view.le(s, q) and self._is_saddlepoint(view, row, col, s):
                    found.append(view.entry(row, col, q))
        logger.info("locate_sp: %d tie columns, %d saddlepoints", len(path.tie_columns), len(found))
        return found

    @staticmethod
    def _is_saddlepoint(view: MatrixView, row: int, col: int, s: Any) -> bool:
        for j in range(1, view.cols + 1):
            if j != col and view.lt(s, view.query(row, j)):
                return False
        for i in range(1, view.rows + 1):
            if i != row and view.lt(view.query(i, col), s):
                return False
        return True

    def cross_check(self, matrix: Any, outcome: SspOutcome) -> None:
        """
        Compare an outcome with the brute-force oracle.

        Raises:
            InvariantError: The oracle disagrees.
        """
        report = oracle_scan(as_view(matrix))
        expected = report.ssp.position if report.ssp else None
        actual = outcome.entry.position if outcome.entry else None
        if expected != actual:
            raise InvariantError(f"Oracle reports SSP {expected}, solver reported {actual}")

    def check_psp(self, matrix: Any, entry: Entry) -> bool:
        """Whether the root value of `entry` is a PSP value of the matrix."""
        view = as_view(matrix)
        return verify_psp(view, view.orient(entry.value))
