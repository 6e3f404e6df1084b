"""Algorithms of the Saddlepoint toolkit."""

from saddlepoint.engine.view import (
    ReversedValue,
    QueryCounters,
    MatrixView,
    BaseMatrix,
    ReflectView,
    SubView,
    PermutedView,
    as_view,
)
from saddlepoint.engine.oracle import oracle_scan, verify_psp, quadratic_sp
from saddlepoint.engine.staircase import (
    horizontal_search,
    vertical_search,
    verify_ssp_candidate,
    test_value,
    both_succeed_values,
)
from saddlepoint.engine.selection import select_rank
from saddlepoint.engine.budget import lg_star, ceil_lg, lg_lg
from saddlepoint.engine.heap_psp import Triplet, ActiveSet, reduce_step, psp_baseline
from saddlepoint.engine.recursive_psp import (
    BlockMatrixView,
    transform,
    psp_square_simple,
    psp_square_fast,
    psp_rect,
)
from saddlepoint.engine.alternating import phase1_step, phase2_pass, ssp_alternative
from saddlepoint.engine.solver import SaddlepointSolver

__all__ = [
    # Views
    "ReversedValue",
    "QueryCounters",
    "MatrixView",
    "BaseMatrix",
    "ReflectView",
    "SubView",
    "PermutedView",
    "as_view",
    # Oracle
    "oracle_scan",
    "verify_psp",
    "quadratic_sp",
    # Staircase
    "horizontal_search",
    "vertical_search",
    "verify_ssp_candidate",
    "test_value",
    "both_succeed_values",
    # PSP algorithms
    "select_rank",
    "lg_star",
    "ceil_lg",
    "lg_lg",
    "Triplet",
    "ActiveSet",
    "reduce_step",
    "psp_baseline",
    "BlockMatrixView",
    "transform",
    "psp_square_simple",
    "psp_square_fast",
    "psp_rect",
    # SSP algorithms
    "phase1_step",
    "phase2_pass",
    "ssp_alternative",
    "SaddlepointSolver",
]
