"""Data models for the Saddlepoint toolkit."""

from saddlepoint.models.matrix import (
    Entry,
    Interval,
    OracleReport,
)
from saddlepoint.models.search import (
    SearchMode,
    StaircasePath,
    VerdictKind,
    SearchVerdict,
)
from saddlepoint.models.blocks import (
    BlockDecomposition,
    DiagonalSection,
    TransformState,
)
from saddlepoint.models.region import (
    AliveRegion,
    ColumnSample,
)
from saddlepoint.models.result import (
    Algorithm,
    InstanceFamily,
    SspStatus,
    SspOutcome,
    SolveStats,
    SpValue,
    BenchRecord,
)

__all__ = [
    # Matrix models
    "Entry",
    "Interval",
    "OracleReport",
    # Search models
    "SearchMode",
    "StaircasePath",
    "VerdictKind",
    "SearchVerdict",
    # Block models
    "BlockDecomposition",
    "DiagonalSection",
    "TransformState",
    # Elimination models
    "AliveRegion",
    "ColumnSample",
    # Result models
    "Algorithm",
    "InstanceFamily",
    "SspStatus",
    "SspOutcome",
    "SolveStats",
    "SpValue",
    "BenchRecord",
]
