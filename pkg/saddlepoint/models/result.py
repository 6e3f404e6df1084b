"""
Solver result and benchmark record models.
"""

from enum import Enum
from typing import Any, Optional
from pydantic import BaseModel, Field

from saddlepoint.models.matrix import Entry


class Algorithm(str, Enum):
    """Algorithm selector of the solver front-end."""
    AUTO = "auto"
    BASELINE = "baseline"
    SIMPLE = "simple"
    FAST = "fast"
    ALTERNATIVE = "alternative"


class InstanceFamily(str, Enum):
    """Generator families."""
    PLANTED_SSP = "planted-ssp"
    PLANTED_SP = "planted-sp"
    NO_SP = "no-sp"
    RANDOM = "random"
    CONSTANT = "constant"


class SspStatus(str, Enum):
    """Outcome of the strict-saddlepoint decision."""
    FOUND = "ssp_found"
    ABSENT = "no_ssp"


class SspOutcome(BaseModel):
    """
    Final strict-saddlepoint decision.

    FOUND entries have passed strict row/column verification on the root
    matrix; ABSENT is reported only after a PSP value was tested and rejected.
    """
    status: SspStatus = Field(..., description="ssp_found | no_ssp")
    entry: Optional[Entry] = Field(None, description="The strict saddlepoint when found")

    @property
    def found(self) -> bool:
        return self.status == SspStatus.FOUND

    @classmethod
    def absent(cls) -> "SspOutcome":
        return cls(status=SspStatus.ABSENT)

    @classmethod
    def of(cls, entry: Entry) -> "SspOutcome":
        return cls(status=SspStatus.FOUND, entry=entry)


class SolveStats(BaseModel):
    """Instrumentation collected around one solver call."""
    algorithm: Algorithm = Field(..., description="Algorithm that ran")
    rows: int = Field(..., ge=1, description="m")
    cols: int = Field(..., ge=1, description="n")
    queries: int = Field(0, ge=0, description="Base-matrix queries consumed")
    comparisons: int = Field(0, ge=0, description="Entry comparisons made")
    elapsed_ns: int = Field(0, ge=0, description="Wall time in nanoseconds")

    @property
    def elapsed_ms(self) -> float:
        return self.elapsed_ns / 1e6


class SpValue(BaseModel):
    """Saddlepoint value computed under the assumption that a saddlepoint exists."""
    value: Any = Field(..., description="Value of a pseudo-saddlepoint")
    entry: Entry = Field(..., description="Where the value was found")
    assumes_sp_exists: bool = Field(True, description="The value equals the SP value only if an SP exists")
    verified: bool = Field(False, description="The assumption itself is never checked")


class BenchRecord(BaseModel):
    """One (instance, algorithm) cell of a benchmark run."""
    algorithm: Algorithm = Field(..., description="Algorithm id")
    m: int = Field(..., ge=1, description="Rows")
    n: int = Field(..., ge=1, description="Columns")
    seed: int = Field(..., ge=0, description="Instance seed")
    family: InstanceFamily = Field(..., description="Instance family")
    queries: int = Field(..., ge=0, description="Base queries")
    comparisons: int = Field(..., ge=0, description="Comparisons")
    elapsed_ns: int = Field(..., ge=0, description="Wall time in nanoseconds")
    outcome: str = Field(..., description="ssp_found@row,col or no_ssp")
