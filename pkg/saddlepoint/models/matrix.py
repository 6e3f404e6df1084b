"""
Matrix entry data models.

Entries are always reported in root-matrix coordinates (1-based) and carry the
original value stored in the base matrix, whatever views they were found
through.
"""

from typing import Any, List, Optional
from pydantic import BaseModel, ConfigDict, Field


class Entry(BaseModel):
    """A single matrix entry."""
    model_config = ConfigDict(frozen=True)

    row: int = Field(..., ge=1, description="Row index in the root matrix (1-based)")
    col: int = Field(..., ge=1, description="Column index in the root matrix (1-based)")
    value: Any = Field(..., description="Original value stored at (row, col)")

    @property
    def position(self) -> tuple:
        """(row, col) pair."""
        return (self.row, self.col)


class Interval(BaseModel):
    """
    The PSP interval [C, R].

    C is the maximum of the column minima and R the minimum of the row maxima,
    both taken in the order of the view that was scanned. Values are reported
    in the original domain, so for a reflected view `lower` compares above
    `upper` in the raw order.
    """
    lower: Any = Field(..., description="C, maximum of column minima")
    upper: Any = Field(..., description="R, minimum of row maxima")


class OracleReport(BaseModel):
    """Brute-force ground truth for one matrix."""
    rows: int = Field(..., ge=1, description="Number of rows of the scanned view")
    cols: int = Field(..., ge=1, description="Number of columns of the scanned view")
    row_maxima: List[Entry] = Field(default_factory=list, description="r(i): one maximum per row")
    col_minima: List[Entry] = Field(default_factory=list, description="c(j): one minimum per column")
    interval: Interval = Field(..., description="PSP interval [C, R]")
    psp_entries: List[Entry] = Field(default_factory=list, description="All entries with value in [C, R]")
    sp_entries: List[Entry] = Field(default_factory=list, description="All (non-strict) saddlepoints")
    ssp: Optional[Entry] = Field(None, description="The strict saddlepoint, if any")

    @property
    def has_sp(self) -> bool:
        """Whether at least one saddlepoint exists."""
        return bool(self.sp_entries)

    def to_summary(self) -> dict:
        """Short summary used by the CLI."""
        return {
            "rows": self.rows,
            "cols": self.cols,
            "C": self.interval.lower,
            "R": self.interval.upper,
            "psp_count": len(self.psp_entries),
            "sp_count": len(self.sp_entries),
            "ssp": self.ssp.model_dump(mode="json") if self.ssp else None,
        }
