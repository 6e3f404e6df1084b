"""
Alternating-elimination state models.
"""

from typing import Any, List, Optional
from pydantic import BaseModel, Field


class AliveRegion(BaseModel):
    """
    Rows and columns of the input view that may still hold the strict saddlepoint.

    Indices are 1-based coordinates of the input view, kept in ascending order.
    """
    rows: List[int] = Field(default_factory=list, description="Alive row indices")
    cols: List[int] = Field(default_factory=list, description="Alive column indices")

    @classmethod
    def full(cls, rows: int, cols: int) -> "AliveRegion":
        return cls(rows=list(range(1, rows + 1)), cols=list(range(1, cols + 1)))

    @property
    def is_empty(self) -> bool:
        return not self.rows or not self.cols

    @property
    def flipped(self) -> bool:
        """True when the region is worked on through its reflection (more columns than rows)."""
        return len(self.rows) < len(self.cols)

    @property
    def long_side(self) -> int:
        """m' after orientation normalisation."""
        return max(len(self.rows), len(self.cols))

    @property
    def short_side(self) -> int:
        """n' after orientation normalisation."""
        return min(len(self.rows), len(self.cols))

    def drop_rows(self, rows: set) -> None:
        self.rows = [r for r in self.rows if r not in rows]

    def drop_cols(self, cols: set) -> None:
        self.cols = [c for c in self.cols if c not in cols]


class ColumnSample(BaseModel):
    """Disjoint row sample R_j of one column and its minimum m_j."""
    column: int = Field(..., ge=1, description="Column index in the oriented region view")
    rows: List[int] = Field(default_factory=list, description="R_j, row indices in the oriented region view")
    minimum: Any = Field(None, description="m_j, minimum over the sampled entries")
    witness: Optional[int] = Field(None, description="Row holding m_j")
