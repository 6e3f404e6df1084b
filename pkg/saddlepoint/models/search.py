"""
Staircase search data models.

This module defines the outcome records of the horizontal/vertical staircase
searches and of the four-way feasibility test built on them.
"""

from enum import Enum
from typing import List, Optional, Tuple
from pydantic import BaseModel, Field

from saddlepoint.models.matrix import Entry


class SearchMode(str, Enum):
    """Which staircase walk was run."""
    HORIZONTAL = "horizontal"
    VERTICAL = "vertical"


class StaircasePath(BaseModel):
    """Result of one staircase walk, in the coordinates of the searched view."""
    mode: SearchMode = Field(..., description="Walk variant")
    success: bool = Field(..., description="Horizontal: exited right; vertical: exited at the bottom")
    row: int = Field(..., ge=1, description="Final row index (m+1 when the walk left through the bottom)")
    col: int = Field(..., ge=1, description="Final column index (n+1 when the walk left to the right)")
    steps: int = Field(0, ge=0, description="Number of entries inspected")
    tie_columns: List[int] = Field(default_factory=list, description="Columns where an entry equal to s was met")


class VerdictKind(str, Enum):
    """Four-way outcome of the feasibility test."""
    FOUND = "found"
    ABSENT = "absent"
    GREATER = "greater"
    LESS = "less"


class SearchVerdict(BaseModel):
    """
    Outcome of testing one candidate value.

    GREATER/LESS only constrain the strict saddlepoint's value if one exists.
    """
    kind: VerdictKind = Field(..., description="found | absent | greater | less")
    entry: Optional[Entry] = Field(None, description="The verified SSP in root coordinates (FOUND only)")
    position: Optional[Tuple[int, int]] = Field(None, description="SSP position in the searched view (FOUND only)")

    @property
    def found(self) -> bool:
        return self.kind == VerdictKind.FOUND

    def to_summary(self) -> dict:
        """JSON surface used by the CLI."""
        summary = {"verdict": self.kind.value}
        if self.entry is not None:
            summary.update(row=self.entry.row, col=self.entry.col, value=self.entry.value)
        return summary
