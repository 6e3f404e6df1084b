"""
Block decomposition and Transform bookkeeping models.
"""

from bisect import bisect_right
from typing import Any, List, Optional, Tuple
from pydantic import BaseModel, ConfigDict, Field, model_validator

from saddlepoint.models.matrix import Entry


class BlockDecomposition(BaseModel):
    """
    Cover of [1, n] by intervals of exactly `side` indices.

    Intervals are [i*side+1, (i+1)*side] for i < floor(n/side); when side does
    not divide n a last interval [n-side+1, n] overlaps its predecessor. The
    same cover is used for rows and columns.
    """
    size: int = Field(..., ge=1, description="n, the side of the decomposed matrix")
    side: int = Field(..., ge=1, description="Block side")
    intervals: List[Tuple[int, int]] = Field(default_factory=list, description="Inclusive 1-based bounds")

    @model_validator(mode="after")
    def check_cover(self) -> "BlockDecomposition":
        if self.side > self.size:
            raise ValueError(f"Block side {self.side} exceeds matrix size {self.size}")
        for start, end in self.intervals:
            if end - start + 1 != self.side:
                raise ValueError(f"Interval [{start}, {end}] does not have {self.side} indices")
        return self

    @classmethod
    def build(cls, size: int, side: int) -> "BlockDecomposition":
        intervals = [(i * side + 1, (i + 1) * side) for i in range(size // side)]
        if size % side:
            intervals.append((size - side + 1, size))
        return cls(size=size, side=side, intervals=intervals)

    @property
    def count(self) -> int:
        return len(self.intervals)

    def indices(self, block: int) -> range:
        """Indices of the 1-based block number `block`."""
        start, end = self.intervals[block - 1]
        return range(start, end + 1)


class DiagonalSection(BaseModel):
    """A contiguous run of diagonal positions overwritten with one median."""
    start: int = Field(..., ge=1, description="First diagonal index of the section")
    end: int = Field(..., ge=1, description="Last diagonal index of the section")
    value: Any = Field(..., description="Median value, in the order of the transformed view")
    source: Entry = Field(..., description="Root entry the median was read from")


class TransformState(BaseModel):
    """Result of running Transform on a square permutable view."""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    size: int = Field(..., ge=1, description="Side of the transformed view")
    threshold: int = Field(..., ge=0, description="Stopping threshold t")
    sections: List[DiagonalSection] = Field(default_factory=list, description="Uniform diagonal sections in order")
    untouched_start: int = Field(1, ge=1, description="First diagonal index not overwritten")
    view: Any = Field(None, exclude=True, description="The permuted/overlaid view B")

    @property
    def untouched_length(self) -> int:
        return self.size - self.untouched_start + 1

    def covering(self, start: int, end: int) -> Optional[DiagonalSection]:
        """The section containing every diagonal index in [start, end], if one does."""
        if not self.sections:
            return None
        starts = [s.start for s in self.sections]
        k = bisect_right(starts, start) - 1
        if k < 0:
            return None
        section = self.sections[k]
        if section.start <= start and end <= section.end:
            return section
        return None
