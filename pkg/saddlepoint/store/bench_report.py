"""
Bench Report - CSV storage for benchmark records.

The column order is frozen so reports stay scriptable:
algorithm,m,n,seed,family,queries,comparisons,elapsed_ns,outcome
"""

import csv
from pathlib import Path
from typing import Iterable, List, Optional, TextIO

from saddlepoint.config import config
from saddlepoint.models.result import BenchRecord

FIELDS = ["algorithm", "m", "n", "seed", "family", "queries", "comparisons", "elapsed_ns", "outcome"]


class BenchReport:
    """
    Reader/writer for benchmark CSV files.

    Records are appended in memory and written in one go by `save`.
    """

    def __init__(self, path: Optional[Path] = None):
        """
        Initialize the report.

        Args:
            path: CSV location. Defaults to config.bench_report_path.
        """
        self.path = Path(path) if path is not None else config.bench_report_path
        self.records: List[BenchRecord] = []

    def add(self, record: BenchRecord) -> None:
        self.records.append(record)

    def extend(self, records: Iterable[BenchRecord]) -> None:
        self.records.extend(records)

    def write(self, stream: TextIO) -> None:
        """Write the header and all records to an open text stream."""
        writer = csv.DictWriter(stream, fieldnames=FIELDS)
        writer.writeheader()
        for record in self.records:
            writer.writerow(record.model_dump(mode="json"))

    def save(self) -> Path:
        """Write the report to `self.path`."""
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with open(self.path, "w", newline="", encoding="utf-8") as f:
            self.write(f)
        return self.path

    @classmethod
    def load(cls, path: Path) -> "BenchReport":
        """Read a report written by `save`."""
        report = cls(path)
        with open(path, "r", newline="", encoding="utf-8") as f:
            reader = csv.DictReader(f)
            if reader.fieldnames != FIELDS:
                raise ValueError(f"Unexpected bench columns: {reader.fieldnames}")
            for row in reader:
                report.add(BenchRecord.model_validate(row))
        return report
