"""Storage layer for the Saddlepoint toolkit."""

from saddlepoint.store.matrix_file import parse_matrix, read_matrix, format_matrix, write_matrix
from saddlepoint.store.bench_report import BenchReport, FIELDS

__all__ = [
    "parse_matrix",
    "read_matrix",
    "format_matrix",
    "write_matrix",
    "BenchReport",
    "FIELDS",
]
