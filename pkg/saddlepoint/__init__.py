"""
Saddlepoint - comparison-model saddlepoint search for matrices.

This package provides tools for:
- Finding the strict saddlepoint (SSP) of an m x n matrix, or certifying its absence
- Computing pseudo-saddlepoints (PSP) with the baseline, recursive and
  transform-accelerated algorithms
- Computing and locating (non-strict) saddlepoint values
- Counting base-matrix queries and comparisons, with a brute-force oracle,
  instance generators and a benchmark harness
"""

__version__ = "0.1.0"
