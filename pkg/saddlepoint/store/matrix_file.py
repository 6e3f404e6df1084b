"""
Matrix File - plain-text matrix storage.

Format:
    m n
    a11 a12 ... a1n
    ...
    am1 am2 ... amn

Values are decimal literals of finite 64-bit floats. Writing uses the
shortest repr that parses back to the same float, so files round-trip
bit-exactly.
"""

import math
from pathlib import Path
from typing import Iterable, List, Union

import numpy as np

from saddlepoint.errors import MatrixFileError


def _parse_float(token: str, line: int) -> float:
    try:
        value = float(token)
    except ValueError:
        raise MatrixFileError(f"not a number: {token!r}", line)
    if not math.isfinite(value):
        raise MatrixFileError(f"non-finite value {token!r}", line)
    return value


def parse_matrix(text: str) -> np.ndarray:
    """
    Parse matrix file content.

    Args:
        text: File content

    Returns:
        float64 array of shape (m, n)

    Raises:
        MatrixFileError: On any malformed line
    """
    lines = [(k, raw.split()) for k, raw in enumerate(text.splitlines(), 1)]
    lines = [(k, tokens) for k, tokens in lines if tokens]
    if not lines:
        raise MatrixFileError("empty matrix file")

    header_line, header = lines[0]
    if len(header) != 2:
        raise MatrixFileError(f"header must be 'm n', got {' '.join(header)!r}", header_line)
    try:
        m, n = int(header[0]), int(header[1])
    except ValueError:
        raise MatrixFileError(f"header must hold two integers, got {' '.join(header)!r}", header_line)
    if m < 1 or n < 1:
        raise MatrixFileError(f"dimensions must be positive, got {m}x{n}", header_line)

    body = lines[1:]
    if len(body) != m:
        raise MatrixFileError(f"expected {m} rows, found {len(body)}", body[-1][0] if body else header_line)

    data = np.empty((m, n), dtype=np.float64)
    for i, (line, tokens) in enumerate(body):
        if len(tokens) != n:
            raise MatrixFileError(f"expected {n} values, found {len(tokens)}", line)
        data[i] = [_parse_float(token, line) for token in tokens]
    return data


def read_matrix(path: Union[str, Path]) -> np.ndarray:
    """Read and parse a matrix file."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise MatrixFileError(f"cannot read {path}: {e.strerror}")
    except UnicodeDecodeError as e:
        raise MatrixFileError(f"{path} is not UTF-8 text: {e.reason} at byte {e.start}")
    return parse_matrix(text)


def format_matrix(rows: Union[np.ndarray, Iterable[Iterable[float]]]) -> str:
    """Render a matrix in the file format."""
    data = np.asarray(rows, dtype=np.float64)
    if data.ndim != 2 or data.size == 0:
        raise MatrixFileError(f"cannot write a matrix of shape {data.shape}")
    if not np.isfinite(data).all():
        raise MatrixFileError("cannot write non-finite values")
    out: List[str] = [f"{data.shape[0]} {data.shape[1]}"]
    for row in data:
        out.append(" ".join(repr(float(x)) for x in row))
    return "\n".join(out) + "\n"


def write_matrix(path: Union[str, Path], rows: Union[np.ndarray, Iterable[Iterable[float]]]) -> Path:
    """Write a matrix file, creating parent directories."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_matrix(rows), encoding="utf-8")
    return path
