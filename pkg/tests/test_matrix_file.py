import numpy as np
import pytest

from saddlepoint.errors import MatrixFileError
from saddlepoint.models.result import InstanceFamily
from saddlepoint.services.generator import generate
from saddlepoint.store.matrix_file import format_matrix, parse_matrix, read_matrix, write_matrix


def test_parse_simple_file():
    data = parse_matrix("2 3\n1 2 3\n4.5 -6 7e-3\n")
    assert data.shape == (2, 3)
    assert data[1, 2] == 0.007


def test_blank_lines_are_ignored():
    assert parse_matrix("\n1 1\n\n  42\n\n").tolist() == [[42.0]]


@pytest.mark.parametrize("text,line", [
    ("", 0),
    ("2\n1 2\n", 1),
    ("a b\n1\n", 1),
    ("0 2\n", 1),
    ("2 2\n1 2\n3\n", 3),
    ("2 2\n1 2\n", 2),
    ("1 2\n1 x\n", 2),
    ("1 2\n1 nan\n", 2),
    ("1 2\n1 inf\n", 2),
])
def test_malformed_files_rejected(text, line):
    with pytest.raises(MatrixFileError) as exc:
        parse_matrix(text)
    assert exc.value.line == line


def test_round_trip_is_bit_exact(tmp_path):
    data = generate(InstanceFamily.RANDOM, 17, 5, seed=3)
    path = write_matrix(tmp_path / "nested" / "m.txt", data)
    again = read_matrix(path)
    assert np.array_equal(again, data)
    assert format_matrix(again) == path.read_text()


def test_write_rejects_non_finite():
    with pytest.raises(MatrixFileError):
        format_matrix([[1.0, float("nan")]])


def test_missing_file(tmp_path):
    with pytest.raises(MatrixFileError):
        read_matrix(tmp_path / "absent.txt")


def test_undecodable_bytes_are_a_file_error(tmp_path):
    path = tmp_path / "binary.txt"
    path.write_bytes(b"1 1\n\xff\xfe\n")
    with pytest.raises(MatrixFileError, match="not UTF-8"):
        read_matrix(path)
