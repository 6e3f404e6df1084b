import itertools

import numpy as np
import pytest

from conftest import M3, SADDLE9
from saddlepoint.engine.view import BaseMatrix, PermutedView, ReversedValue, reverse, unwrap
from saddlepoint.errors import ContractError


def test_query_returns_entries_and_counts(saddle9, m3):
    assert saddle9.query(5, 5) == 0
    assert m3.query(2, 3) == 2
    assert m3.counters.queries == 1
    m3.query(1, 1)
    assert m3.counters.queries == 2


def test_numpy_base_returns_python_scalars():
    view = BaseMatrix(np.array(M3, dtype=float))
    value = view.query(2, 3)
    assert value == 2.0
    assert isinstance(value, float)


@pytest.mark.parametrize("i,j", [(0, 1), (1, 0), (4, 1), (1, 4)])
def test_query_out_of_range(m3, i, j):
    with pytest.raises(IndexError):
        m3.query(i, j)


def test_ragged_or_empty_input_rejected():
    with pytest.raises(ContractError):
        BaseMatrix([[1, 2], [3]])
    with pytest.raises(ContractError):
        BaseMatrix([])
    with pytest.raises(ContractError):
        BaseMatrix(np.empty((0, 3)))


def test_reversed_value_orders_backwards():
    a, b = ReversedValue(1), ReversedValue(2)
    assert b < a and a > b
    assert a <= ReversedValue(1) and a >= ReversedValue(1)
    assert reverse(reverse(3)) == 3
    assert unwrap(a) == 1


def test_reflection_reverses_every_comparison(m3):
    reflected = m3.reflect()
    assert reflected.shape == (3, 3)
    cells = list(itertools.product(range(1, 4), repeat=2))
    for (i, j), (k, l) in itertools.product(cells, repeat=2):
        base_lt = M3[j - 1][i - 1] < M3[l - 1][k - 1]
        assert (reflected.query(k, l) < reflected.query(i, j)) == base_lt


def test_reflection_is_an_involution():
    base = BaseMatrix([[1, 2, 3], [4, 5, 6]])
    reflected = base.reflect()
    assert reflected.shape == (3, 2)
    assert reflected.reflect() is base
    assert reflected.locate(3, 1) == (1, 3)
    entry = reflected.entry(3, 1)
    assert entry.position == (1, 3)
    assert entry.value == 3


def test_swap_rows_and_cols():
    board = BaseMatrix([[1, 2], [3, 4]]).permutable()
    board.swap_rows(1, 2)
    assert board.query(1, 1) == 3
    board.swap_cols(1, 2)
    board.swap_cols(1, 2)
    assert board.query(1, 2) == 4
    board.swap_rows(1, 1)
    assert board.locate(1, 1) == (2, 1)


def test_swaps_consume_no_queries():
    board = BaseMatrix(M3).permutable()
    board.swap_rows(1, 3)
    board.swap_cols(2, 3)
    assert board.counters.queries == 0
    with pytest.raises(IndexError):
        board.swap_rows(0, 1)
    with pytest.raises(IndexError):
        board.swap_cols(1, 4)


def test_permutation_matches_composed_maps(rng):
    data = rng.standard_normal((6, 6))
    board = BaseMatrix(data).permutable()
    rows, cols = list(range(6)), list(range(6))
    for _ in range(20):
        a, b = (int(x) for x in rng.integers(1, 7, size=2))
        board.swap_rows(a, b)
        rows[a - 1], rows[b - 1] = rows[b - 1], rows[a - 1]
        c, d = (int(x) for x in rng.integers(1, 7, size=2))
        board.swap_cols(c, d)
        cols[c - 1], cols[d - 1] = cols[d - 1], cols[c - 1]
    for i in range(1, 7):
        for j in range(1, 7):
            assert board.query(i, j) == data[rows[i - 1], cols[j - 1]]


def test_overlay_diagonal_takes_precedence_without_queries():
    board = BaseMatrix(M3).permutable()
    board.overlay_diagonal(1, 42, source=(2, 1))
    before = board.counters.queries
    assert board.query(1, 1) == 42
    assert board.counters.queries == before
    assert board.query(1, 2) == 7


def test_overlay_reports_source_entry():
    board = BaseMatrix(M3).permutable()
    board.swap_rows(1, 3)
    board.overlay_diagonal(2, board.query(1, 2), source=(1, 2))
    board.swap_rows(1, 3)
    entry = board.entry(2, 2)
    assert entry.position == (3, 2)
    assert entry.value == 1


def test_overlay_requires_square_view():
    board = PermutedView(BaseMatrix([[1, 2, 3], [4, 5, 6]]))
    with pytest.raises(ContractError):
        board.overlay_diagonal(1, 0, source=(1, 1))


def test_full_subview_is_identical(m3):
    sub = m3.subview([1, 2, 3], [1, 2, 3])
    assert sub.to_rows() == M3


def test_subview_locates_saddle(saddle9):
    sub = saddle9.subview([4, 5, 6], [4, 5, 6])
    assert sub.query(2, 2) == 0
    assert sub.locate(2, 2) == (5, 5)
    assert saddle9.counters.queries == 1


def test_nested_subviews_compose(saddle9):
    outer = saddle9.subview([2, 4, 6, 8], [1, 3, 5, 7, 9])
    inner = outer.subview([2, 3], [3, 5])
    direct = saddle9.subview([4, 6], [5, 9])
    assert inner.to_rows() == direct.to_rows()
    assert inner.locate(2, 2) == (6, 9)


def test_empty_subview_rejected(m3):
    with pytest.raises(ContractError):
        m3.subview([], [1])


def test_layers_share_root_counters():
    base = BaseMatrix(SADDLE9)
    view = base.reflect().subview([1, 2], [3, 4]).permutable()
    view.query(1, 1)
    view.query(2, 2)
    assert base.counters.queries == 2
    assert view.reflected
