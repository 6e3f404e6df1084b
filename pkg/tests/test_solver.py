import itertools

import numpy as np
import pytest

from conftest import M3, SADDLE9, TIES, identity, random_small
from saddlepoint.engine.budget import locate_budget, rect_budget, ssp_budget
from saddlepoint.engine.oracle import oracle_scan, verify_psp
from saddlepoint.engine.recursive_psp import psp_rect
from saddlepoint.engine.solver import SaddlepointSolver
from saddlepoint.engine.view import BaseMatrix
from saddlepoint.errors import InvariantError
from saddlepoint.models.result import Algorithm, InstanceFamily, SspOutcome, SspStatus
from saddlepoint.services.generator import InstanceGenerator

ALL = [Algorithm.AUTO, Algorithm.BASELINE, Algorithm.SIMPLE, Algorithm.FAST, Algorithm.ALTERNATIVE]


def _position(outcome):
    return outcome.entry.position if outcome.found else None


def _expected(data):
    ssp = oracle_scan(BaseMatrix(data)).ssp
    return ssp.position if ssp else None


@pytest.fixture
def solver():
    return SaddlepointSolver(cutoff=2)


@pytest.mark.parametrize("algorithm", ALL)
def test_find_ssp_examples(solver, algorithm):
    outcome, stats = solver.find_ssp(SADDLE9, algorithm)
    assert outcome.found and outcome.entry.position == (5, 5) and outcome.entry.value == 0
    assert stats.rows == stats.cols == 9
    assert solver.find_ssp(M3, algorithm)[0].status == SspStatus.ABSENT
    assert solver.find_ssp(identity(2), algorithm)[0].status == SspStatus.ABSENT


def test_stats_count_only_this_call(solver):
    view = BaseMatrix(SADDLE9)
    view.query(1, 1)
    _, stats = solver.find_ssp(view)
    assert stats.queries == view.counters.queries - 1
    assert stats.comparisons == view.counters.comparisons
    assert stats.elapsed_ns >= 0
    assert stats.algorithm == Algorithm.AUTO


def test_alternative_on_rectangle_runs_auto(solver):
    outcome, stats = solver.find_ssp([[1, 5], [6, 7], [8, 9]], Algorithm.ALTERNATIVE)
    assert stats.algorithm == Algorithm.AUTO
    assert outcome.entry.position == (1, 2)


@pytest.mark.parametrize("algorithm", ALL)
def test_agrees_with_oracle_on_small_random(solver, rng, algorithm):
    for k in range(250):
        data = random_small(rng, duplicates=k % 3 == 0)
        outcome, _ = solver.find_ssp(data, algorithm)
        assert _position(outcome) == _expected(data)


def test_agrees_with_oracle_on_all_binary_3x3(solver):
    for bits in itertools.product([0, 1], repeat=9):
        data = np.array(bits, dtype=float).reshape(3, 3)
        for algorithm in ALL:
            assert _position(solver.find_ssp(data, algorithm)[0]) == _expected(data)


@pytest.mark.slow
@pytest.mark.parametrize("m,n", [(m, n) for m in range(1, 5) for n in range(1, 5)])
def test_agrees_with_oracle_on_all_binary_matrices(solver, m, n):
    for bits in itertools.product([0, 1], repeat=m * n):
        data = np.array(bits, dtype=float).reshape(m, n)
        expected = _expected(data)
        for algorithm in ALL:
            assert _position(solver.find_ssp(data, algorithm)[0]) == expected


@pytest.mark.parametrize("family", list(InstanceFamily))
def test_agrees_with_oracle_per_family(family):
    solver = SaddlepointSolver()
    generator = InstanceGenerator(99)
    for n in (64, 100):
        data, _ = generator.generate(family, n, n, 3)
        expected = _expected(data)
        for algorithm in ALL:
            outcome, stats = solver.find_ssp(data, algorithm)
            assert _position(outcome) == expected
            assert stats.queries <= ssp_budget(algorithm, n, n)


def test_planted_location_is_reported():
    data, planted = InstanceGenerator(4).generate(InstanceFamily.PLANTED_SSP, 300, 300)
    outcome, stats = SaddlepointSolver().find_ssp(data)
    assert outcome.entry.position == planted[0]
    assert stats.queries < 300 * 300 // 10


@pytest.mark.parametrize("m,n", [(7, 3), (3, 7), (1024, 32), (32, 1024)])
def test_rectangular_agreement(rng, m, n):
    solver = SaddlepointSolver()
    for _ in range(5):
        data = rng.standard_normal((m, n))
        outcome, stats = solver.find_ssp(data)
        assert _position(outcome) == _expected(data)
        assert stats.queries <= ssp_budget(Algorithm.AUTO, m, n)
    data, planted = InstanceGenerator(m * n).generate(InstanceFamily.PLANTED_SSP, m, n)
    assert solver.find_ssp(data)[0].entry.position == planted[0]


def test_reflection_consistency(rng):
    solver = SaddlepointSolver(cutoff=2)
    for k in range(100):
        data = random_small(rng, duplicates=k % 2 == 0)
        direct, _ = solver.find_ssp(BaseMatrix(data))
        reflected, _ = solver.find_ssp(BaseMatrix(data).reflect())
        assert direct.found == reflected.found
        if direct.found:
            assert direct.entry.position == reflected.entry.position


def test_sp_value_examples(solver):
    assert solver.sp_value_assuming_exists(TIES).value == 1
    assert solver.sp_value_assuming_exists(SADDLE9).value == 0
    unverified = solver.sp_value_assuming_exists(M3)
    assert 2 <= unverified.value <= 6
    assert unverified.assumes_sp_exists and not unverified.verified


def test_locate_sp_examples(solver):
    assert (1, 1) in [e.position for e in solver.locate_sp(TIES, 1)]
    assert [e.position for e in solver.locate_sp(SADDLE9, 0)] == [(5, 5)]
    assert solver.locate_sp(M3, 4) == []


@pytest.mark.parametrize("k", [1, 4, 16])
def test_locate_sp_budget(k):
    solver = SaddlepointSolver()
    data, planted = InstanceGenerator(k).generate(InstanceFamily.PLANTED_SP, 512, 512, k)
    view = BaseMatrix(data)
    value = solver.sp_value_assuming_exists(view).value
    before = view.counters.queries
    found = solver.locate_sp(view, value)
    assert found
    assert {e.position for e in found} <= set(planted)
    assert view.counters.queries - before <= locate_budget(k, 512, 512)


def test_locate_sp_through_reflection(solver):
    view = BaseMatrix(TIES).reflect()
    positions = sorted(e.position for e in solver.locate_sp(view, 1))
    assert positions and set(positions) <= {(1, 1), (1, 2)}


def test_psp_entry_points_are_valid(solver, rng):
    for _ in range(30):
        data = random_small(rng, duplicates=True)
        for algorithm in ALL:
            entry = solver.psp(data, algorithm)
            assert verify_psp(BaseMatrix(data), entry.value)
            assert solver.check_psp(data, entry)


def test_cross_check_detects_disagreement(solver):
    solver.cross_check(SADDLE9, solver.find_ssp(SADDLE9)[0])
    with pytest.raises(InvariantError):
        solver.cross_check(SADDLE9, SspOutcome.absent())


def _reference_ssp(data):
    """Strict saddlepoint by whole-array numpy reductions, 1-based."""
    row_max = data.max(axis=1, keepdims=True)
    col_min = data.min(axis=0, keepdims=True)
    row_unique = (data == row_max).sum(axis=1) == 1
    col_unique = (data == col_min).sum(axis=0) == 1
    strict = (data == row_max) & (data == col_min) & row_unique[:, None] & col_unique[None, :]
    hits = np.argwhere(strict)
    return (int(hits[0][0]) + 1, int(hits[0][1]) + 1) if len(hits) else None


def test_reference_ssp_matches_oracle(rng):
    for k in range(200):
        data = random_small(rng, duplicates=k % 2 == 0)
        assert _reference_ssp(data) == _expected(data)


@pytest.mark.slow
@pytest.mark.parametrize("family", list(InstanceFamily))
@pytest.mark.parametrize("n", [64, 256, 1024])
def test_family_sweep_agrees_with_reference(family, n):
    solver = SaddlepointSolver()
    for k in range(500):
        data, planted = InstanceGenerator(n * 1000 + k).generate(family, n, n, 1 + k % 4)
        expected = _reference_ssp(data)
        if family == InstanceFamily.PLANTED_SSP:
            assert expected == planted[0]
        for algorithm in ALL:
            assert _position(solver.find_ssp(data, algorithm)[0]) == expected


@pytest.mark.slow
@pytest.mark.parametrize("m,n", [(4096, 64), (64, 4096)])
def test_very_unbalanced_rectangles(rng, m, n):
    solver = SaddlepointSolver()
    for _ in range(3):
        data = rng.standard_normal((m, n))
        outcome, stats = solver.find_ssp(data)
        assert _position(outcome) == _expected(data)
        assert stats.queries <= ssp_budget(Algorithm.AUTO, m, n)
        view = BaseMatrix(data)
        entry = psp_rect(view)
        assert view.counters.queries <= rect_budget(Algorithm.AUTO, m, n)
        assert verify_psp(BaseMatrix(data), entry.value)
    data, planted = InstanceGenerator(m + n).generate(InstanceFamily.PLANTED_SSP, m, n)
    outcome, _ = solver.find_ssp(data)
    assert outcome.entry.position == planted[0] == _expected(data)
