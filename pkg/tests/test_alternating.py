import numpy as np
import pytest

from conftest import identity
from saddlepoint.engine.alternating import (
    AlternatingEliminator,
    oriented_view,
    phase1_step,
    phase2_pass,
    short_side_limit,
    ssp_alternative,
)
from saddlepoint.engine.budget import alternative_budget
from saddlepoint.engine.oracle import oracle_scan
from saddlepoint.engine.view import BaseMatrix
from saddlepoint.errors import ContractError
from saddlepoint.models.region import AliveRegion
from saddlepoint.models.result import InstanceFamily, SspStatus
from saddlepoint.services.generator import InstanceGenerator


def test_saddle_is_found(saddle9):
    outcome = ssp_alternative(saddle9)
    assert outcome.found
    assert outcome.entry.position == (5, 5)
    assert outcome.entry.value == 0


def test_single_entry_is_found():
    outcome = ssp_alternative(BaseMatrix([[4.0]]))
    assert outcome.found and outcome.entry.position == (1, 1)


@pytest.mark.parametrize("n", [2, 3, 5, 16, 64])
def test_identity_has_no_strict_saddle(n):
    assert ssp_alternative(BaseMatrix(identity(n))).status == SspStatus.ABSENT


def test_constant_matrix_has_no_strict_saddle():
    region = AliveRegion.full(20, 20)
    verdict = phase1_step(region, BaseMatrix(np.ones((20, 20))))
    assert verdict is not None and not verdict.found
    assert ssp_alternative(BaseMatrix(np.ones((20, 20)))).status == SspStatus.ABSENT


def test_rejects_rectangles():
    with pytest.raises(ContractError):
        ssp_alternative(BaseMatrix([[1, 2, 3], [4, 5, 6]]))


def test_oriented_view_flips_wide_regions(saddle9):
    region = AliveRegion(rows=[1, 2], cols=[3, 4, 5])
    work = oriented_view(saddle9, region)
    assert work.shape == (3, 2)
    assert work.entry(1, 2).position == (2, 3)


def _planted_ssp(seed, n):
    data, planted = InstanceGenerator(seed).generate(InstanceFamily.PLANTED_SSP, n, n)
    return data, planted[0]


def test_elimination_keeps_the_saddle(rng):
    for seed in range(20):
        n = 128
        data, (row, col) = _planted_ssp(seed, n)
        view = BaseMatrix(data)
        region = AliveRegion.full(n, n)
        while region.short_side > short_side_limit(n):
            verdict = phase1_step(region, view)
            if verdict is not None:
                assert verdict.found and verdict.position == (row, col)
                break
            assert row in region.rows and col in region.cols


def test_long_side_pass_keeps_the_saddle():
    n = 4096
    gen = InstanceGenerator(3)
    data = gen.rng.standard_normal((n, 64))
    row, col = 1234, 17
    data[row - 1, :] = -gen.rng.uniform(0.001, 1.0, size=64)
    data[:, col - 1] = gen.rng.uniform(0.001, 1.0, size=n)
    data[row - 1, col - 1] = 0.0
    view = BaseMatrix(data)
    region = AliveRegion.full(n, 64)
    passes = 0
    while region.long_side > 4 * region.short_side:
        before = len(region.rows)
        deleted = phase2_pass(region, view, n)
        passes += 1
        assert len(region.rows) == before - deleted
        assert deleted > 0
        assert row in region.rows and col in region.cols
    assert passes >= 1
    assert phase2_pass(region, view, n) == 0


def test_long_side_pass_checks_short_side():
    view = BaseMatrix(np.ones((64, 64)))
    with pytest.raises(ContractError):
        phase2_pass(AliveRegion.full(64, 64), view, 64)


def test_agrees_with_oracle_on_random_instances(rng):
    generator = InstanceGenerator(7)
    for k in range(60):
        n = int(rng.integers(2, 48))
        if k % 2:
            data, _ = generator.generate(InstanceFamily.PLANTED_SSP, n, n)
        elif k % 4 == 0:
            data = rng.integers(0, 3, size=(n, n)).astype(float)
        else:
            data = rng.standard_normal((n, n))
        expected = oracle_scan(BaseMatrix(data)).ssp
        outcome = ssp_alternative(BaseMatrix(data))
        assert (outcome.entry.position if outcome.found else None) == (expected.position if expected else None)


@pytest.mark.slow
def test_agrees_with_oracle_on_many_instances(rng):
    generator = InstanceGenerator(8)
    for k in range(1000):
        if k % 2:
            data, _ = generator.generate(InstanceFamily.PLANTED_SSP, 128, 128)
        else:
            data = rng.standard_normal((128, 128))
        expected = oracle_scan(BaseMatrix(data)).ssp
        outcome = ssp_alternative(BaseMatrix(data))
        assert (outcome.entry.position if outcome.found else None) == (expected.position if expected else None)


@pytest.mark.parametrize("n", [256, 1024])
def test_query_budget(rng, n):
    view = BaseMatrix(rng.standard_normal((n, n)))
    ssp_alternative(view)
    assert view.counters.queries <= alternative_budget(n)


def test_planted_saddle_found_with_budget():
    data, position = _planted_ssp(1, 1024)
    view = BaseMatrix(data)
    outcome = ssp_alternative(view)
    assert outcome.found and outcome.entry.position == position
    assert view.counters.queries <= alternative_budget(1024)


def test_rounds_stay_under_cap(rng):
    eliminator = AlternatingEliminator(BaseMatrix(rng.standard_normal((512, 512))))
    eliminator.run()
    assert eliminator.rounds["elimination"] <= eliminator.cap
    assert eliminator.rounds["long_side"] <= eliminator.cap
