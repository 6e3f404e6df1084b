import numpy as np
import pytest

from saddlepoint.engine.oracle import oracle_scan
from saddlepoint.engine.view import BaseMatrix
from saddlepoint.errors import ContractError
from saddlepoint.models.result import InstanceFamily
from saddlepoint.services.generator import InstanceGenerator, generate


@pytest.mark.parametrize("seed", range(5))
def test_planted_ssp_is_the_only_saddle(seed):
    data, planted = InstanceGenerator(seed).generate(InstanceFamily.PLANTED_SSP, 9, 9)
    report = oracle_scan(BaseMatrix(data))
    assert report.ssp.position == planted[0]
    assert report.ssp.value == 0.0


@pytest.mark.parametrize("k", [1, 2, 5])
def test_planted_sp_multiplicity(k):
    data, planted = InstanceGenerator(k).generate(InstanceFamily.PLANTED_SP, 12, 8, k)
    report = oracle_scan(BaseMatrix(data))
    assert sorted(e.position for e in report.sp_entries) == planted
    assert (report.ssp is not None) == (k == 1)


def test_planted_sp_rejects_infeasible_multiplicity():
    with pytest.raises(ContractError):
        generate(InstanceFamily.PLANTED_SP, 4, 3, seed=0, multiplicity=4)
    with pytest.raises(ContractError):
        generate(InstanceFamily.PLANTED_SP, 4, 3, seed=0, multiplicity=0)


@pytest.mark.parametrize("shape", [(2, 2), (5, 5), (7, 3), (3, 7)])
def test_no_sp_has_no_saddle(shape):
    for seed in range(5):
        data = generate(InstanceFamily.NO_SP, *shape, seed=seed)
        assert not oracle_scan(BaseMatrix(data)).has_sp


def test_no_sp_needs_two_lines():
    with pytest.raises(ContractError):
        generate(InstanceFamily.NO_SP, 1, 5, seed=0)


def test_constant_matrix():
    data = generate(InstanceFamily.CONSTANT, 3, 4, seed=0)
    report = oracle_scan(BaseMatrix(data))
    assert len(report.psp_entries) == len(report.sp_entries) == 12
    assert report.ssp is None


def test_generation_is_deterministic():
    for family in InstanceFamily:
        a = generate(family, 6, 6, seed=42, multiplicity=2)
        b = generate(family, 6, 6, seed=42, multiplicity=2)
        assert np.array_equal(a, b)
    assert not np.array_equal(generate(InstanceFamily.RANDOM, 6, 6, seed=1), generate(InstanceFamily.RANDOM, 6, 6, seed=2))


def test_dimensions_must_be_positive():
    with pytest.raises(ContractError):
        generate(InstanceFamily.RANDOM, 0, 3, seed=0)
