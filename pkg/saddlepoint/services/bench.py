"""
Bench Runner - query-count benchmarks over generated instances.

One instance per (size, family, repeat); every requested algorithm runs on
its own fresh root view of that instance, so counts never mix.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, List, Optional, Sequence, Tuple

from saddlepoint.config import config
from saddlepoint.engine.budget import ssp_budget
from saddlepoint.engine.solver import SaddlepointSolver
from saddlepoint.engine.view import BaseMatrix
from saddlepoint.models.result import Algorithm, BenchRecord, InstanceFamily, SspOutcome
from saddlepoint.services.generator import InstanceGenerator

logger = logging.getLogger(__name__)

# (size, family, seed, algorithms, cutoff, multiplicity)
InstanceSpec = Tuple[int, InstanceFamily, int, Tuple[Algorithm, ...], Optional[int], int]


def outcome_label(outcome: SspOutcome) -> str:
    """CSV outcome column: ssp_found@row,col or no_ssp."""
    if outcome.found:
        return f"{outcome.status.value}@{outcome.entry.row},{outcome.entry.col}"
    return outcome.status.value


def run_instance(spec: InstanceSpec) -> List[BenchRecord]:
    """Generate one instance and run every algorithm on it."""
    size, family, seed, algorithms, cutoff, multiplicity = spec
    data, _ = InstanceGenerator(seed).generate(family, size, size, min(multiplicity, size))
    solver = SaddlepointSolver(cutoff=cutoff)
    records = []
    for algorithm in algorithms:
        outcome, stats = solver.find_ssp(BaseMatrix(data), algorithm)
        records.append(BenchRecord(
            algorithm=algorithm,
            m=stats.rows,
            n=stats.cols,
            seed=seed,
            family=family,
            queries=stats.queries,
            comparisons=stats.comparisons,
            elapsed_ns=stats.elapsed_ns,
            outcome=outcome_label(outcome),
        ))
    return records


class BenchRunner:
    """
    Enumerates benchmark cells and collects BenchRecords.

    Instance seeds are `seed + k` for the k-th (size, family, repeat) cell in
    enumeration order, so a run is reproducible from its base seed.
    """

    def __init__(
        self,
        sizes: Sequence[int],
        families: Sequence[InstanceFamily],
        algorithms: Sequence[Algorithm],
        seed: int = 0,
        repeats: int = 1,
        workers: Optional[int] = None,
        cutoff: Optional[int] = None,
        multiplicity: int = 1,
    ):
        self.sizes = list(sizes)
        self.families = [InstanceFamily(f) for f in families]
        self.algorithms = tuple(Algorithm(a) for a in algorithms)
        self.seed = seed
        self.repeats = repeats
        self.workers = workers or config.bench_workers
        self.cutoff = cutoff
        self.multiplicity = multiplicity

    def instances(self) -> List[InstanceSpec]:
        specs = []
        k = 0
        for size in self.sizes:
            for family in self.families:
                for _ in range(self.repeats):
                    specs.append((size, family, self.seed + k, self.algorithms, self.cutoff, self.multiplicity))
                    k += 1
        return specs

    def run(self) -> List[BenchRecord]:
        """Run every cell, in a process pool when workers > 1."""
        specs = self.instances()
        logger.info("Benchmarking %d instances x %d algorithms with %d worker(s)",
                    len(specs), len(self.algorithms), self.workers)
        records: List[BenchRecord] = []
        if self.workers > 1:
            with ProcessPoolExecutor(max_workers=self.workers) as pool:
                for batch in pool.map(run_instance, specs):
                    records.extend(batch)
        else:
            for spec in specs:
                records.extend(run_instance(spec))
        return records

    @staticmethod
    def summarize(records: Sequence[BenchRecord]) -> Dict[str, object]:
        """
        Worst query count per (algorithm, m, n) against its budget.

        Returns:
            {"cells": [...], "within_budget": bool}
        """
        worst: Dict[Tuple[Algorithm, int, int], int] = {}
        for record in records:
            key = (record.algorithm, record.m, record.n)
            worst[key] = max(worst.get(key, 0), record.queries)

        cells = []
        ok = True
        for (algorithm, m, n), queries in sorted(worst.items(), key=lambda item: (item[0][0].value, item[0][1], item[0][2])):
            budget = ssp_budget(algorithm, m, n)
            within = queries <= budget
            ok = ok and within
            cells.append({
                "algorithm": algorithm.value,
                "m": m,
                "n": n,
                "max_queries": queries,
                "budget": round(budget, 1),
                "within_budget": within,
            })
        return {"cells": cells, "within_budget": ok}
