"""Instance generation and benchmarking services."""

from saddlepoint.services.generator import InstanceGenerator, generate
from saddlepoint.services.bench import BenchRunner, run_instance, outcome_label

__all__ = [
    "InstanceGenerator",
    "generate",
    "BenchRunner",
    "run_instance",
    "outcome_label",
]
