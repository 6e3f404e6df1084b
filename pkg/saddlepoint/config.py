"""
Configuration management for the Saddlepoint toolkit.

Loads configuration from environment variables and .env file.
"""

from pathlib import Path
from typing import Optional
from pydantic_settings import BaseSettings
from pydantic import Field


class SaddlepointConfig(BaseSettings):
    """Configuration settings for the Saddlepoint toolkit."""

    # Recursion
    psp_cutoff: int = Field(64, ge=1, description="Matrix side at or below which the baseline PSP algorithm is used")
    psp_max_depth: Optional[int] = Field(None, ge=0, description="Stop recursing at this depth (None = no limit)")

    # Pinned query-budget constants
    budget_simple: float = Field(2.0, gt=0.0, description="c1 in c1*n*2^(lg* n)")
    budget_fast: float = Field(3.0, gt=0.0, description="c2 in c2*n*lg* n")
    budget_alternative: float = Field(12.0, gt=0.0, description="c3 in c3*n*(lg lg n + 1)")
    budget_locate: float = Field(3.0, gt=0.0, description="c4 in c4*k*(m+n)")

    # Alternating elimination
    phase_cap_base: int = Field(16, ge=1, description="Additive term of the per-phase iteration cap")
    phase_cap_factor: int = Field(4, ge=1, description="Multiplier of lg lg n in the per-phase iteration cap")

    # CLI / bench
    verify_max_cells: int = Field(1 << 20, ge=1, description="Largest m*n checked by --verify")
    bench_workers: int = Field(1, ge=1, le=64, description="Process-pool width for bench")
    bench_report_path: Path = Field(Path("report.csv"), description="Default CSV path for bench")
    log_level: str = Field("WARNING", description="Logging level for the CLI")

    model_config = {
        "env_prefix": "SADDLEPOINT_",
        "env_file": ".env",
        "env_file_encoding": "utf-8",
        "case_sensitive": False,
        "extra": "ignore",  # Ignore extra fields from env
    }

    def phase_cap(self, lglg: float) -> int:
        """Iteration cap for one phase of the alternating elimination."""
        return int(self.phase_cap_factor * lglg) + self.phase_cap_base


# Global config instance - loaded from environment
config = SaddlepointConfig()
