"""Matrix-size budget shared by the simplicial and derived layers."""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from .errors import BudgetExceeded

DEFAULT_CAP = 5_000_000
ENV_VAR = "DERIFUN_BUDGET_COLS"


def default_cap() -> int:
    """Column cap from the environment, falling back to five million."""
    raw = os.environ.get(ENV_VAR)
    if raw is None or not raw.strip():
        return DEFAULT_CAP
    return int(raw)


@dataclass
class Budget:
    """Tracks the largest matrix dimension seen and enforces a hard cap."""

    cap: int = field(default_factory=default_cap)
    max_rows: int = 0
    max_cols: int = 0
    worst_level: int | None = None

    def check(self, rank: int, level: int | None = None) -> None:
        if rank > self.cap:
            raise BudgetExceeded(
                f"level {level}: rank {rank} exceeds cap {self.cap}", level=level, rank=rank
            )
        if rank > self.max_cols:
            self.max_cols = rank
            self.worst_level = level

    def note_matrix(self, rows: int, cols: int, level: int | None = None) -> None:
        self.check(cols, level)
        self.max_rows = max(self.max_rows, rows)

    def report(self) -> dict:
        return {
            "cap": self.cap,
            "max_rows": self.max_rows,
            "max_cols": self.max_cols,
            "worst_level": self.worst_level,
        }
