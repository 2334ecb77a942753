"""Free resolutions 0 -> L -> M -> A -> 0 of finitely generated abelian groups."""

from __future__ import annotations

from dataclasses import dataclass

from ..chain import FreeChainComplex
from ..zlinalg import FgAbGroup, IntMatrix, block_diag, column_cokernel, rank_of


@dataclass(frozen=True)
class Resolution:
    """An injective map f: L -> M of free modules with cokernel ``target``."""

    f: IntMatrix
    target: FgAbGroup

    def __post_init__(self):
        if rank_of(self.f) != self.f.cols:
            raise ValueError("resolution map must be injective")
        if column_cokernel(self.f) != self.target:
            raise ValueError(f"cokernel is {column_cokernel(self.f)}, expected {self.target}")

    @property
    def rank_L(self) -> int:
        return self.f.cols

    @property
    def rank_M(self) -> int:
        return self.f.rows

    def complex(self, shift: int = 0) -> FreeChainComplex:
        """L -> M placed in degrees shift+1 and shift."""
        return FreeChainComplex(shift, (self.f.rows, self.f.cols), {shift + 1: self.f})

    def padded(self, extra: int = 1) -> Resolution:
        """The same group resolved with ``extra`` redundant copies of Z --id--> Z."""
        return Resolution(block_diag([self.f, IntMatrix.identity(extra)]), self.target)


def resolve(a: FgAbGroup) -> Resolution:
    """Minimal diagonal resolution: torsion factors first, free part as zero rows."""
    k = len(a.invariant_factors)
    f = IntMatrix.diagonal(list(a.invariant_factors), a.free_rank + k, k)
    return Resolution(f, a)
