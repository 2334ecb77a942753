"""Homology of a pair of composable integer matrices."""

from __future__ import annotations

from ..errors import CompositionNotZero
from .elim import elementary_divisors
from .groups import FgAbGroup
from .matrix import IntMatrix


def homology_from_ranks(dim: int, rank_out: int, rank_in: int, torsion: list[int]) -> FgAbGroup:
    return FgAbGroup(dim - rank_out - rank_in, tuple(torsion))


def homology_at(d_in: IntMatrix, d_out: IntMatrix, check: bool = True) -> FgAbGroup:
    """ker(d_out) / im(d_in) for ``C' --d_in--> C --d_out--> C''``."""
    if d_in.rows != d_out.cols:
        raise ValueError(f"incompatible shapes {d_in.shape} and {d_out.shape}")
    if check and not (d_out @ d_in).is_zero():
        raise CompositionNotZero("d_out @ d_in is nonzero")
    r_out, _ = elementary_divisors(d_out)
    r_in, torsion = elementary_divisors(d_in)
    return homology_from_ranks(d_out.cols, r_out, r_in, torsion)
