"""Exact integer linear algebra."""

from .elim import BACKEND, elementary_divisors, rank_of
from .groups import ZERO, FgAbGroup, invariant_factors_of
from .homology import homology_at
from .matrix import IntMatrix, block_diag, hstack, kron, vstack
from .snf import (
    LatticeSolver,
    SnfDecomposition,
    cokernel_group,
    column_cokernel,
    hermite_basis,
    invariant_factors,
    kernel_basis,
    smith_normal_form,
    solve_in_lattice,
)

__all__ = [
    "BACKEND",
    "FgAbGroup",
    "IntMatrix",
    "LatticeSolver",
    "SnfDecomposition",
    "ZERO",
    "block_diag",
    "cokernel_group",
    "column_cokernel",
    "elementary_divisors",
    "hermite_basis",
    "homology_at",
    "hstack",
    "invariant_factors",
    "invariant_factors_of",
    "kernel_basis",
    "kron",
    "rank_of",
    "smith_normal_form",
    "solve_in_lattice",
    "vstack",
]
