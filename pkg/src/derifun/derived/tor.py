"""Multiple Tor: homology of a tensor product of resolutions."""

from __future__ import annotations

from collections.abc import Sequence

from ..chain import FreeChainComplex, complex_homology, tensor_complexes
from ..zlinalg import FgAbGroup
from .resolution import resolve


def multi_tor(groups: Sequence[FgAbGroup], i: int) -> FgAbGroup:
    """Tor_i(A_1, ..., A_n) = H_i(res A_1 (x) ... (x) res A_n)."""
    if not groups:
        return FgAbGroup.free(1) if i == 0 else FgAbGroup()
    total: FreeChainComplex = resolve(groups[0]).complex()
    for a in groups[1:]:
        total = tensor_complexes(total, resolve(a).complex())
    return complex_homology(total).get(i, FgAbGroup())
