"""Derived functors L_iF(A, n): resolutions, simplicial and Koszul paths, multi-Tor, de Rham."""

from .api import (
    METHODS,
    Comparison,
    DerivedRequest,
    DerivedResult,
    compare_paths,
    derived_functor,
    fast_derived,
    generic_derived,
)
from .derham import derham_complex, derham_homology
from .fast import classify, ladder
from .generic import generic_values, naive_values
from .koszul import koszul_complex, schur_koszul_cone, schur_koszul_map
from .resolution import Resolution, resolve
from .tor import multi_tor

__all__ = [
    "METHODS",
    "Comparison",
    "DerivedRequest",
    "DerivedResult",
    "Resolution",
    "classify",
    "compare_paths",
    "derham_complex",
    "derham_homology",
    "derived_functor",
    "fast_derived",
    "generic_derived",
    "generic_values",
    "koszul_complex",
    "ladder",
    "multi_tor",
    "naive_values",
    "resolve",
    "schur_koszul_cone",
    "schur_koszul_map",
]
