"""Polynomial endofunctors of free abelian groups."""

from .base import PolyFunctor, matrix_map
from .closed import Constant, Div, Ext, Identity, Sym, Tensor
from .combinators import (
    CokernelOf,
    Compose,
    DirectSum,
    KernelOf,
    TensorProd,
    cokernel_functor,
    compose,
    direct_sum,
    kernel_functor,
    tensor_product,
)
from .cross_effect import CrossEffect, cross_effect
from .grammar import format_functor, parse_functor
from .lie import Lie, is_lyndon, lie_rewrite, lyndon_expansion, lyndon_words, witt_number
from .natural import NatTrans, canonical_nat_trans
from .schur import SchurE, SchurJ, SchurY, W, free_equivalent
from .superlie import SuperLie, superlie_basis


def basis_of(f: PolyFunctor, r: int) -> list:
    return f.basis_of(r)


def map_of(f: PolyFunctor, m):
    return f.map_of(m)


__all__ = [
    "CokernelOf",
    "Compose",
    "Constant",
    "CrossEffect",
    "DirectSum",
    "Div",
    "Ext",
    "Identity",
    "KernelOf",
    "Lie",
    "NatTrans",
    "PolyFunctor",
    "SchurE",
    "SchurJ",
    "SchurY",
    "SuperLie",
    "Sym",
    "Tensor",
    "TensorProd",
    "W",
    "basis_of",
    "canonical_nat_trans",
    "cokernel_functor",
    "compose",
    "cross_effect",
    "direct_sum",
    "format_functor",
    "free_equivalent",
    "is_lyndon",
    "kernel_functor",
    "lie_rewrite",
    "lyndon_expansion",
    "lyndon_words",
    "map_of",
    "matrix_map",
    "parse_functor",
    "superlie_basis",
    "tensor_product",
    "witt_number",
]
