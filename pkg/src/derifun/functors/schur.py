"""Schur-type functors J^n, Y^n, E^n and the cokernel functor W_n.

On free abelian groups:

* J^n = ker(A (x) SP^{n-1} -> SP^n)
* Y^n = ker(A (x) L^{n-1} -> L^n)
* E^n = ker(A (x) G^{n-1} -> G^n)
* W_n = coker(SP^n -> G^n)
"""

from __future__ import annotations

from .base import PolyFunctor
from .closed import Div, Ext
from .combinators import CokernelOf, Compose, DirectSum, KernelOf, TensorProd
from .lie import Lie
from .natural import canonical_nat_trans


def SchurJ(n: int) -> KernelOf:
    return KernelOf(canonical_nat_trans("sym_mult", n), f"J^{n}")


def SchurY(n: int) -> KernelOf:
    return KernelOf(canonical_nat_trans("ext_mult", n), f"Y^{n}")


def SchurE(n: int) -> KernelOf:
    return KernelOf(canonical_nat_trans("div_mult", n), f"E^{n}")


def W(n: int) -> CokernelOf:
    return CokernelOf(canonical_nat_trans("sp_to_gamma", n), f"W^{n}")


def free_equivalent(f: PolyFunctor) -> PolyFunctor:
    """A naturally isomorphic functor (on free modules) that is cheaper to evaluate.

    Uses J^2 = L^2, J^3 = Lie^3 and Y^2 = G^2, recursing
    through the combinators. Derived functors only see free modules, so the
    substitution does not change any derived value.
    """
    if isinstance(f, KernelOf):
        name, n = f.trans.name, f.trans.n
        if name == "sym_mult" and n == 2:
            return Ext(2)
        if name == "sym_mult" and n == 3:
            return Lie(3)
        if name == "ext_mult" and n == 2:
            return Div(2)
        return f
    if isinstance(f, Compose):
        return Compose(free_equivalent(f.outer), free_equivalent(f.inner))
    if isinstance(f, TensorProd):
        return TensorProd(free_equivalent(f.left), free_equivalent(f.right))
    if isinstance(f, DirectSum):
        return DirectSum(free_equivalent(f.left), free_equivalent(f.right))
    return f

