"""The simplicial path: L_iF(A,n) = π_i F K(res(A)[n]).

Combinatorial functors use the normalised model directly. Kernels of
surjective transformations and cokernels of injective ones go through the
mapping cone of the induced map of normalised models, since both sides are
combinatorial even when the kernel or cokernel is not. Everything else
falls back to levelwise matrices.
"""

from __future__ import annotations

from ..budget import Budget
from ..chain import FreeChainComplex, complex_homology, cone
from ..errors import BudgetExceeded
from ..functors import CokernelOf, KernelOf, PolyFunctor
from ..simplicial import (
    KComplex,
    NormalizedModel,
    apply_functor_levelwise,
    dold_kan_K,
    moore_complex_normalized,
    normalized_chain_map,
)
from ..zlinalg import FgAbGroup


def _grow(model: NormalizedModel, top: int) -> int:
    """Build bases up to ``top``; returns the highest level that fit the budget."""
    for m in range(top + 1):
        try:
            model.basis(m)
        except BudgetExceeded:
            return m - 1
    return top


def _model_complex(model: NormalizedModel, top: int) -> FreeChainComplex:
    ranks = tuple(len(model.basis(m)) for m in range(top + 1))
    diffs = {}
    for m in range(1, top + 1):
        d = diffs[m] = model.differential(m)
        model.budget.note_matrix(d.rows, d.cols, level=m)
    return FreeChainComplex(0, ranks, diffs)


def _homology_upto(cx: FreeChainComplex, reliable: int, offset: int = 0) -> dict[int, FgAbGroup]:
    """H_{i+offset} for 0 <= i <= reliable, from a complex that may be truncated above."""
    if reliable < 0:
        return {}
    hom = complex_homology(cx)
    return {i: hom.get(i + offset, FgAbGroup()) for i in range(reliable + 1)}


def _cone_case(f: PolyFunctor):
    if isinstance(f, KernelOf) and f.trans.surjective:
        t = f.trans
        if t.source.combinatorial and t.target.combinatorial:
            return "kernel-cone", t
    if isinstance(f, CokernelOf) and f.trans.injective:
        t = f.trans
        if t.source.combinatorial and t.target.combinatorial:
            return "cokernel-cone", t
    return None


def generic_values(f: PolyFunctor, c: FreeChainComplex, i_max: int,
                   budget: Budget) -> tuple[dict[int, FgAbGroup], str]:
    """π_i F K(C) for i <= i_max that fit the budget, plus the route taken."""
    kc = KComplex(c)
    if f.combinatorial:
        model = NormalizedModel(f, kc, budget)
        top = _grow(model, i_max + 1)
        cx = _model_complex(model, top)
        return _homology_upto(cx, min(i_max, top - 1)), "normalized"
    case = _cone_case(f)
    if case is not None:
        kind, t = case
        # kernel: π_i = H_{i+1}(cone); cokernel: π_i = H_i(cone)
        shift = 1 if kind == "kernel-cone" else 0
        want = i_max + 1 + shift
        src = NormalizedModel(t.source, kc, budget)
        tgt = NormalizedModel(t.target, kc, budget)
        top = min(_grow(src, want), _grow(tgt, want))
        phi = normalized_chain_map(t, src, tgt, top)
        cx = cone(phi, _model_complex(src, top), _model_complex(tgt, top))
        return _homology_upto(cx, min(i_max, top - 1 - shift), offset=shift), kind
    return naive_values(f, c, i_max, budget), "levelwise"


def naive_values(f: PolyFunctor, c: FreeChainComplex, i_max: int,
                 budget: Budget, normalized: bool = True) -> dict[int, FgAbGroup]:
    """Levelwise matrices for every level; the reference implementation."""
    from ..simplicial import moore_complex_unnormalized

    top = i_max + 1
    kc = KComplex(c)
    for m in range(top + 1):
        try:
            budget.check(f.rank(kc.rank(m)), level=m)
        except BudgetExceeded:
            top = m - 1
            break
    if top < 1:
        return {}
    x = apply_functor_levelwise(f, dold_kan_K(c, top), budget)
    build = moore_complex_normalized if normalized else moore_complex_unnormalized
    return _homology_upto(build(x, top), min(i_max, top - 1))
