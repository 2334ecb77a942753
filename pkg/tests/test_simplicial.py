from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from derifun.budget import Budget
from derifun.chain import FreeChainComplex
from derifun.derived import naive_values, resolve
from derifun.errors import InsufficientTruncation
from derifun.functors import parse_functor
from derifun.simplicial import (
    KComplex,
    NormalizedModel,
    apply_functor_levelwise,
    dold_kan_K,
    homotopy_from_complex,
    homotopy_groups,
    jump_mask,
    surjections,
)
from derifun.zlinalg import FgAbGroup, IntMatrix

import oracles


@pytest.mark.parametrize("m", range(6))
def test_surjections(m):
    for k in range(m + 1):
        ss = surjections(m, k)
        assert len(ss) == comb(m, k)
        for s in ss:
            assert s[0] == 0 and s[-1] == k
            assert all(b - a in (0, 1) for a, b in zip(s, s[1:]))
            assert bin(jump_mask(s)).count("1") == k


@st.composite
def small_complex(draw):
    """A two- or three-term complex with d o d = 0, built from a factorisation."""
    lo = draw(st.integers(0, 2))
    r0, r1 = draw(st.integers(1, 2)), draw(st.integers(1, 2))
    d1 = [[draw(st.integers(-3, 3)) for _ in range(r1)] for _ in range(r0)]
    m1 = IntMatrix.from_dense(d1, r0, r1)
    if draw(st.booleans()):
        return FreeChainComplex(lo, (r0, r1), {lo + 1: m1}), None
    # third term: columns from the integer kernel of d1
    from derifun.zlinalg import kernel_basis
    k = kernel_basis(m1)
    if k.cols == 0:
        return FreeChainComplex(lo, (r0, r1), {lo + 1: m1}), None
    scale = draw(st.integers(1, 4))
    m2 = k.scale(scale)
    return FreeChainComplex(lo, (r0, r1, m2.cols), {lo + 1: m1, lo + 2: m2}), (d1, m2.to_dense())


def oracle_homology(c: FreeChainComplex) -> dict[int, FgAbGroup]:
    out = {}
    for k in range(c.lo, c.hi + 1):
        d_out = c.d(k).to_dense() if c.rank(k - 1) else []
        d_in = c.d(k + 1).to_dense() if c.rank(k + 1) else []
        r_out = oracles.rational_rank(d_out) if d_out and d_out[0] else 0
        if d_in and d_in[0]:
            facs = oracles.invariant_factors(d_in)
        else:
            facs = []
        free = c.rank(k) - r_out - len(facs)
        out[k] = FgAbGroup.from_orders([0] * free + [f for f in facs if f != 1])
    return out


@given(small_complex())
def test_k_is_simplicial(pair):
    c, _ = pair
    x = dold_kan_K(c, c.hi + 2)
    assert x.check_identities() == []


@given(small_complex())
def test_homotopy_of_k_is_homology(pair):
    c, _ = pair
    top = c.hi + 1
    x = dold_kan_K(c, top + 1)
    want = oracle_homology(c)
    for method in ("normalized", "unnormalized"):
        got = homotopy_groups(x, top, method)
        for i in range(top + 1):
            assert got[i] == want.get(i, FgAbGroup()), (method, i)


def test_truncation_guard():
    c = resolve(FgAbGroup.cyclic(2)).complex(0)
    x = dold_kan_K(c, 2)
    with pytest.raises(InsufficientTruncation):
        homotopy_groups(x, 2)


def test_k_ranks_of_a_sphere():
    # K(Z[n]) has rank C(m, n) at level m
    c = FreeChainComplex(2, (1,), {})
    kc = KComplex(c)
    assert [kc.rank(m) for m in range(6)] == [comb(m, 2) for m in range(6)]


@pytest.mark.parametrize("text", ["L^2", "SP^2", "G^2", "T^2", "SP^3", "L^2 o L^2", "SP^2 * L^2"])
@pytest.mark.parametrize("orders,n", [([2], 0), ([3], 1), ([0, 2], 0), ([4], 1)])
def test_model_agrees_with_levelwise(text, orders, n):
    f = parse_functor(text)
    c = resolve(FgAbGroup.from_orders(orders)).complex(n)
    naive = naive_values(f, c, 3, Budget())
    model = NormalizedModel(f, KComplex(c), Budget())
    fast = homotopy_from_complex(model.complex(4), 3)
    assert all(fast[i] == naive[i] for i in naive)


@pytest.mark.parametrize("text,top", [("L^2", 4), ("SP^2", 4), ("J^3", 3)])
def test_functor_of_k_is_simplicial(text, top):
    c = resolve(FgAbGroup.from_orders([0, 2])).complex(1)
    x = apply_functor_levelwise(parse_functor(text), dold_kan_K(c, top))
    assert x.check_identities() == []


def test_levelwise_respects_budget():
    from derifun.errors import BudgetExceeded

    c = resolve(FgAbGroup.free(2)).complex(2)
    with pytest.raises(BudgetExceeded):
        apply_functor_levelwise(parse_functor("T^3"), dold_kan_K(c, 4), Budget(cap=10))
