from math import comb, gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from derifun import reference as ref
from derifun.budget import Budget
from derifun.chain import complex_homology
from derifun.derived import (
    DerivedRequest,
    Resolution,
    classify,
    compare_paths,
    derham_complex,
    derham_homology,
    derived_functor,
    fast_derived,
    generic_derived,
    koszul_complex,
    ladder,
    multi_tor,
    resolve,
    schur_koszul_cone,
)
from derifun.errors import NotReducible
from derifun.functors import Div, Ext, Identity, Lie, SchurJ, SchurY, Sym, Tensor, parse_functor
from derifun.zlinalg import FgAbGroup, IntMatrix

Z = FgAbGroup.cyclic
orders = st.lists(st.sampled_from([0, 2, 3, 4, 6]), min_size=1, max_size=2)


@given(orders)
def test_resolution_of_any_group(os_):
    a = FgAbGroup.from_orders(os_)
    res = resolve(a)
    assert complex_homology(res.complex())[0] == a
    assert complex_homology(res.padded(2).complex())[0] == a


def test_resolution_validation():
    with pytest.raises(ValueError):
        Resolution(IntMatrix.from_dense([[2, 4]], 1, 2), Z(2))
    with pytest.raises(ValueError):
        Resolution(IntMatrix.from_dense([[2]], 1, 1), Z(3))


@given(st.integers(1, 12), st.integers(1, 12))
def test_tor_of_two_cyclic_groups(a, b):
    assert multi_tor([Z(a), Z(b)], 0) == Z(gcd(a, b))
    assert multi_tor([Z(a), Z(b)], 1) == Z(gcd(a, b))
    assert multi_tor([Z(a), Z(b)], 2).is_trivial


@given(st.integers(2, 6), st.integers(2, 6), st.integers(2, 6))
def test_tor_of_three_cyclic_groups(a, b, c):
    g = gcd(a, b, c)
    # three two-term resolutions tensored: Tor_i is (Z/g)^C(2, i)
    for i in range(4):
        assert multi_tor([Z(a), Z(b), Z(c)], i) == FgAbGroup.from_orders([g] * comb(2, i))


def test_tor_with_free_factor():
    assert multi_tor([Z(4), FgAbGroup.free(1)], 1).is_trivial
    assert multi_tor([], 0) == FgAbGroup.free(1)


@pytest.mark.parametrize("variant", ["sp", "lambda"])
@pytest.mark.parametrize("r", [1, 2, 3])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_koszul_of_isomorphism_is_acyclic(variant, r, n):
    cx = koszul_complex(IntMatrix.identity(r), n, variant)
    assert all(g.is_trivial for g in complex_homology(cx).values())


@pytest.mark.parametrize("m,n", [(2, 2), (3, 2), (4, 3), (2, 3)])
def test_koszul_of_cyclic_resolution(m, n):
    # L_0 SP^n(Z/m) = Z/m, higher terms vanish
    cx = koszul_complex(IntMatrix.from_dense([[m]], 1, 1), n, "sp")
    h = complex_homology(cx)
    assert h[min(h)] == Z(m)
    assert all(v.is_trivial for k, v in h.items() if k != min(h))


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("variant", ["sp", "lambda"])
def test_schur_cone_is_a_complex(n, variant):
    cone = schur_koszul_cone(resolve(FgAbGroup.from_orders([0, 2])), n, variant)
    cone.check()


@pytest.mark.parametrize("f", [Identity(), Tensor(2), Sym(3), Ext(2), Div(2), Lie(3), SchurJ(3)])
@pytest.mark.parametrize("r", [1, 2])
def test_free_group_in_degree_zero(f, r):
    vals = derived_functor(DerivedRequest(f, FgAbGroup.free(r), 0, 2)).values
    assert vals[0] == FgAbGroup.free(f.rank(r))
    assert vals[1].is_trivial and vals[2].is_trivial


@given(orders, st.integers(0, 3))
def test_identity_is_a_suspension(os_, n):
    a = FgAbGroup.from_orders(os_)
    vals = derived_functor(DerivedRequest(Identity(), a, n, n + 1)).values
    assert vals[n] == a
    assert all(vals[i].is_trivial for i in vals if i != n)


@pytest.mark.parametrize("kind,f", [("SP", Sym(2)), ("L", Ext(2)), ("G", Div(2))])
@pytest.mark.parametrize("text", ["Z/2", "Z/6", "Z^2"])
@pytest.mark.parametrize("n", [0, 1, 2])
def test_quadratic_values(kind, f, text, n):
    from derifun.cli import parse_group

    a = parse_group(text)
    for method in ("generic", "decalage"):
        vals = derived_functor(DerivedRequest(f, a, n, 2 * n + 2, method)).values
        assert vals == {i: ref.QUADRATIC[kind](a, n, i) for i in range(2 * n + 3)}, method


def test_classify():
    assert classify(Sym(3)) == ("SP", 3)
    assert classify(Ext(2)) == ("L", 2)
    assert classify(Div(4)) == ("G", 4)
    assert classify(SchurJ(3)) == ("J", 3)
    assert classify(SchurY(3)) == ("Y", 3)
    assert classify(Lie(3)) is None
    assert classify(parse_functor("L^2 o L^2")) is None


def test_ladder_steps():
    lad = ladder("SP", 3, 2)
    assert (lad.kind, lad.shift, lad.offset) == ("G", 0, 6)
    lad = ladder("J", 4, 3)
    assert (lad.kind, lad.shift, lad.offset) == ("Y", 2, 4)
    assert ladder("L", 2, 0).offset == 0


def test_fast_path_refuses_irreducible():
    with pytest.raises(NotReducible):
        fast_derived(DerivedRequest(Lie(3), Z(2), 0, 2))
    with pytest.raises(NotReducible):
        compare_paths(DerivedRequest(Lie(3), Z(2), 0, 2))


@pytest.mark.parametrize("f", [SchurJ(3), SchurY(3), Sym(3), Ext(3), Div(3)])
@pytest.mark.parametrize("text,n", [("Z/2", 0), ("Z/3", 1), ("Z + Z/2", 0)])
def test_paths_agree(f, text, n):
    from derifun.cli import parse_group

    cmp = compare_paths(DerivedRequest(f, parse_group(text), n, 3))
    assert cmp.compared


def test_budget_marks_unknown_degrees():
    res = derived_functor(DerivedRequest(Lie(3), Z(2), 1, 6, budget=Budget(cap=30)))
    assert res.unknown
    assert all(res[i] is not None for i in range(min(res.unknown)))
    assert res.budget_report["max_cols"] <= 30


def test_request_validation():
    with pytest.raises(ValueError):
        DerivedRequest(Sym(2), Z(2), -1)
    with pytest.raises(ValueError):
        DerivedRequest(Sym(2), Z(2), 0, -1)
    with pytest.raises(ValueError):
        DerivedRequest(Sym(2), Z(2), method="magic")


def test_resolution_independence():
    for f in (Ext(2), Sym(3), SchurJ(3)):
        a = FgAbGroup.from_orders([0, 2])
        base = generic_derived(DerivedRequest(f, a, 0, 3)).values
        padded = generic_derived(DerivedRequest(f, a, 0, 3, resolution=resolve(a).padded())).values
        assert base == padded


@pytest.mark.parametrize("n", [2, 3, 5, 7])
@pytest.mark.parametrize("r", [1, 2])
def test_dual_derham_prime_degree(n, r):
    hom = derham_homology(n, r, "C")
    assert hom[0] == FgAbGroup.from_orders([n] * r)
    assert all(v.is_trivial for i, v in hom.items() if i > 0)


@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("variant", ["C", "D"])
def test_derham_complexes_are_complexes(n, variant):
    derham_complex(n, 2, variant).check()


@pytest.mark.parametrize("n", range(2, 8))
def test_dual_derham_h0(n):
    for r in (1, 2):
        assert derham_homology(n, r, "C")[0] == ref.dual_derham_h0(n, r)

