from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from derifun.chain import FreeChainComplex, complex_homology, cone, shift, tensor_complexes
from derifun.errors import CompositionNotZero
from derifun.zlinalg import FgAbGroup, IntMatrix

Z = FgAbGroup.cyclic


def two_term(m: int) -> FreeChainComplex:
    return FreeChainComplex.two_term(IntMatrix.from_dense([[m]], 1, 1))


def test_two_term_homology():
    assert complex_homology(two_term(6)) == {0: Z(6), 1: FgAbGroup()}
    assert complex_homology(two_term(0)) == {0: Z(0), 1: Z(0)}


def test_shape_validation():
    with pytest.raises(ValueError):
        FreeChainComplex(0, (1, 2), {1: IntMatrix.identity(2)})
    with pytest.raises(ValueError):
        FreeChainComplex(0, (1, 1), {})


def test_check_detects_nonzero_composite():
    one = IntMatrix.identity(1)
    c = FreeChainComplex.from_maps(0, (1, 1, 1), [one, one])
    with pytest.raises(CompositionNotZero):
        c.check()


@given(st.integers(0, 12), st.integers(-3, 5))
def test_shift_moves_homology(m, n):
    c = two_term(m)
    h, hs = complex_homology(c), complex_homology(shift(c, n))
    assert all(hs[k + n] == v for k, v in h.items())


@given(st.integers(1, 12), st.integers(1, 12))
def test_tensor_of_cyclic_resolutions(a, b):
    # Kunneth: H_0 = Z/a (x) Z/b, H_1 = Tor(Z/a, Z/b), both Z/gcd(a, b)
    h = complex_homology(tensor_complexes(two_term(a), two_term(b)))
    assert h[0] == Z(gcd(a, b))
    assert h[1] == Z(gcd(a, b))
    assert h[2].is_trivial


@given(st.integers(0, 9))
def test_cone_of_identity_is_acyclic(m):
    c = two_term(m)
    phi = {0: IntMatrix.identity(1), 1: IntMatrix.identity(1)}
    assert all(g.is_trivial for g in complex_homology(cone(phi, c, c)).values())


def test_cone_of_injection_is_cokernel():
    # Z --3--> Z in degree 0 viewed as a chain map between one-term complexes
    c = FreeChainComplex(0, (1,), {})
    phi = {0: IntMatrix.from_dense([[3]], 1, 1)}
    h = complex_homology(cone(phi, c, c))
    assert h[0] == Z(3)
    assert h[1].is_trivial
