import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from derifun.zlinalg import (
    BACKEND,
    FgAbGroup,
    IntMatrix,
    column_cokernel,
    elementary_divisors,
    homology_at,
    hstack,
    invariant_factors_of,
    kernel_basis,
    kron,
    smith_normal_form,
    solve_in_lattice,
)
from derifun.errors import CompositionNotZero

import oracles


@st.composite
def dense(draw, max_rows=4, max_cols=4, lo=-6, hi=6):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    return [[draw(st.integers(lo, hi)) for _ in range(c)] for _ in range(r)]


def mat(rows):
    return IntMatrix.from_dense(rows, len(rows), len(rows[0]))


@given(dense())
def test_snf_matches_determinantal_divisors(rows):
    snf = smith_normal_form(mat(rows))
    diag = [d for d in snf.diagonal() if d]
    assert diag == oracles.invariant_factors(rows)


@given(dense())
def test_snf_transforms_are_consistent(rows):
    m = mat(rows)
    snf = smith_normal_form(m)
    assert snf.U @ m @ snf.V == snf.D
    assert abs(oracles.det(snf.U.to_dense())) == 1
    assert abs(oracles.det(snf.V.to_dense())) == 1


@given(dense(max_rows=5, max_cols=5))
def test_elementary_divisors_agree_with_oracle(rows):
    rank, facs = elementary_divisors(mat(rows))
    assert rank == oracles.rational_rank(rows)
    assert facs == [f for f in oracles.invariant_factors(rows) if f != 1]


@given(dense(max_rows=6, max_cols=6, lo=-40, hi=40))
def test_backends_agree(rows):
    m = mat(rows)
    assert elementary_divisors(m, backend="python") == elementary_divisors(m, backend="cython")


def test_backend_name():
    assert BACKEND in ("cython", "python")


def test_backend_handles_huge_entries():
    big = 10 ** 30
    m = IntMatrix.from_dense([[big, 1], [0, big]], 2, 2)
    assert elementary_divisors(m, backend="cython") == elementary_divisors(m, backend="python")


@given(dense())
def test_cokernel_matches_oracle(rows):
    assert column_cokernel(mat(rows)) == FgAbGroup.from_orders(oracles.cokernel_orders(rows))


@given(dense())
def test_kernel_basis_spans_kernel(rows):
    m = mat(rows)
    k = kernel_basis(m)
    assert (m @ k).is_zero()
    assert k.cols == len(rows[0]) - oracles.rational_rank(rows)
    if k.cols:
        # saturated: the kernel lattice is a direct summand
        assert column_cokernel(k).invariant_factors == ()


@given(dense(max_rows=4, max_cols=3), st.lists(st.integers(-5, 5), min_size=3, max_size=3))
def test_solve_in_lattice_roundtrip(rows, coeffs):
    basis = mat(rows)
    assume(oracles.rational_rank(rows) == basis.cols)
    coeffs = coeffs[:basis.cols]
    target = [sum(basis[i, j] * coeffs[j] for j in range(basis.cols)) for i in range(basis.rows)]
    sol = solve_in_lattice(basis, target)
    assert [sum(basis[i, j] * sol[j] for j in range(basis.cols)) for i in range(basis.rows)] == target


orders = st.lists(st.sampled_from([0, 1, 2, 3, 4, 6, 8, 9, 12]), max_size=4)


@given(orders)
def test_group_canonical_form(os_):
    g = FgAbGroup.from_orders(os_)
    facs = g.invariant_factors
    assert all(b % a == 0 for a, b in zip(facs, facs[1:]))
    assert g.free_rank == os_.count(0)
    nonzero = [o for o in os_ if o > 0]
    from math import prod
    assert prod(facs) == prod(nonzero)
    assert FgAbGroup.from_orders(g.cyclic_orders()) == g


@given(orders, orders)
def test_group_sum_and_tensor(a, b):
    ga, gb = FgAbGroup.from_orders(a), FgAbGroup.from_orders(b)
    assert ga + gb == gb + ga
    assert ga.tensor(gb) == gb.tensor(ga)
    assert ga.tensor(FgAbGroup.free(1)) == ga
    assert ga.tor(FgAbGroup.free(1)).is_trivial


def test_group_examples():
    assert FgAbGroup.from_orders([2, 3]) == FgAbGroup.cyclic(6)
    assert FgAbGroup.from_orders([4, 6]) == FgAbGroup(0, (2, 12))
    assert str(FgAbGroup.from_orders([0, 0, 2])) == "Z^2 + Z/2"
    assert str(FgAbGroup()) == "0"
    assert FgAbGroup.cyclic(1).is_trivial
    assert FgAbGroup.cyclic(0) == FgAbGroup.free(1)
    assert invariant_factors_of([2, 2, 0]) == (1, (2, 2))
    with pytest.raises(ValueError):
        FgAbGroup(0, (2, 3))


def test_homology_at():
    two = IntMatrix.from_dense([[2]], 1, 1)
    zero = IntMatrix(0, 1)
    assert homology_at(two, zero) == FgAbGroup.cyclic(2)
    with pytest.raises(CompositionNotZero):
        homology_at(two, IntMatrix.from_dense([[1]], 1, 1))


@given(dense(max_rows=3, max_cols=3), dense(max_rows=2, max_cols=2))
def test_kron_shape_and_rank(a, b):
    k = kron(mat(a), mat(b))
    assert k.shape == (len(a) * len(b), len(a[0]) * len(b[0]))
    assert elementary_divisors(k)[0] == oracles.rational_rank(a) * oracles.rational_rank(b)


def test_hstack():
    a = IntMatrix.identity(2)
    h = hstack([a, a])
    assert h.to_dense() == [[1, 0, 1, 0], [0, 1, 0, 1]]


def test_pure_python_fallback_selected_by_env():
    import os
    import subprocess
    import sys

    code = ("from derifun.zlinalg import BACKEND, IntMatrix, elementary_divisors\n"
            "m = IntMatrix.from_dense([[2, 4], [6, 8]], 2, 2)\n"
            "print(BACKEND, elementary_divisors(m))")
    env = dict(os.environ, DERIFUN_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert out.stdout.split()[0] == "python"
    assert out.stdout.strip().endswith("(2, [2, 4])")
