import random
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from derifun.errors import ParseError, UnknownName, UnsupportedDegree
from derifun.functors import (
    Div,
    Ext,
    Lie,
    SchurJ,
    SchurY,
    SuperLie,
    Sym,
    Tensor,
    W,
    canonical_nat_trans,
    cross_effect,
    format_functor,
    is_lyndon,
    lyndon_words,
    parse_functor,
    witt_number,
)
from derifun.zlinalg import FgAbGroup, IntMatrix

import oracles

SAMPLE = ["Id", "T^2", "T^3", "SP^2", "SP^3", "L^2", "L^3", "G^2", "G^3", "Lie^2", "Lie^3",
          "Lie^4", "J^3", "Y^3", "E^3", "SLie^2", "SLie^3", "L^2 o L^2", "SP^2 * L^2",
          "G^2 + SP^2", "W^3", "Z^2", "(SP^2 + L^2) o T^2"]


@st.composite
def matrix(draw, rows, cols):
    return IntMatrix.from_dense([[draw(st.integers(-2, 2)) for _ in range(cols)]
                                 for _ in range(rows)], rows, cols)


@st.composite
def composable(draw):
    a, b, c = (draw(st.integers(0, 3)) for _ in range(3))
    return draw(matrix(b, a)), draw(matrix(c, b))


@pytest.mark.parametrize("text", SAMPLE)
@given(pair=composable())
def test_functoriality(text, pair):
    f = parse_functor(text)
    g, h = pair
    assert f.map_of(h @ g) == f.map_of(h) @ f.map_of(g)


@pytest.mark.parametrize("text", SAMPLE)
def test_identity_preserved(text):
    f = parse_functor(text)
    for r in range(4):
        m = f.map_of(IntMatrix.identity(r))
        assert m == IntMatrix.identity(m.rows)


@pytest.mark.parametrize("r", range(5))
@pytest.mark.parametrize("n", range(1, 5))
def test_ranks_of_closed_functors(r, n):
    assert Tensor(n).rank(r) == r ** n
    assert Sym(n).rank(r) == oracles.sym_rank(r, n)
    assert Div(n).rank(r) == oracles.sym_rank(r, n)
    assert Ext(n).rank(r) == oracles.ext_rank(r, n)
    assert Lie(n).rank(r) == oracles.lyndon_count_brute(r, n)
    assert witt_number(r, n) == oracles.lyndon_count_brute(r, n)


@pytest.mark.parametrize("r", range(1, 4))
@pytest.mark.parametrize("n", range(2, 5))
def test_schur_kernel_ranks(r, n):
    # the multiplication maps are surjective on free modules
    assert SchurJ(n).rank(r) == r * oracles.sym_rank(r, n - 1) - oracles.sym_rank(r, n)
    assert SchurY(n).rank(r) == r * oracles.ext_rank(r, n - 1) - oracles.ext_rank(r, n)


def test_lyndon_words():
    for r in range(1, 4):
        for n in range(1, 6):
            words = lyndon_words(r, n)
            assert all(is_lyndon(w) and oracles.is_lyndon_brute(w) for w in words)
            assert len(set(words)) == oracles.lyndon_count_brute(r, n)


@pytest.mark.parametrize("n", range(1, 6))
def test_w_on_rank_one(n):
    # SP^n(Z) -> G^n(Z) sends x^n to n! x^[n]
    assert W(n).value(1) == FgAbGroup.cyclic(factorial(n))


@pytest.mark.parametrize("name", ["sym_mult", "ext_mult", "div_mult", "sp_to_tensor",
                                  "ext_to_tensor", "div_to_tensor", "sp_to_gamma"])
@given(data=st.data())
def test_naturality(name, data):
    t = canonical_nat_trans(name, 3)
    a, b = data.draw(st.integers(0, 3)), data.draw(st.integers(0, 3))
    f = data.draw(matrix(b, a))
    assert t.matrix_at(b) @ t.source.map_of(f) == t.target.map_of(f) @ t.matrix_at(a)


def test_unknown_transformation():
    with pytest.raises(UnknownName):
        canonical_nat_trans("no_such_map", 2)


def test_superlie_degree_limit():
    with pytest.raises(UnsupportedDegree):
        SuperLie(6)
    with pytest.raises(UnsupportedDegree):
        parse_functor("SLie^6")


@pytest.mark.parametrize("text", SAMPLE)
def test_parse_format_roundtrip(text):
    f = parse_functor(text)
    assert format_functor(parse_functor(format_functor(f))) == format_functor(f)


def test_precedence():
    f = parse_functor("SP^2 * L^2 o L^2")
    assert f.degree == 2 + 4
    assert parse_functor("L^2 o L^2").degree == 4
    assert parse_functor("Z").degree == 0


@pytest.mark.parametrize("bad", ["", "SP^", "Foo^2", "L^2 o", "(L^2", "L^2 ++ SP^2"])
def test_parse_errors(bad):
    with pytest.raises((ParseError, UnknownName)):
        parse_functor(bad)


@pytest.mark.parametrize("text,degree", [("T^2", 2), ("SP^3", 3), ("L^2 o L^2", 4), ("Lie^3", 3)])
def test_cross_effects_vanish_above_degree(text, degree):
    ce = cross_effect(parse_functor(text), degree + 1)
    assert ce.rank((1,) * (degree + 1)) == 0
    assert ce.rank((2,) * (degree + 1)) == 0


@given(st.integers(0, 3), st.integers(0, 3))
def test_quadratic_cross_effects(a, b):
    assert cross_effect(Tensor(2), 2).rank((a, b)) == 2 * a * b
    assert cross_effect(Sym(2), 2).rank((a, b)) == a * b
    assert cross_effect(Ext(2), 2).rank((a, b)) == a * b


def test_cross_effect_map_functorial():
    rng = random.Random(1)
    ce = cross_effect(Sym(2), 2)
    ms = tuple(IntMatrix.from_dense([[rng.randint(-2, 2) for _ in range(2)] for _ in range(2)], 2, 2)
               for _ in range(2))
    img = ce.map_of(ms)
    assert img.shape == (ce.rank((2, 2)), ce.rank((2, 2)))
