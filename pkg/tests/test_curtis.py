import json
from importlib import resources

import jsonschema
import pytest

from derifun import reference as ref
from derifun.curtis import MAX_WEIGHT, Exact, GradedPieces, Unknown, curdec_pieces, curtis_e1
from derifun.errors import UnsupportedWeight
from derifun.functors import Lie, free_equivalent
from derifun.zlinalg import FgAbGroup

Z = FgAbGroup.cyclic


def schema(name: str) -> dict:
    return json.loads(resources.files("derifun").joinpath("schema", name).read_text())


@pytest.mark.parametrize("r", range(1, MAX_WEIGHT + 1))
def test_pieces_have_weight_r(r):
    assert all(p.degree == r for p in curdec_pieces(r))


@pytest.mark.parametrize("r", range(1, 7))
def test_piece_ranks_add_up_to_lie(r):
    # the filtration is by free summands on free modules, so ranks add
    for rank in (1, 2, 3):
        total = sum(free_equivalent(p.functor).rank(rank) for p in curdec_pieces(r))
        assert total == Lie(r).rank(rank)


@pytest.mark.parametrize("r", [0, MAX_WEIGHT + 1])
def test_weight_out_of_range(r):
    with pytest.raises(UnsupportedWeight):
        curdec_pieces(r)


def test_moore_dimension_guard():
    with pytest.raises(ValueError):
        curtis_e1(Z(2), 1, 2, 2)


def test_small_page_matches_quadratic_formulas():
    a = Z(2)
    page = curtis_e1(a, 2, 2, 4)
    for q in range(5):
        assert page.cell(1, q) == Exact(a if q == 1 else FgAbGroup())
        # Lie^2 = exterior square
        assert page.cell(2, q) == Exact(ref.derived_lambda2(a, 1, q))


def test_budget_degrades_to_pieces_or_unknown():
    page = curtis_e1(Z(3), 2, 3, 5, budget=20)
    cells = [page.cell(r, q) for r in (2, 3) for q in range(6)]
    assert any(not isinstance(c, Exact) for c in cells)
    assert all(isinstance(c, (Exact, GradedPieces, Unknown)) for c in cells)
    assert page.budget_report["max_cols"] <= 20


def test_graded_pieces_render_separately():
    cell = GradedPieces((("J^4", Z(2)), ("L^2 o L^2", Z(4))))
    assert cell.render() == "gr[J^4: Z/2; L^2 o L^2: Z/4]"
    assert Unknown(5).render() == "unknown"


def test_serializations():
    page = curtis_e1(Z(3), 2, 3, 4)
    jsonschema.validate(page.to_json(), schema("e1page.schema.json"))
    lines = page.to_csv().strip().splitlines()
    assert lines[0] == "r,q,value"
    assert len(lines) == 1 + 3 * 5
    text = page.to_text()
    assert text.splitlines()[0] == "E1 page for M(Z/3, 2)"
