"""E¹ pages of the Curtis spectral sequence for Moore spaces M(A, n).

E¹_{r,q} = L_q 𝓛^r(A, n-1). A cell is computed from the Lie functor
itself when it fits the budget; otherwise from the pieces of the Curtis
decomposition of 𝓛^r, which are reported side by side and never summed
(the splitting is not functorial).
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field

from .budget import Budget, default_cap
from .derived import DerivedRequest, derived_functor
from .errors import UnsupportedWeight
from .functors import Compose, Identity, Lie, PolyFunctor, SchurJ, Sym, TensorProd, free_equivalent
from .zlinalg import FgAbGroup

MAX_WEIGHT = 8


@dataclass(frozen=True)
class CurtisPiece:
    functor: PolyFunctor

    @property
    def degree(self) -> int:
        return self.functor.degree

    def __str__(self) -> str:
        return self.functor.expr()


def _j(n: int) -> PolyFunctor:
    return SchurJ(n)


def _o(*fs: PolyFunctor) -> PolyFunctor:
    out = fs[-1]
    for f in reversed(fs[:-1]):
        out = Compose(f, out)
    return out


def _t(*fs: PolyFunctor) -> PolyFunctor:
    out = fs[0]
    for f in fs[1:]:
        out = TensorProd(out, f)
    return out


def _pieces_table() -> dict[int, list[PolyFunctor]]:
    j = _j
    return {
        1: [Identity()],
        2: [j(2)],
        3: [j(3)],
        4: [_o(j(2), j(2)), j(4)],
        5: [_t(j(3), j(2)), j(5)],
        6: [_o(j(3), j(2)), _o(j(2), j(3)), _t(j(4), j(2)), j(6)],
        7: [_t(j(3), _o(Sym(2), j(2))), _t(j(5), j(2)), _t(_o(j(2), j(2)), j(3)),
            _t(j(4), j(3)), j(7)],
        8: [_o(j(2), j(2), j(2)), _o(j(2), j(4)), _t(j(3), j(2), j(3)), _t(j(5), j(3)),
            _o(j(4), j(2)), _t(j(4), _o(Sym(2), j(2))), _t(j(6), j(2)), j(8)],
    }


def curdec_pieces(r: int) -> list[CurtisPiece]:
    """Graded pieces of the Curtis filtration of 𝓛^r (the splitting is not functorial)."""
    if not 1 <= r <= MAX_WEIGHT:
        raise UnsupportedWeight(f"Curtis decomposition recorded for weights 1..{MAX_WEIGHT}, got {r}")
    return [CurtisPiece(f) for f in _pieces_table()[r]]


@dataclass(frozen=True)
class Exact:
    group: FgAbGroup

    def render(self) -> str:
        return str(self.group)


@dataclass(frozen=True)
class GradedPieces:
    pieces: tuple[tuple[str, FgAbGroup], ...]

    def render(self) -> str:
        inner = "; ".join(f"{d}: {g}" for d, g in self.pieces)
        return f"gr[{inner}]"


@dataclass(frozen=True)
class Unknown:
    cap: int

    def render(self) -> str:
        return "unknown"


Cell = Exact | GradedPieces | Unknown


@dataclass
class E1Page:
    moore_group: FgAbGroup
    moore_dim: int
    r_max: int
    q_max: int
    grid: dict[tuple[int, int], Cell] = field(default_factory=dict)
    budget_report: dict = field(default_factory=dict)

    def cell(self, r: int, q: int) -> Cell:
        return self.grid[(r, q)]

    def to_text(self) -> str:
        header = ["q\\r"] + [str(r) for r in range(1, self.r_max + 1)]
        rows = [header]
        for q in range(self.q_max + 1):
            rows.append([str(q)] + [self.grid[(r, q)].render() for r in range(1, self.r_max + 1)])
        widths = [max(len(row[c]) for row in rows) for c in range(len(header))]
        lines = [f"E1 page for M({self.moore_group}, {self.moore_dim})"]
        for row in rows:
            lines.append("  ".join(s.rjust(w) for s, w in zip(row, widths)).rstrip())
        return "\n".join(lines)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["r", "q", "value"])
        for (r, q) in sorted(self.grid):
            writer.writerow([r, q, self.grid[(r, q)].render()])
        return buf.getvalue()

    def to_json(self) -> dict:
        cells = []
        for (r, q) in sorted(self.grid):
            c = self.grid[(r, q)]
            entry: dict = {"r": r, "q": q, "value": c.render()}
            if isinstance(c, Exact):
                entry["kind"] = "exact"
            elif isinstance(c, GradedPieces):
                entry["kind"] = "graded_pieces"
                entry["pieces"] = [{"functor": d, "value": str(g)} for d, g in c.pieces]
            else:
                entry["kind"] = "unknown"
            cells.append(entry)
        return {
            "group": str(self.moore_group),
            "moore_dim": self.moore_dim,
            "r_max": self.r_max,
            "q_max": self.q_max,
            "cells": cells,
            "budget": self.budget_report,
        }


def _column(functor: PolyFunctor, a: FgAbGroup, shift: int, q_max: int, cap: int):
    budget = Budget(cap=cap)
    res = derived_functor(DerivedRequest(functor, a, shift, q_max, "auto", budget=budget))
    return res.values, budget


def curtis_e1(a: FgAbGroup, n: int, r_max: int, q_max: int, budget: int | None = None) -> E1Page:
    """E¹_{r,q} = L_q 𝓛^r(A, n-1) for 1 <= r <= r_max, 0 <= q <= q_max."""
    if n < 2:
        raise ValueError("Moore dimension must be at least 2")
    cap = default_cap() if budget is None else budget
    page = E1Page(a, n, r_max, q_max)
    worst = 0
    for q in range(q_max + 1):
        page.grid[(1, q)] = Exact(a if q == n - 1 else FgAbGroup())
    for r in range(2, r_max + 1):
        values, used = _column(Lie(r), a, n - 1, q_max, cap)
        worst = max(worst, used.max_cols)
        missing = [q for q in range(q_max + 1) if values.get(q) is None]
        piece_values = []
        if missing and r <= MAX_WEIGHT:
            for piece in curdec_pieces(r):
                vals, used = _column(free_equivalent(piece.functor), a, n - 1, q_max, cap)
                worst = max(worst, used.max_cols)
                piece_values.append((str(piece), vals))
        for q in range(q_max + 1):
            v = values.get(q)
            if v is not None:
                page.grid[(r, q)] = Exact(v)
            elif piece_values and all(vals.get(q) is not None for _, vals in piece_values):
                page.grid[(r, q)] = GradedPieces(tuple((d, vals[q]) for d, vals in piece_values))
            else:
                page.grid[(r, q)] = Unknown(cap)
    page.budget_report = {"cap": cap, "max_cols": worst}
    return page
