"""Décalage ladders down to shift 0, then Koszul complexes.

    L_i SP^j(A, s) = L_{i-j} Λ^j(A, s-1)
    L_i Λ^j(A, s)  = L_{i-j} Γ_j(A, s-1)
    L_i J^j(A, s)  = L_{i-j} Y^j(A, s-1)

Γ_j has no further step down, so it is evaluated by the normalised model at
whatever shift remains. At shift 0, SP^j and Λ^j use Kos_j and Kos^j, and
J^j and Y^j use the cone of the multiplication res (x) Kos_{j-1} -> Kos_j.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..budget import Budget
from ..chain import complex_homology
from ..errors import NotReducible
from ..functors import Div, Ext, KernelOf, PolyFunctor, Sym
from ..zlinalg import FgAbGroup
from .generic import generic_values
from .koszul import koszul_basis, koszul_complex, schur_koszul_cone
from .resolution import Resolution

_STEP = {"SP": "L", "L": "G", "J": "Y"}


def classify(f: PolyFunctor) -> tuple[str, int] | None:
    """(kind, degree) for functors with a ladder, else None."""
    if isinstance(f, Sym):
        return "SP", f.n
    if isinstance(f, Ext):
        return "L", f.n
    if isinstance(f, Div):
        return "G", f.n
    if isinstance(f, KernelOf):
        if f.trans.name == "sym_mult":
            return "J", f.trans.n
        if f.trans.name == "ext_mult":
            return "Y", f.trans.n
    return None


@dataclass(frozen=True)
class Ladder:
    """Where a request lands after the décalage steps."""

    kind: str
    degree: int
    shift: int
    offset: int
    steps: tuple[str, ...]

    def describe(self) -> str:
        return " -> ".join(self.steps)


def ladder(kind: str, j: int, shift: int) -> Ladder:
    steps = [f"{kind}^{j}({shift})"]
    offset = 0
    while shift >= 1 and kind in _STEP:
        kind = _STEP[kind]
        shift -= 1
        offset += j
        steps.append(f"{kind}^{j}({shift})")
    return Ladder(kind, j, shift, offset, tuple(steps))


def _base_values(lad: Ladder, res: Resolution, top: int,
                 budget: Budget) -> tuple[dict[int, FgAbGroup], str]:
    j = lad.degree
    if top < 0:
        return {}, "none"
    if lad.shift == 0 and lad.kind in ("SP", "L"):
        variant = "sp" if lad.kind == "SP" else "lambda"
        for k in range(j + 1):
            budget.check(len(koszul_basis(res.rank_L, res.rank_M, j, k, variant)), level=k)
        hom = complex_homology(koszul_complex(res.f, j, variant))
        name = "Kos_" if variant == "sp" else "Kos^"
        return {i: hom.get(i, FgAbGroup()) for i in range(top + 1)}, f"{name}{j}"
    if lad.shift == 0 and lad.kind in ("J", "Y") and j >= 2:
        variant = "sp" if lad.kind == "J" else "lambda"
        hom = complex_homology(schur_koszul_cone(res, j, variant))
        return ({i: hom.get(i + 1, FgAbGroup()) for i in range(top + 1)},
                f"cone(res * Kos{'_' if variant == 'sp' else '^'}{j - 1} -> Kos{'_' if variant == 'sp' else '^'}{j})")
    f = {"SP": Sym, "L": Ext, "G": Div}.get(lad.kind)
    if f is not None:
        functor = f(j)
    else:
        from ..functors import SchurJ, SchurY

        functor = (SchurJ if lad.kind == "J" else SchurY)(j)
    values, route = generic_values(functor, res.complex(lad.shift), top, budget)
    return values, f"generic {route}"


def fast_values(f: PolyFunctor, res: Resolution, shift: int, i_max: int,
                budget: Budget) -> tuple[dict[int, FgAbGroup], str]:
    kind = classify(f)
    if kind is None:
        raise NotReducible(f"no décalage ladder for {f}")
    lad = ladder(kind[0], kind[1], shift)
    base, how = _base_values(lad, res, i_max - lad.offset, budget)
    values = {}
    for i in range(i_max + 1):
        b = i - lad.offset
        if b < 0:
            values[i] = FgAbGroup()
        elif b in base:
            values[i] = base[b]
    return values, f"{lad.describe()}; {how}" if len(lad.steps) > 1 else how
