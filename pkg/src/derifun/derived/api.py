"""Requests, results and the top-level entry points."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..budget import Budget
from ..errors import Mismatch, NotReducible
from ..functors import PolyFunctor
from ..zlinalg import FgAbGroup
from .fast import classify, fast_values
from .generic import generic_values
from .resolution import Resolution, resolve

METHODS = ("auto", "generic", "koszul", "decalage")


@dataclass
class DerivedRequest:
    """L_iF(A, n) for 0 <= i <= i_max."""

    functor: PolyFunctor
    group: FgAbGroup
    shift: int = 0
    i_max: int = 4
    method: str = "auto"
    resolution: Resolution | None = None
    budget: Budget | None = None

    def __post_init__(self):
        if self.i_max < 0:
            raise ValueError("i_max must be non-negative")
        if self.shift < 0:
            raise ValueError("shift must be non-negative")
        if self.method not in METHODS:
            raise ValueError(f"method must be one of {METHODS}")


@dataclass
class DerivedResult:
    """Values per degree; ``None`` marks a degree the budget did not reach."""

    request: DerivedRequest
    values: dict[int, FgAbGroup | None]
    provenance: dict[int, str]
    budget_report: dict = field(default_factory=dict)

    @property
    def unknown(self) -> list[int]:
        return [i for i, v in self.values.items() if v is None]

    def __getitem__(self, i: int) -> FgAbGroup | None:
        return self.values[i]


def _finish(req: DerivedRequest, got: dict[int, FgAbGroup], route: str,
            budget: Budget) -> DerivedResult:
    values: dict[int, FgAbGroup | None] = {}
    prov = {}
    for i in range(req.i_max + 1):
        if i in got:
            values[i] = got[i]
            prov[i] = route
        else:
            values[i] = None
            prov[i] = "unknown: budget exceeded"
    return DerivedResult(req, values, prov, budget.report())


def _setup(req: DerivedRequest) -> tuple[Resolution, Budget]:
    res = req.resolution or resolve(req.group)
    if res.target != req.group:
        raise ValueError("resolution does not resolve the requested group")
    return res, req.budget or Budget()


def generic_derived(req: DerivedRequest) -> DerivedResult:
    """π_i F K(res(A)[n]) without any décalage shortcut."""
    res, budget = _setup(req)
    got, route = generic_values(req.functor, res.complex(req.shift), req.i_max, budget)
    return _finish(req, got, f"generic {route}", budget)


def fast_derived(req: DerivedRequest) -> DerivedResult:
    """Décalage ladder to the lowest shift, then Koszul complexes or the normalised model."""
    res, budget = _setup(req)
    got, route = fast_values(req.functor, res, req.shift, req.i_max, budget)
    return _finish(req, got, route, budget)


def derived_functor(req: DerivedRequest) -> DerivedResult:
    """Dispatch on ``req.method``; ``auto`` uses the ladder whenever one exists."""
    if req.method == "generic":
        return generic_derived(req)
    if req.method in ("koszul", "decalage"):
        return fast_derived(req)
    if classify(req.functor) is not None:
        return fast_derived(req)
    return generic_derived(req)


@dataclass
class Comparison:
    generic: DerivedResult
    fast: DerivedResult
    compared: list[int]

    def __str__(self) -> str:
        lines = []
        for i in sorted(self.generic.values):
            lines.append(f"L_{i}: generic={self.generic.values[i]} fast={self.fast.values[i]}")
        return "\n".join(lines)


def compare_paths(req: DerivedRequest) -> Comparison:
    """Evaluate both paths and raise Mismatch on any disagreement."""
    if classify(req.functor) is None:
        raise NotReducible(f"no second path for {req.functor}")
    gen = generic_derived(req)
    fast = fast_derived(req)
    compared = []
    for i in range(req.i_max + 1):
        a, b = gen.values[i], fast.values[i]
        if a is None or b is None:
            continue
        if a != b:
            raise Mismatch(
                f"L_{i}{req.functor}({req.group}, {req.shift}): generic gives {a} "
                f"via {gen.provenance[i]}, fast gives {b} via {fast.provenance[i]}")
        compared.append(i)
    return Comparison(gen, fast, compared)
