"""Golden and property suites behind ``derifun check``."""

from __future__ import annotations

import random
from collections.abc import Callable, Iterator
from dataclasses import dataclass

from . import reference as ref
from .budget import Budget
from .curtis import Exact, curtis_e1
from .derived import (
    DerivedRequest,
    compare_paths,
    derham_homology,
    derived_functor,
    fast_derived,
    generic_derived,
    naive_values,
    resolve,
)
from .functors import (
    Div,
    Ext,
    Identity,
    Lie,
    PolyFunctor,
    SchurJ,
    SchurY,
    Sym,
    parse_functor,
)
from .simplicial import apply_functor_levelwise, dold_kan_K
from .zlinalg import FgAbGroup, IntMatrix

Z = FgAbGroup.cyclic


@dataclass
class Outcome:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'}  {self.name}{': ' + self.detail if self.detail else ''}"


def _values(f: PolyFunctor, a: FgAbGroup, n: int, i_max: int, method: str = "auto"):
    return derived_functor(DerivedRequest(f, a, n, i_max, method)).values


def _mismatches(got: dict, expected: dict) -> list[str]:
    return [f"L_{i}: got {got.get(i)}, expected {e}" for i, e in sorted(expected.items())
            if got.get(i) != e]


def _check(name: str, got: dict, expected: dict) -> Outcome:
    bad = _mismatches(got, expected)
    return Outcome(name, not bad, "; ".join(bad[:3]))


def _order(g: FgAbGroup | None) -> int | None:
    return None if g is None else g.order()


# golden tables

def _gamma_cyclic() -> Iterator[Outcome]:
    bad = []
    for r in range(1, 6):
        for n in range(2, 13):
            got = _values(Div(r), Z(n), 0, 0, "generic")[0]
            if got != ref.gamma_cyclic(r, n):
                bad.append(f"G^{r}(Z/{n}) = {got}")
    yield Outcome("divided powers of cyclic groups", not bad, "; ".join(bad))


QUADRATIC_GROUPS = ("Z/2", "Z/3", "Z/4", "Z^2", "Z + Z/2")


def _quadratic() -> Iterator[Outcome]:
    from .cli import parse_group

    names = {"SP": Sym(2), "L": Ext(2), "G": Div(2)}
    for kind, f in names.items():
        for text in QUADRATIC_GROUPS:
            a = parse_group(text)
            for n in range(4):
                expected = {i: ref.QUADRATIC[kind](a, n, i) for i in range(9)}
                for method in ("generic", "decalage"):
                    got = _values(f, a, n, 8, method)
                    yield _check(f"{f}({a}, {n}) [{method}]", got, expected)
    for text in QUADRATIC_GROUPS:
        a = parse_group(text)
        checks = [
            ("Omega_2", ref.omega2(a), _values(Ext(2), a, 0, 1, "generic")[1]),
            ("R_2", ref.r2(a), _values(Div(2), a, 0, 1, "generic")[1]),
            ("S_2", ref.s2(a), _values(Sym(2), a, 0, 1, "generic")[1]),
            ("lambda^2", ref.lambda2_bar(a),
             _values(Ext(2), a, 0, 0, "generic")[0] + a.tor(FgAbGroup.cyclic(2))),
        ]
        for label, want, got in checks:
            yield Outcome(f"{label}({a}) order", want.order() == got.order(), f"{got} vs {want}")


def _sp3() -> Iterator[Outcome]:
    for m in (2, 3, 9):
        a = Z(m)
        got = fast_derived(DerivedRequest(Sym(3), a, 3, 8)).values
        yield _check(f"SP^3({a}, 3) in degrees 7, 8", got, {i: ref.sp3_shift3(a, i) for i in (7, 8)})


def _exterior_cyclic() -> Iterator[Outcome]:
    for n in range(1, 5):
        for m in (2, 3, 4, 6):
            expected = {i: (Z(m) if i == n - 1 else FgAbGroup()) for i in range(n + 2)}
            yield _check(f"L^{n}(Z/{m}, 0)", _values(Ext(n), Z(m), 0, n + 1), expected)


def _derham() -> Iterator[Outcome]:
    for n in range(1, 8):
        for r in range(1, 4):
            hom = derham_homology(n, r, "C")
            expected = {i: ref.dual_derham_free(n, r, i) for i in range(n + 1)}
            expected[0] = ref.dual_derham_h0(n, r)
            yield _check(f"H_*C^{n}(Z^{r})", hom, expected)


def _lie3() -> Iterator[Outcome]:
    for m in range(2, 7):
        expected = {i: (Z(m) if i == 1 else FgAbGroup()) for i in range(4)}
        yield _check(f"Lie^3(Z/{m}, 0)", _values(Lie(3), Z(m), 0, 3), expected)
    expected = {i: (Z(3) if i == 5 else FgAbGroup()) for i in range(7)}
    yield _check("Lie^3(Z, 2)", _values(Lie(3), FgAbGroup.free(1), 2, 6), expected)
    for m, want in ((3, Z(3)), (5, FgAbGroup())):
        yield _check(f"Lie^3(Z/{m}, 2) in degree 5", _values(Lie(3), Z(m), 2, 5), {5: want})


def _y3() -> Iterator[Outcome]:
    got = _values(SchurY(3), Z(3), 0, 3, "generic")
    yield _check("Y^3(Z/3, 0) [generic]", got, {1: Z(9), 2: Z(3)})


def _composite() -> Iterator[Outcome]:
    f = parse_functor("L^2 o L^2")
    low = _values(f, Z(2), 0, 4)
    yield Outcome("L^2 o L^2 (Z/2, 0): L_2 order 4, L_3 order 2",
                  _order(low[2]) == 4 and _order(low[3]) == 2, f"L_2 = {low[2]}, L_3 = {low[3]}")
    high = _values(f, Z(2), 2, 5)
    yield Outcome("L^2 o L^2 (Z/2, 2): L_4 = Z/2, L_5 order 4",
                  high[4] == Z(2) and _order(high[5]) == 4, f"L_4 = {high[4]}, L_5 = {high[5]}")


E1_MOORE_Z3 = {(1, 1): 3, (2, 2): 3, (3, 4): 9, (3, 5): 3, (4, 5): 3, (4, 6): 3}


def _curtis_moore_z3() -> Iterator[Outcome]:
    page = curtis_e1(Z(3), 2, 4, 6)
    bad = []
    for r in range(1, 5):
        for q in range(7):
            want = Z(E1_MOORE_Z3[(r, q)]) if (r, q) in E1_MOORE_Z3 else FgAbGroup()
            cell = page.cell(r, q)
            if not (isinstance(cell, Exact) and cell.group == want):
                bad.append(f"E1({r},{q}) = {cell.render()}, expected {want}")
    yield Outcome("Curtis E1 page of M(Z/3, 2)", not bad, "; ".join(bad))


PAPER_TABLES: list[Callable[[], Iterator[Outcome]]] = [
    _gamma_cyclic, _quadratic, _sp3, _exterior_cyclic, _derham, _lie3, _y3, _composite,
    _curtis_moore_z3,
]


# properties

def _random_matrix(rng: random.Random, rows: int, cols: int) -> IntMatrix:
    return IntMatrix.from_dense([[rng.randint(-2, 2) for _ in range(cols)] for _ in range(rows)],
                                rows, cols)


def _random_group(rng: random.Random) -> FgAbGroup:
    orders = [rng.choice([0, 2, 3, 4, 6]) for _ in range(rng.randint(1, 2))]
    return FgAbGroup.from_orders(orders)


FUNCTORIALITY_SAMPLE = ("T^2", "SP^3", "L^3", "G^3", "Lie^3", "J^3", "Y^3", "SLie^3",
                        "L^2 o L^2", "SP^2 * L^2", "G^2 + SP^2", "W^3")


def _functoriality(rng: random.Random) -> Iterator[Outcome]:
    for text in FUNCTORIALITY_SAMPLE:
        f = parse_functor(text)
        bad = 0
        for _ in range(3):
            a, b, c = (rng.randint(1, 3) for _ in range(3))
            g = _random_matrix(rng, b, a)
            h = _random_matrix(rng, c, b)
            if f.map_of(h @ g) != f.map_of(h) @ f.map_of(g):
                bad += 1
            if f.map_of(IntMatrix.identity(a)) != IntMatrix.identity(f.map_of(IntMatrix.identity(a)).rows):
                bad += 1
        yield Outcome(f"functoriality of {text}", not bad)


def _simplicial_identities(rng: random.Random) -> Iterator[Outcome]:
    for text in ("Id", "L^2", "SP^2", "G^2", "J^3"):
        a = _random_group(rng)
        n = rng.randint(0, 1)
        x = apply_functor_levelwise(parse_functor(text), dold_kan_K(resolve(a).complex(n), 4))
        bad = x.check_identities()
        yield Outcome(f"simplicial identities of {text} K(res({a})[{n}])", not bad, "; ".join(bad[:3]))


def _normalized_vs_unnormalized(rng: random.Random) -> Iterator[Outcome]:
    for text in ("L^2", "SP^2", "G^2", "T^2", "Lie^3"):
        f = parse_functor(text)
        a = _random_group(rng)
        n = rng.randint(0, 1)
        c = resolve(a).complex(n)
        norm = naive_values(f, c, 3, Budget())
        unnorm = naive_values(f, c, 3, Budget(), normalized=False)
        fast = derived_functor(DerivedRequest(f, a, n, 3, "generic")).values
        yield Outcome(f"normalized = unnormalized = model for {text}({a}, {n})",
                      norm == unnorm and all(fast[i] == norm[i] for i in norm))


def _decalage_grid(rng: random.Random) -> Iterator[Outcome]:
    groups = [Z(2), Z(3), Z(4), FgAbGroup.free(2)]
    pairs = [
        ("SP->L", lambda j: (Ext(j), Sym(j)), 1, 1),
        ("L->G", lambda j: (Div(j), Ext(j)), 1, 1),
        ("G->SP (double)", lambda j: (Div(j), Sym(j)), 2, 2),
        ("Y->J", lambda j: (SchurY(j), SchurJ(j)), 1, 1),
    ]
    for label, build, shift_step, degree_factor in pairs:
        for j in (2, 3):
            for a in groups:
                for n in (0, 1):
                    low, high = build(j)
                    i_max = 3
                    lo = _values(low, a, n, i_max, "generic")
                    hi = _values(high, a, n + shift_step, i_max + degree_factor * j, "generic")
                    ok = all(lo[i] == hi[i + degree_factor * j] for i in range(i_max + 1)
                             if lo[i] is not None and hi[i + degree_factor * j] is not None)
                    yield Outcome(f"decalage {label} j={j} {a} n={n}", ok)


def _resolution_independence(rng: random.Random) -> Iterator[Outcome]:
    for text in ("L^2", "SP^3", "J^3", "Lie^3"):
        a = _random_group(rng)
        f = parse_functor(text)
        base = generic_derived(DerivedRequest(f, a, 0, 3)).values
        padded = generic_derived(DerivedRequest(f, a, 0, 3, resolution=resolve(a).padded())).values
        yield Outcome(f"resolution independence of {text}({a})", base == padded)


def _connectivity(rng: random.Random) -> Iterator[Outcome]:
    for n in (2, 3):
        for k in (1, 2, 3):
            a = _random_group(rng)
            bound = k + 2 * n - 2 if k > 1 else n
            vals = _values(Sym(n), a, k, bound + 1, "generic")
            bad = [i for i in range(bound) if vals[i] is not None and not vals[i].is_trivial]
            yield Outcome(f"connectivity of SP^{n}({a}, {k}) below {bound}", not bad, str(bad))


def _euler_curtis4(rng: random.Random) -> Iterator[Outcome]:
    from fractions import Fraction

    for a in (Z(2), Z(3)):
        top = 8

        def alt(f: PolyFunctor) -> Fraction | None:
            vals = _values(f, a, 1, top, "generic")
            out = Fraction(1)
            for i, v in vals.items():
                if v is None or not v.is_finite:
                    return None
                out *= Fraction(v.order()) ** (1 if i % 2 == 0 else -1)
            return out

        lie = alt(Lie(4))
        sub = alt(parse_functor("L^2 o L^2"))
        quo = alt(SchurJ(4))
        ok = None not in (lie, sub, quo) and lie == sub * quo
        yield Outcome(f"Euler characteristic of 0 -> L^2 o L^2 -> Lie^4 -> J^4 -> 0 on {a}", ok,
                      f"{lie} vs {sub} * {quo}")


def _suspension(rng: random.Random) -> Iterator[Outcome]:
    for _ in range(3):
        a = _random_group(rng)
        n = rng.randint(1, 3)
        base = _values(Identity(), a, 0, 2)
        up = _values(Identity(), a, n, n + 2)
        yield Outcome(f"suspension of Id on {a} by {n}", all(up[i + n] == base[i] for i in range(3)))


def _koszul_schur(rng: random.Random) -> Iterator[Outcome]:
    for j in (2, 3, 4):
        for a in (Z(2), Z(3), FgAbGroup.from_orders([0, 2])):
            for f in (SchurJ(j), SchurY(j)):
                try:
                    compare_paths(DerivedRequest(f, a, 0, 3))
                    yield Outcome(f"Koszul cone vs generic for {f}({a})", True)
                except Exception as exc:  # Mismatch carries the detail
                    yield Outcome(f"Koszul cone vs generic for {f}({a})", False, str(exc))


PROPERTIES: list[Callable[[random.Random], Iterator[Outcome]]] = [
    _functoriality, _simplicial_identities, _normalized_vs_unnormalized, _decalage_grid,
    _resolution_independence, _connectivity, _euler_curtis4, _suspension, _koszul_schur,
]


def run_suite(name: str, seed: int = 0) -> Iterator[Outcome]:
    if name == "paper-tables":
        for case in PAPER_TABLES:
            yield from case()
    elif name == "properties":
        rng = random.Random(seed)
        for prop in PROPERTIES:
            yield from prop(rng)
    else:
        raise ValueError(f"unknown suite {name!r}")


__all__ = ["Outcome", "PAPER_TABLES", "PROPERTIES", "run_suite"]
