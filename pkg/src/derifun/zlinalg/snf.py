"""Dense normal forms with transforms: Smith, column Hermite, kernels, lattice solving.

These routines carry the unimodular transforms explicitly and are meant for
small and moderate matrices. Invariant factors of large sparse matrices go
through :mod:`derifun.zlinalg.elim` instead.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass

from ..errors import NotInLattice
from .groups import FgAbGroup
from .matrix import IntMatrix


@dataclass(frozen=True)
class SnfDecomposition:
    """``U @ M @ V == D`` with U, V unimodular and D diagonal in divisibility order."""

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix

    def diagonal(self) -> list[int]:
        k = min(self.D.rows, self.D.cols)
        return [self.D[i, i] for i in range(k)]

    def rank(self) -> int:
        return sum(1 for d in self.diagonal() if d)


def _ident(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


class _Dense:
    """Row-major working copy with optional row/column transform tracking."""

    def __init__(self, m: IntMatrix, track: bool = True):
        self.a = m.to_dense()
        self.nr, self.nc = m.rows, m.cols
        self.u = _ident(self.nr) if track else None
        self.v = _ident(self.nc) if track else None

    def swap_rows(self, i: int, j: int) -> None:
        if i != j:
            a = self.a
            a[i], a[j] = a[j], a[i]
            if self.u is not None:
                self.u[i], self.u[j] = self.u[j], self.u[i]

    def swap_cols(self, i: int, j: int) -> None:
        if i != j:
            for row in self.a:
                row[i], row[j] = row[j], row[i]
            if self.v is not None:
                for row in self.v:
                    row[i], row[j] = row[j], row[i]

    def row_combo(self, i: int, j: int, p: int, q: int, r: int, s: int) -> None:
        """(row_i, row_j) <- (p row_i + q row_j, r row_i + s row_j); det must be +-1."""
        for mat in (self.a, self.u):
            if mat is None:
                continue
            ri, rj = mat[i], mat[j]
            mat[i] = [p * x + q * y for x, y in zip(ri, rj)]
            mat[j] = [r * x + s * y for x, y in zip(ri, rj)]

    def col_combo(self, i: int, j: int, p: int, q: int, r: int, s: int) -> None:
        """(col_i, col_j) <- (p col_i + q col_j, r col_i + s col_j)."""
        for mat in (self.a, self.v):
            if mat is None:
                continue
            for row in mat:
                x, y = row[i], row[j]
                row[i] = p * x + q * y
                row[j] = r * x + s * y

    def add_row(self, dst: int, src: int, k: int) -> None:
        if k:
            for mat in (self.a, self.u):
                if mat is None:
                    continue
                rs, rd = mat[src], mat[dst]
                mat[dst] = [x + k * y for x, y in zip(rd, rs)]

    def add_col(self, dst: int, src: int, k: int) -> None:
        if k:
            for mat in (self.a, self.v):
                if mat is None:
                    continue
                for row in mat:
                    row[dst] += k * row[src]

    def neg_row(self, i: int) -> None:
        for mat in (self.a, self.u):
            if mat is not None:
                mat[i] = [-x for x in mat[i]]


def smith_normal_form(m: IntMatrix) -> SnfDecomposition:
    """Smith normal form with unimodular transforms."""
    w = _Dense(m)
    a = w.a
    nr, nc = w.nr, w.nc
    t = 0
    while t < min(nr, nc):
        # pivot: smallest nonzero absolute value in the trailing block
        best = None
        for i in range(t, nr):
            row = a[i]
            for j in range(t, nc):
                x = row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, pi, pj = best
        w.swap_rows(t, pi)
        w.swap_cols(t, pj)
        while True:
            done = True
            p = a[t][t]
            for i in range(t + 1, nr):
                x = a[i][t]
                if x:
                    if x % p == 0:
                        w.add_row(i, t, -(x // p))
                    else:
                        g, s, u = _xgcd(p, x)
                        w.row_combo(t, i, s, u, -x // g, p // g)
                        p = a[t][t]
                        done = False
            for j in range(t + 1, nc):
                x = a[t][j]
                if x:
                    if x % p == 0:
                        w.add_col(j, t, -(x // p))
                    else:
                        g, s, u = _xgcd(p, x)
                        w.col_combo(t, j, s, u, -x // g, p // g)
                        p = a[t][t]
                        done = False
            if not done:
                continue
            # divisibility: pivot must divide the trailing block
            bad = None
            for i in range(t + 1, nr):
                row = a[i]
                for j in range(t + 1, nc):
                    if row[j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            w.add_row(t, bad, 1)
        if a[t][t] < 0:
            w.neg_row(t)
        t += 1
    return SnfDecomposition(IntMatrix.from_dense(w.u, nr, nr), IntMatrix.from_dense(a, nr, nc),
                            IntMatrix.from_dense(w.v, nc, nc))


def invariant_factors(m: IntMatrix) -> list[int]:
    """Nonzero diagonal of the Smith form (units included)."""
    return [d for d in smith_normal_form(m).diagonal() if d]


def cokernel_group(m: IntMatrix) -> FgAbGroup:
    """Group presented by relation rows: Z^cols modulo the row lattice of ``m``.

    A 0 x k matrix therefore presents Z^k. For the cokernel of a map given
    by its columns use :func:`column_cokernel`.
    """
    from .elim import elementary_divisors

    rank, divisors = elementary_divisors(m)
    return FgAbGroup(m.cols - rank, tuple(divisors))


def column_cokernel(m: IntMatrix) -> FgAbGroup:
    """Z^rows modulo the column lattice of ``m``."""
    from .elim import elementary_divisors

    rank, divisors = elementary_divisors(m)
    return FgAbGroup(m.rows - rank, tuple(divisors))


def kernel_basis(m: IntMatrix) -> IntMatrix:
    """Columns spanning ker(m) as a free (hence saturated) sublattice."""
    if all(len(c) <= 1 for c in m.columns()):
        return _monomial_kernel(m)
    snf = smith_normal_form(m)
    r = snf.rank()
    return snf.V.select_columns(range(r, m.cols))


def _monomial_kernel(m: IntMatrix) -> IntMatrix:
    # each column hits at most one row: split by target row
    by_row: dict[int, list[tuple[int, int]]] = {}
    out: list[dict[int, int]] = []
    for j, col in enumerate(m.columns()):
        if not col:
            out.append({j: 1})
        else:
            (i, v), = col.items()
            by_row.setdefault(i, []).append((j, v))
    for i in sorted(by_row):
        group = by_row[i]
        if len(group) < 2:
            continue
        idx = [j for j, _ in group]
        small = IntMatrix.from_dense([[v for _, v in group]])
        kb = smith_normal_form(small).V
        for k in range(1, len(group)):
            col = kb.column(k)
            out.append({idx[t]: v for t, v in col.items()})
    out.sort(key=lambda c: min(c))
    return IntMatrix(m.cols, len(out), out)


def hermite_basis(gens: IntMatrix) -> IntMatrix:
    """Column Hermite normal form basis of the lattice spanned by the columns.

    Pivot rows increase left to right, pivots are positive and entries to
    the left of a pivot are reduced into ``[0, pivot)``. The result is
    canonical for the lattice.
    """
    w = _Dense(gens, track=False)
    a = w.a
    nr, nc = w.nr, w.nc
    pivots: list[tuple[int, int]] = []
    col = 0
    for i in range(nr):
        if col >= nc:
            break
        row = a[i]
        nz = [j for j in range(col, nc) if row[j]]
        if not nz:
            continue
        for j in nz:
            if j == col:
                continue
            x, y = row[col], row[j]
            if not y:
                continue
            if not x:
                w.swap_cols(col, j)
                continue
            g, s, t = _xgcd(x, y)
            w.col_combo(col, j, s, t, -y // g, x // g)
        if row[col] < 0:
            for r in a:
                r[col] = -r[col]
        p = row[col]
        for pc in range(col):
            q = row[pc] // p
            if q:
                w.add_col(pc, col, -q)
        pivots.append((i, col))
        col += 1
    cols = [{i: a[i][j] for i in range(nr) if a[i][j]} for j in range(col)]
    return IntMatrix(nr, col, cols)


class LatticeSolver:
    """Solves ``B x = v`` exactly for a fixed full-column-rank B."""

    def __init__(self, basis: IntMatrix):
        self.basis = basis
        snf = smith_normal_form(basis)
        self._u = snf.U
        self._v = snf.V
        self._diag = snf.diagonal()
        if any(d == 0 for d in self._diag) or len(self._diag) < basis.cols:
            raise ValueError("lattice basis columns must be independent")

    def solve(self, vec: Mapping[int, int]) -> dict[int, int]:
        y = self._u.apply(vec)
        z: dict[int, int] = {}
        for i, val in y.items():
            if i >= len(self._diag):
                raise NotInLattice("vector has a component outside the lattice span")
            q, r = divmod(val, self._diag[i])
            if r:
                raise NotInLattice("vector is outside the lattice")
            z[i] = q
        return self._v.apply(z)


def solve_in_lattice(basis: IntMatrix, vec: Sequence[int] | Mapping[int, int]) -> list[int]:
    """Coordinates x with ``basis @ x == vec``; raises NotInLattice otherwise."""
    if not isinstance(vec, Mapping):
        vec = {i: v for i, v in enumerate(vec) if v}
    x = LatticeSolver(basis).solve(vec)
    return [x.get(j, 0) for j in range(basis.cols)]
