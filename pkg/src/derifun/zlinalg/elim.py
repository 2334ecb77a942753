"""Rank and elementary divisors of large sparse integer matrices.

Elimination runs in two phases:

1. unit pivots (entries +-1) picked greedily by a Markowitz-style cost, which
   handles the bulk of every functor-induced differential without growth;
2. a Euclidean diagonalisation of whatever core is left.

Phase 1 has a compiled twin in ``_elim_ext``; it is used when importable
unless ``DERIFUN_PURE_PYTHON`` is set. Both produce identical results.
"""

from __future__ import annotations

import heapq
import os

from .groups import invariant_factors_of
from .matrix import IntMatrix

try:  # pragma: no cover - depends on the build
    if os.environ.get("DERIFUN_PURE_PYTHON"):
        raise ImportError
    from . import _elim_ext
except ImportError:  # pragma: no cover
    _elim_ext = None

BACKEND = "cython" if _elim_ext is not None else "python"


def _to_rows(m: IntMatrix) -> dict[int, dict[int, int]]:
    rows: dict[int, dict[int, int]] = {}
    for j, col in enumerate(m.columns()):
        for i, v in col.items():
            rows.setdefault(i, {})[j] = v
    return rows


def unit_phase_python(rows: dict[int, dict[int, int]]) -> int:
    """Eliminate unit pivots in place. Returns the number of pivots used."""
    cols: dict[int, set[int]] = {}
    for i, row in rows.items():
        for j in row:
            cols.setdefault(j, set()).add(i)
    heap = [(len(row), i) for i, row in rows.items()]
    heapq.heapify(heap)
    rank = 0
    while heap:
        length, i = heapq.heappop(heap)
        row = rows.get(i)
        if row is None or len(row) != length:
            continue
        best = None
        for j, v in row.items():
            if v == 1 or v == -1:
                cost = len(cols[j])
                if best is None or cost < best[0]:
                    best = (cost, j, v)
                    if cost == 1:
                        break
        if best is None:
            continue
        _, pc, pv = best
        del rows[i]
        for j in row:
            cols[j].discard(i)
        for i2 in cols.pop(pc):
            row2 = rows[i2]
            f = row2[pc] * pv
            for j, v in row.items():
                s = row2.get(j, 0) - f * v
                if s:
                    if j not in row2:
                        cols[j].add(i2)
                    row2[j] = s
                else:
                    if j in row2:
                        del row2[j]
                        if j != pc:
                            cols[j].discard(i2)
            if row2:
                heapq.heappush(heap, (len(row2), i2))
            else:
                del rows[i2]
        rank += 1
    return rank


def _core_phase(rows: dict[int, dict[int, int]]) -> tuple[int, list[int]]:
    """Diagonalise what the unit phase left. Returns (rank, diagonal entries)."""
    cols: dict[int, set[int]] = {}
    for i, row in rows.items():
        for j in row:
            cols.setdefault(j, set()).add(i)
    rank = 0
    diag: list[int] = []
    while rows:
        # smallest entry anywhere in the core
        pi = pj = None
        pv = 0
        for i, row in rows.items():
            for j, v in row.items():
                if pi is None or abs(v) < abs(pv):
                    pi, pj, pv = i, j, v
                    if abs(v) == 1:
                        break
            if abs(pv) == 1:
                break
        while True:
            prow = rows[pi]
            pv = prow[pj]
            moved = False
            # clear the pivot column with row operations
            for i2 in list(cols[pj]):
                if i2 == pi:
                    continue
                row2 = rows[i2]
                q = row2[pj] // pv
                for j, v in prow.items():
                    s = row2.get(j, 0) - q * v
                    if s:
                        if j not in row2:
                            cols[j].add(i2)
                        row2[j] = s
                    elif j in row2:
                        del row2[j]
                        cols[j].discard(i2)
                if not row2:
                    del rows[i2]
                elif pj in row2:
                    r = row2[pj]
                    if abs(r) < abs(pv):
                        pi, pv = i2, r
                        moved = True
                        break
            if moved:
                continue
            # clear the pivot row with column operations
            for j in list(prow):
                if j == pj:
                    continue
                q = prow[j] // pv
                r = prow[j] - q * pv
                if r:
                    prow[j] = r
                    pj, pv = j, r
                    moved = True
                    break
                del prow[j]
                cols[j].discard(pi)
            if moved:
                continue
            break
        diag.append(abs(pv))
        del rows[pi]
        cols[pj].discard(pi)
        rank += 1
    return rank, diag


def elementary_divisors(m: IntMatrix, backend: str | None = None) -> tuple[int, list[int]]:
    """Rank of ``m`` and its invariant factors other than 1, in divisibility order."""
    use = backend or BACKEND
    rank = 0
    rows = None
    if use == "cython" and _elim_ext is not None:
        try:
            rank, rows = _elim_ext.unit_phase(m.rows, m.columns())
        except OverflowError:
            rows = None
            rank = 0
    if rows is None:
        rows = _to_rows(m)
        rank = unit_phase_python(rows)
    core_rank, diag = _core_phase(rows)
    _, facs = invariant_factors_of(diag)
    return rank + core_rank, list(facs)


def rank_of(m: IntMatrix) -> int:
    return elementary_divisors(m)[0]
