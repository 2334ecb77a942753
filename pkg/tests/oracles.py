"""Slow but obviously-correct reference computations used by the tests.

Nothing here touches the elimination code under test: ranks come from
rational Gaussian elimination and invariant factors from gcds of minors.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product
from math import comb, gcd


def rational_rank(rows: list[list[int]]) -> int:
    m = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if m[r][c] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][c] != 0:
                k = m[r][c] / m[rank][c]
                m[r] = [a - k * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def det(m: list[list[int]]) -> int:
    if not m:
        return 1
    if len(m) == 1:
        return m[0][0]
    return sum((-1) ** j * m[0][j] * det([row[:j] + row[j + 1:] for row in m[1:]])
               for j in range(len(m)) if m[0][j])


def determinantal_divisors(rows: list[list[int]]) -> list[int]:
    """d_k = gcd of all k x k minors, for k = 1 .. rank."""
    nr = len(rows)
    nc = len(rows[0]) if rows else 0
    out = []
    for k in range(1, min(nr, nc) + 1):
        g = 0
        for ri in combinations(range(nr), k):
            for ci in combinations(range(nc), k):
                g = gcd(g, det([[rows[r][c] for c in ci] for r in ri]))
        if g == 0:
            break
        out.append(g)
    return out


def invariant_factors(rows: list[list[int]]) -> list[int]:
    """Smith diagonal entries (nonzero ones) from determinantal divisors."""
    ds = determinantal_divisors(rows)
    prev = 1
    facs = []
    for d in ds:
        facs.append(d // prev)
        prev = d
    return facs


def cokernel_orders(rows: list[list[int]]) -> list[int]:
    """Cyclic orders of Z^rows / column span, 0 for free summands, 1s dropped."""
    facs = invariant_factors(rows)
    free = len(rows) - len(facs)
    return [0] * free + [f for f in facs if f != 1]


def is_lyndon_brute(word: tuple[int, ...]) -> bool:
    return all(word < word[i:] + word[:i] for i in range(1, len(word)))


def lyndon_count_brute(r: int, n: int) -> int:
    return sum(1 for w in product(range(r), repeat=n) if is_lyndon_brute(w))


def sym_rank(r: int, n: int) -> int:
    return comb(r + n - 1, n)


def ext_rank(r: int, n: int) -> int:
    return comb(r, n)
