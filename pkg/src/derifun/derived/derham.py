"""De Rham complexes D^n and their duals C^n on a free module Z^r.

D^n_i = SP^i (x) Λ^{n-i} with d(b_1...b_i (x) w) = sum_k b_1..^b_k..b_i (x) b_k ∧ w;
C^n_i = Λ^i (x) Γ_{n-i} with d(b_1∧...∧b_i (x) x) = sum_k (-1)^k b_1..^b_k..b_i (x) b_k x.
"""

from __future__ import annotations

from bisect import bisect_left, insort
from itertools import combinations, combinations_with_replacement

from ..chain import FreeChainComplex, complex_homology
from ..zlinalg import FgAbGroup, IntMatrix

VARIANTS = ("C", "D")


def _basis(r: int, n: int, i: int, variant: str) -> list[tuple]:
    if variant == "D":
        return [(s, w) for s in combinations_with_replacement(range(r), i)
                for w in combinations(range(r), n - i)]
    return [(w, g) for w in combinations(range(r), i)
            for g in combinations_with_replacement(range(r), n - i)]


def _boundary(key: tuple, variant: str) -> dict:
    out: dict = {}
    left, right = key
    seen = set()
    for k, b in enumerate(left):
        rest = left[:k] + left[k + 1:]
        if variant == "D":
            if b in seen:
                continue
            seen.add(b)
            mult = left.count(b)
            pos = bisect_left(right, b)
            if pos < len(right) and right[pos] == b:
                continue
            tgt = (rest, right[:pos] + (b,) + right[pos:])
            coeff = mult * (-1 if pos % 2 else 1)
        else:
            g = list(right)
            insort(g, b)
            tgt = (rest, tuple(g))
            coeff = (-1 if k % 2 else 1) * (right.count(b) + 1)
        out[tgt] = out.get(tgt, 0) + coeff
    return {t: v for t, v in out.items() if v}


def derham_complex(n: int, r: int, variant: str = "C") -> FreeChainComplex:
    """The degree-n (dual) de Rham complex of Z^r, in homological degrees 0..n."""
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}")
    bases = [_basis(r, n, i, variant) for i in range(n + 1)]
    index = [{b: t for t, b in enumerate(bs)} for bs in bases]
    diffs = {}
    for i in range(1, n + 1):
        cols = [{index[i - 1][t]: v for t, v in _boundary(key, variant).items()} for key in bases[i]]
        diffs[i] = IntMatrix(len(bases[i - 1]), len(bases[i]), cols)
    return FreeChainComplex(0, tuple(len(b) for b in bases), diffs)


def derham_homology(n: int, r: int, variant: str = "C") -> dict[int, FgAbGroup]:
    return complex_homology(derham_complex(n, r, variant))
