"""Koszul complexes of a map f: L -> M and the small models they give.

``Kos_n(f)`` has Λ^k(L) (x) SP^{n-k}(M) in degree k and computes
L_*SP^n of coker f; ``Kos^n(f)`` has Γ_k(L) (x) Λ^{n-k}(M) in degree k and
computes L_*Λ^n. Multiplying by the resolution gives chain maps
res (x) Kos_{n-1} -> Kos_n (and the Λ analogue) whose cones model the Schur
kernels J^n and Y^n.
"""

from __future__ import annotations

from bisect import bisect_left, insort
from itertools import combinations, combinations_with_replacement

from ..chain import FreeChainComplex, cone, tensor_complexes
from ..functors.closed import runs
from ..zlinalg import IntMatrix
from .resolution import Resolution

VARIANTS = ("sp", "lambda")


def _wedge_in(x: int, w: tuple[int, ...]) -> tuple[int, tuple[int, ...]] | None:
    """x ∧ w as (sign, sorted key), or None when x already occurs."""
    pos = bisect_left(w, x)
    if pos < len(w) and w[pos] == x:
        return None
    return (-1 if pos % 2 else 1), w[:pos] + (x,) + w[pos:]


def _sym_in(x: int, s: tuple[int, ...]) -> tuple[int, ...]:
    out = list(s)
    insort(out, x)
    return tuple(out)


def koszul_basis(l: int, m: int, n: int, k: int, variant: str) -> list[tuple]:
    """Basis of degree k: pairs (L-part, M-part)."""
    if variant == "sp":
        return [(w, s) for w in combinations(range(l), k)
                for s in combinations_with_replacement(range(m), n - k)]
    if variant == "lambda":
        return [(g, w) for g in combinations_with_replacement(range(l), k)
                for w in combinations(range(m), n - k)]
    raise ValueError(f"unknown Koszul variant {variant!r}")


def _koszul_boundary(f: IntMatrix, key: tuple, variant: str) -> dict:
    out: dict = {}
    left, right = key
    if variant == "sp":
        k = len(left)
        for i, p in enumerate(left):
            rest = left[:i] + left[i + 1:]
            sign = -1 if (k - 1 - i) % 2 else 1
            for q, v in f.column(p).items():
                tgt = (rest, _sym_in(q, right))
                out[tgt] = out.get(tgt, 0) + sign * v
    else:
        for p, _ in runs(left):
            i = left.index(p)
            rest = left[:i] + left[i + 1:]
            for q, v in f.column(p).items():
                got = _wedge_in(q, right)
                if got is None:
                    continue
                sign, w = got
                tgt = (rest, w)
                out[tgt] = out.get(tgt, 0) + sign * v
    return {key2: v for key2, v in out.items() if v}


def koszul_complex(f: IntMatrix, n: int, variant: str = "sp") -> FreeChainComplex:
    """Kos_n(f) (variant ``sp``) or Kos^n(f) (variant ``lambda``), degrees 0..n."""
    return _koszul_with_bases(f, n, variant)[0]


def _koszul_with_bases(f: IntMatrix, n: int, variant: str):
    l, m = f.cols, f.rows
    bases = [koszul_basis(l, m, n, k, variant) for k in range(n + 1)]
    index = [{b: t for t, b in enumerate(bs)} for bs in bases]
    diffs = {}
    for k in range(1, n + 1):
        cols = []
        for key in bases[k]:
            cols.append({index[k - 1][t]: v for t, v in _koszul_boundary(f, key, variant).items()})
        diffs[k] = IntMatrix(len(bases[k - 1]), len(bases[k]), cols)
    return FreeChainComplex(0, tuple(len(b) for b in bases), diffs), bases, index


def _multiply(x_in_L: bool, x: int, key: tuple, variant: str) -> dict:
    """Product of a resolution generator with a Koszul basis element."""
    left, right = key
    if variant == "sp":
        if not x_in_L:
            return {(left, _sym_in(x, right)): 1}
        # the boundary contracts from the right, so x is wedged on the right
        got = _wedge_in(x, left)
        if got is None:
            return {}
        sign, w = got
        if len(left) % 2:
            sign = -sign
        return {(w, right): sign}
    # Γ-letters are even and Λ-letters odd, so the odd differential passing
    # the Koszul factor costs (-1)^q with q its Γ-degree
    twist = -1 if len(left) % 2 else 1
    if x_in_L:
        coeff = left.count(x) + 1
        return {(_sym_in(x, left), right): twist * coeff}
    got = _wedge_in(x, right)
    if got is None:
        return {}
    sign, w = got
    return {(left, w): twist * sign}


def schur_koszul_map(res: Resolution, n: int, variant: str):
    """res (x) Kos_{n-1} -> Kos_n as a chain map, with its source and target."""
    f = res.f
    small, small_bases, _ = _koszul_with_bases(f, n - 1, variant)
    big, _, big_index = _koszul_with_bases(f, n, variant)
    rc = res.complex(0)
    tot = tensor_complexes(rc, small)
    phi = {}
    for t in range(tot.lo, tot.hi + 1):
        cols = []
        for p in (0, 1):
            q = t - p
            if not 0 <= q <= n - 1:
                continue
            for a in range(rc.rank(p)):
                for key in small_bases[q]:
                    img = _multiply(p == 1, a, key, variant)
                    cols.append({big_index[t][k]: v for k, v in img.items()})
        phi[t] = IntMatrix(big.rank(t), tot.rank(t), cols)
    return phi, tot, big


def schur_koszul_cone(res: Resolution, n: int, variant: str) -> FreeChainComplex:
    """Cone whose H_{i+1} is L_iJ^n (variant ``sp``) or L_iY^n (variant ``lambda``)."""
    phi, tot, big = schur_koszul_map(res, n, variant)
    return cone(phi, tot, big)
