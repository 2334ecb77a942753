"""Bounded chain complexes of free abelian groups."""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass

from .errors import CompositionNotZero
from .zlinalg import FgAbGroup, IntMatrix, elementary_divisors


@dataclass(frozen=True)
class FreeChainComplex:
    """Free modules ``C_lo .. C_hi`` with differentials ``d_k: C_k -> C_{k-1}``.

    ``differentials[k]`` is stored for ``lo < k <= hi``; everything outside
    the degree range is zero.
    """

    lo: int
    ranks: tuple[int, ...]
    differentials: Mapping[int, IntMatrix]

    def __post_init__(self):
        object.__setattr__(self, "ranks", tuple(self.ranks))
        for k in range(self.lo + 1, self.hi + 1):
            d = self.differentials.get(k)
            if d is None:
                raise ValueError(f"missing differential in degree {k}")
            if d.shape != (self.rank(k - 1), self.rank(k)):
                raise ValueError(f"d_{k} has shape {d.shape}, expected "
                                 f"{(self.rank(k - 1), self.rank(k))}")

    @classmethod
    def from_maps(cls, lo: int, ranks: Sequence[int], maps: Sequence[IntMatrix]) -> FreeChainComplex:
        """``maps[t]`` is the differential out of degree ``lo + t + 1``."""
        return cls(lo, tuple(ranks), {lo + t + 1: m for t, m in enumerate(maps)})

    @classmethod
    def two_term(cls, f: IntMatrix, lo: int = 0) -> FreeChainComplex:
        """``C_{lo+1} --f--> C_lo``."""
        return cls(lo, (f.rows, f.cols), {lo + 1: f})

    @property
    def hi(self) -> int:
        return self.lo + len(self.ranks) - 1

    @property
    def degree_range(self) -> tuple[int, int]:
        return (self.lo, self.hi)

    def rank(self, k: int) -> int:
        if self.lo <= k <= self.hi:
            return self.ranks[k - self.lo]
        return 0

    def d(self, k: int) -> IntMatrix:
        if self.lo < k <= self.hi:
            return self.differentials[k]
        return IntMatrix(self.rank(k - 1), self.rank(k))

    def check(self) -> None:
        for k in range(self.lo + 2, self.hi + 1):
            if not (self.d(k - 1) @ self.d(k)).is_zero():
                raise CompositionNotZero(f"d_{k - 1} d_{k} != 0")

    def homology(self) -> dict[int, FgAbGroup]:
        return complex_homology(self)


def shift(c: FreeChainComplex, n: int) -> FreeChainComplex:
    """C[n]_i = C_{i-n}; differentials unchanged."""
    return FreeChainComplex(c.lo + n, c.ranks, {k + n: m for k, m in c.differentials.items()})


def tensor_complexes(c: FreeChainComplex, e: FreeChainComplex) -> FreeChainComplex:
    """Total complex with d(x (x) y) = dx (x) y + (-1)^p x (x) dy."""
    lo, hi = c.lo + e.lo, c.hi + e.hi
    # offsets[t][p] = first index of the (p, t-p) block in degree t
    offsets: dict[int, dict[int, int]] = {}
    ranks = []
    for t in range(lo, hi + 1):
        off = {}
        total = 0
        for p in range(c.lo, c.hi + 1):
            q = t - p
            if e.lo <= q <= e.hi:
                off[p] = total
                total += c.rank(p) * e.rank(q)
        offsets[t] = off
        ranks.append(total)
    diffs = {}
    for t in range(lo + 1, hi + 1):
        cols: list[dict[int, int]] = []
        tgt = offsets[t - 1]
        for p, base in offsets[t].items():
            q = t - p
            dc, de = c.d(p), e.d(q)
            nq = e.rank(q)
            sign = -1 if p % 2 else 1
            for a in range(c.rank(p)):
                for b in range(nq):
                    col: dict[int, int] = {}
                    if p - 1 in tgt:
                        o = tgt[p - 1]
                        for a2, v in dc.column(a).items():
                            col[o + a2 * nq + b] = v
                    if p in tgt and q - 1 >= e.lo:
                        o = tgt[p]
                        nq1 = e.rank(q - 1)
                        for b2, v in de.column(b).items():
                            key = o + a * nq1 + b2
                            col[key] = col.get(key, 0) + sign * v
                    cols.append(col)
        diffs[t] = IntMatrix(ranks[t - 1 - lo], ranks[t - lo], cols)
    return FreeChainComplex(lo, tuple(ranks), diffs)


def cone(phi: Mapping[int, IntMatrix], c: FreeChainComplex, e: FreeChainComplex) -> FreeChainComplex:
    """Mapping cone of a chain map ``phi: c -> e``.

    cone_k = c_{k-1} + e_k with d(x, y) = (-dx, phi(x) + dy). For a degreewise
    injective map it computes the cokernel, for a surjective one the
    kernel shifted up by one.
    """
    lo = min(c.lo + 1, e.lo)
    hi = max(c.hi + 1, e.hi)
    ranks = [c.rank(k - 1) + e.rank(k) for k in range(lo, hi + 1)]
    diffs = {}
    for k in range(lo + 1, hi + 1):
        nc_tgt = c.rank(k - 2)
        cols: list[dict[int, int]] = []
        dc = c.d(k - 1)
        ph = phi.get(k - 1)
        for a in range(c.rank(k - 1)):
            col = {i: -v for i, v in dc.column(a).items()}
            if ph is not None:
                for i, v in ph.column(a).items():
                    col[nc_tgt + i] = v
            cols.append(col)
        de = e.d(k)
        for b in range(e.rank(k)):
            cols.append({nc_tgt + i: v for i, v in de.column(b).items()})
        diffs[k] = IntMatrix(ranks[k - 1 - lo], ranks[k - lo], cols)
    return FreeChainComplex(lo, tuple(ranks), diffs)


def complex_homology(c: FreeChainComplex, check: bool = True) -> dict[int, FgAbGroup]:
    """H_k for every k in the degree range."""
    if check:
        c.check()
    info = {}
    for k in range(c.lo, c.hi + 2):
        info[k] = elementary_divisors(c.d(k))
    out = {}
    for k in range(c.lo, c.hi + 1):
        r_out = info[k][0]
        r_in, tors = info[k + 1]
        out[k] = FgAbGroup(c.rank(k) - r_out - r_in, tuple(tors))
    return out
