"""Cross-effects of polynomial functors via inclusion-exclusion idempotents."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product

from ..errors import InternalLatticeError, NotInLattice
from ..zlinalg import IntMatrix, LatticeSolver, block_diag, hermite_basis
from .base import PolyFunctor


def _block_projection(ranks: tuple[int, ...], keep: set[int]) -> IntMatrix:
    entries = []
    for b, r in enumerate(ranks):
        entries.extend([1 if b in keep else 0] * r)
    return IntMatrix.diagonal(entries)


@dataclass
class CrossEffect:
    """Top cross-effect F[r](A_1 | ... | A_r) of a functor, evaluated on free modules.

    F(A_1 + ... + A_r) splits as a sum over nonempty subsets S of the
    cross-effects of the A_i, i in S. The top summand is the image of the
    idempotent sum_S (-1)^{r-|S|} F(p_S), where p_S projects onto the blocks
    in S.
    """

    functor: PolyFunctor
    arity: int
    _cache: dict = field(default_factory=dict, repr=False)

    def idempotent(self, ranks: tuple[int, ...]) -> IntMatrix:
        ranks = tuple(ranks)
        if len(ranks) != self.arity:
            raise ValueError(f"expected {self.arity} ranks")
        total = None
        blocks = range(self.arity)
        for size in range(self.arity + 1):
            sign = -1 if (self.arity - size) % 2 else 1
            for keep in combinations(blocks, size):
                term = self.functor.map_of(_block_projection(ranks, set(keep)))
                term = term if sign > 0 else -term
                total = term if total is None else total + term
        return total

    def lattice(self, ranks: tuple[int, ...]) -> IntMatrix:
        ranks = tuple(ranks)
        got = self._cache.get(ranks)
        if got is None:
            got = self._cache[ranks] = hermite_basis(self.idempotent(ranks))
        return got

    def rank(self, ranks: tuple[int, ...]) -> int:
        return self.lattice(ranks).cols

    def basis(self, ranks: tuple[int, ...]) -> list[int]:
        return list(range(self.rank(ranks)))

    def map_of(self, maps: tuple[IntMatrix, ...]) -> IntMatrix:
        src = self.lattice(tuple(m.cols for m in maps))
        tgt = self.lattice(tuple(m.rows for m in maps))
        images = self.functor.map_of(block_diag(list(maps))) @ src
        if not tgt.cols:
            if not images.is_zero():
                raise InternalLatticeError("cross-effect image escaped a zero summand")
            return IntMatrix(0, src.cols)
        solver = LatticeSolver(tgt)
        cols = []
        for col in images.columns():
            try:
                cols.append(solver.solve(col))
            except NotInLattice as exc:
                raise InternalLatticeError("cross-effect image outside the summand") from exc
        return IntMatrix(tgt.cols, src.cols, cols)

    def is_zero(self, max_rank: int = 2) -> bool:
        """True when the summand vanishes on all ranks up to ``max_rank``."""
        return all(self.rank(rs) == 0 for rs in product(range(1, max_rank + 1), repeat=self.arity))


def cross_effect(f: PolyFunctor, arity: int) -> CrossEffect:
    return CrossEffect(f, arity)
