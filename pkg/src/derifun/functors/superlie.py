"""Super-Lie functors (graded Lie rings with squares) as lattices in the tensor power."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import InternalLatticeError, NotInLattice, UnsupportedDegree
from ..zlinalg import IntMatrix, LatticeSolver, hermite_basis
from .base import PolyFunctor, add_into
from .closed import Tensor

MAX_SUPERLIE = 5


def _word_index(word: tuple[int, ...], r: int) -> int:
    i = 0
    for x in word:
        i = i * r + x
    return i


def _graded_bracket(x: dict, y: dict, i: int, j: int) -> dict:
    """Image of {x, y} = x (x) y - (-1)^{ij} y (x) x."""
    sign = -1 if (i * j) % 2 == 0 else 1
    out: dict = {}
    for wx, cx in x.items():
        for wy, cy in y.items():
            add_into(out, wx + wy, cx * cy)
            add_into(out, wy + wx, sign * cx * cy)
    return out


def _square(x: dict) -> dict:
    out: dict = {}
    for wa, ca in x.items():
        for wb, cb in x.items():
            add_into(out, wa + wb, ca * cb)
    return out


def superlie_basis(n: int, r: int) -> IntMatrix:
    """Hermite basis, inside T^n(Z^r), of the super-Lie lattice of degree n.

    Degree k is generated by graded brackets of lower-degree basis elements,
    plus tensor squares of odd-degree basis elements when k = 2m with m odd.
    """
    if n > MAX_SUPERLIE:
        raise UnsupportedDegree(f"super-Lie functors are modelled up to degree {MAX_SUPERLIE}")
    if n < 1:
        raise UnsupportedDegree("super-Lie degree must be positive")
    levels: dict[int, list[dict]] = {1: [{(a,): 1} for a in range(r)]}
    for k in range(2, n + 1):
        gens: list[dict] = []
        for i in range(1, k):
            j = k - i
            for x in levels[i]:
                for y in levels[j]:
                    g = _graded_bracket(x, y, i, j)
                    if g:
                        gens.append(g)
        if k % 2 == 0 and (k // 2) % 2 == 1:
            gens.extend(_square(x) for x in levels[k // 2])
        size = r ** k
        mat = IntMatrix(size, len(gens), [{_word_index(w, r): c for w, c in g.items()} for g in gens])
        basis = hermite_basis(mat)
        words = Tensor(k).basis_of(r)
        levels[k] = [{words[i]: c for i, c in col.items()} for col in basis.columns()]
    size = r ** n
    words = Tensor(n).index_of(r)
    return IntMatrix(size, len(levels[n]), [{words[w]: c for w, c in v.items()} for v in levels[n]])


@dataclass(frozen=True)
class SuperLie(PolyFunctor):
    """Degree-n super-Lie functor, n <= 5; basis = Hermite lattice columns."""

    n: int

    def __post_init__(self):
        if self.n > MAX_SUPERLIE or self.n < 1:
            raise UnsupportedDegree(f"SLie^{self.n} is outside the modelled range 1..{MAX_SUPERLIE}")

    @property
    def degree(self) -> int:
        return self.n

    def lattice(self, r: int) -> IntMatrix:
        key = ("lattice", r)
        got = self._cache.get(key)
        if got is None:
            got = superlie_basis(self.n, r)
            with self._lock:
                got = self._cache.setdefault(key, got)
        return got

    def _solver(self, r: int) -> LatticeSolver:
        key = ("solver", r)
        got = self._cache.get(key)
        if got is None:
            got = LatticeSolver(self.lattice(r))
            with self._lock:
                got = self._cache.setdefault(key, got)
        return got

    def _compute_basis(self, r: int) -> list:
        return list(range(self.lattice(r).cols))

    def map_of(self, f: IntMatrix) -> IntMatrix:
        src = self.lattice(f.cols)
        images = Tensor(self.n).map_of(f) @ src
        tgt = self.rank(f.rows)
        if not tgt:
            if not images.is_zero():
                raise InternalLatticeError("super-Lie image escaped a zero lattice")
            return IntMatrix(0, src.cols)
        solver = self._solver(f.rows)
        cols = []
        for col in images.columns():
            try:
                cols.append(solver.solve(col))
            except NotInLattice as exc:
                raise InternalLatticeError("super-Lie image is outside the lattice") from exc
        return IntMatrix(tgt, src.cols, cols)

    def expr(self) -> str:
        return f"SLie^{self.n}"
