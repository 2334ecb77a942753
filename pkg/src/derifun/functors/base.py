"""The polynomial functor protocol.

Every functor answers two questions about free abelian groups:

* ``basis_of(r)``: an ordered basis of F(Z^r);
* ``map_of(f)``: the matrix of F(f) for an integer matrix f.

*Combinatorial* functors additionally work over arbitrary sortable labels.
Their basis elements are canonical keys built from labels, an
order-preserving relabelling sends basis elements to basis elements, and
the image of a single basis element can be computed without materialising
whole matrices (``apply``). This is what lets the simplicial layer
enumerate nondegenerate elements directly.
"""

from __future__ import annotations

from collections.abc import Callable, Hashable, Mapping, Sequence
from dataclasses import dataclass, field
from threading import Lock

from ..zlinalg import IntMatrix

Label = Hashable
Key = Hashable
LinearMap = Callable[[Label], Mapping[Label, int]]


def add_into(acc: dict, key, coeff: int) -> None:
    """acc[key] += coeff, dropping zeros."""
    if not coeff:
        return
    s = acc.get(key, 0) + coeff
    if s:
        acc[key] = s
    else:
        del acc[key]


def matrix_map(f: IntMatrix) -> LinearMap:
    """View an integer matrix as a label map on column indices."""
    cols = f.columns()
    return cols.__getitem__


@dataclass(frozen=True)
class PolyFunctor:
    """Base class; subclasses are frozen dataclasses acting as descriptors."""

    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)
    _lock: Lock = field(default_factory=Lock, init=False, repr=False, compare=False, hash=False)

    combinatorial = False

    @property
    def degree(self) -> int:
        raise NotImplementedError

    # matrix protocol

    def basis_of(self, r: int) -> list:
        key = ("basis", r)
        got = self._cache.get(key)
        if got is None:
            got = self._compute_basis(r)
            with self._lock:
                got = self._cache.setdefault(key, got)
        return got

    def index_of(self, r: int) -> dict:
        key = ("index", r)
        got = self._cache.get(key)
        if got is None:
            got = {b: i for i, b in enumerate(self.basis_of(r))}
            with self._lock:
                got = self._cache.setdefault(key, got)
        return got

    def rank(self, r: int) -> int:
        return len(self.basis_of(r))

    def _compute_basis(self, r: int) -> list:
        if self.combinatorial:
            return self.basis_labels(list(range(r)))
        raise NotImplementedError

    def map_of(self, f: IntMatrix) -> IntMatrix:
        if not self.combinatorial:
            raise NotImplementedError
        src = self.basis_of(f.cols)
        tgt = self.index_of(f.rows)
        fmap = matrix_map(f)
        cols = []
        for b in src:
            img = self.apply(fmap, b)
            cols.append({tgt[k]: v for k, v in img.items()})
        return IntMatrix(len(tgt), len(src), cols)

    # combinatorial protocol

    def basis_labels(self, labels: Sequence[Label]) -> list:
        raise NotImplementedError

    def apply(self, fmap: LinearMap, key: Key) -> dict:
        raise NotImplementedError

    def support(self, key: Key) -> frozenset:
        raise NotImplementedError

    # display

    def expr(self) -> str:
        raise NotImplementedError

    def __str__(self) -> str:
        return self.expr()

    # precedence for printing: 3 atom, 2 compose, 1 tensor, 0 sum
    precedence = 3
