"""Functor combinators: composition, tensor product, direct sum, kernels and cokernels."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import InternalLatticeError, NotInLattice, NotSaturated
from ..zlinalg import IntMatrix, LatticeSolver, block_diag, column_cokernel, kernel_basis, kron
from ..zlinalg.groups import FgAbGroup
from .base import PolyFunctor, add_into


def _wrap(f: PolyFunctor, above: int) -> str:
    s = f.expr()
    return f"({s})" if f.precedence < above else s


@dataclass(frozen=True)
class Compose(PolyFunctor):
    """F o G, i.e. A -> F(G(A))."""

    outer: PolyFunctor
    inner: PolyFunctor
    precedence = 2

    @property
    def combinatorial(self) -> bool:
        return self.outer.combinatorial and self.inner.combinatorial

    @property
    def degree(self) -> int:
        return self.outer.degree * self.inner.degree

    def rank(self, r: int) -> int:
        return self.outer.rank(self.inner.rank(r))

    def _compute_basis(self, r: int) -> list:
        return self.outer.basis_of(self.inner.rank(r))

    def map_of(self, f: IntMatrix) -> IntMatrix:
        return self.outer.map_of(self.inner.map_of(f))

    def basis_labels(self, labels):
        return self.outer.basis_labels(self.inner.basis_labels(labels))

    def apply(self, fmap, key):
        inner = self.inner
        memo: dict = {}

        def gmap(k):
            got = memo.get(k)
            if got is None:
                got = memo[k] = inner.apply(fmap, k)
            return got

        return self.outer.apply(gmap, key)

    def support(self, key):
        out: set = set()
        for k in self.outer.support(key):
            out |= self.inner.support(k)
        return frozenset(out)

    def expr(self) -> str:
        # right-nested compositions print without parentheses
        left = _wrap(self.outer, 3)
        right = _wrap(self.inner, 2)
        return f"{left} o {right}"


@dataclass(frozen=True)
class TensorProd(PolyFunctor):
    """A -> F(A) (x) G(A); keys are pairs."""

    left: PolyFunctor
    right: PolyFunctor
    precedence = 1

    @property
    def combinatorial(self) -> bool:
        return self.left.combinatorial and self.right.combinatorial

    @property
    def degree(self) -> int:
        return self.left.degree + self.right.degree

    def rank(self, r: int) -> int:
        return self.left.rank(r) * self.right.rank(r)

    def _compute_basis(self, r: int) -> list:
        if self.combinatorial:
            return self.basis_labels(list(range(r)))
        return [(a, b) for a in range(self.left.rank(r)) for b in range(self.right.rank(r))]

    def map_of(self, f: IntMatrix) -> IntMatrix:
        return kron(self.left.map_of(f), self.right.map_of(f))

    def basis_labels(self, labels):
        rb = self.right.basis_labels(labels)
        return [(a, b) for a in self.left.basis_labels(labels) for b in rb]

    def apply(self, fmap, key):
        a, b = key
        ia = self.left.apply(fmap, a)
        ib = self.right.apply(fmap, b)
        out: dict = {}
        for ka, va in ia.items():
            for kb, vb in ib.items():
                add_into(out, (ka, kb), va * vb)
        return out

    def support(self, key):
        return self.left.support(key[0]) | self.right.support(key[1])

    def expr(self) -> str:
        return f"{_wrap(self.left, 1)} * {_wrap(self.right, 2)}"


@dataclass(frozen=True)
class DirectSum(PolyFunctor):
    """A -> F(A) + G(A); keys are (0, key) or (1, key)."""

    left: PolyFunctor
    right: PolyFunctor
    precedence = 0

    @property
    def combinatorial(self) -> bool:
        return self.left.combinatorial and self.right.combinatorial

    @property
    def degree(self) -> int:
        return max(self.left.degree, self.right.degree)

    def rank(self, r: int) -> int:
        return self.left.rank(r) + self.right.rank(r)

    def _compute_basis(self, r: int) -> list:
        if self.combinatorial:
            return self.basis_labels(list(range(r)))
        return [(0, a) for a in range(self.left.rank(r))] + [(1, b) for b in range(self.right.rank(r))]

    def map_of(self, f: IntMatrix) -> IntMatrix:
        return block_diag([self.left.map_of(f), self.right.map_of(f)])

    def basis_labels(self, labels):
        return ([(0, a) for a in self.left.basis_labels(labels)]
                + [(1, b) for b in self.right.basis_labels(labels)])

    def apply(self, fmap, key):
        tag, k = key
        part = self.left if tag == 0 else self.right
        return {(tag, kk): v for kk, v in part.apply(fmap, k).items()}

    def support(self, key):
        return (self.left if key[0] == 0 else self.right).support(key[1])

    def expr(self) -> str:
        return f"{_wrap(self.left, 0)} + {_wrap(self.right, 1)}"


@dataclass(frozen=True)
class KernelOf(PolyFunctor):
    """Componentwise kernel of a natural transformation."""

    trans: "NatTrans"
    label: str | None = None

    @property
    def degree(self) -> int:
        return max(self.trans.source.degree, self.trans.target.degree)

    def lattice(self, r: int) -> IntMatrix:
        """Kernel basis at rank r, in the source functor's coordinates."""
        key = ("lattice", r)
        got = self._cache.get(key)
        if got is None:
            got = kernel_basis(self.trans.matrix_at(r))
            with self._lock:
                got = self._cache.setdefault(key, got)
        return got

    def _solver(self, r: int) -> LatticeSolver:
        key = ("solver", r)
        got = self._cache.get(key)
        if got is None:
            basis = self.lattice(r)
            if basis.cols and not _is_saturated(basis):
                raise NotSaturated(f"kernel lattice at rank {r} is not saturated")
            got = LatticeSolver(basis)
            with self._lock:
                got = self._cache.setdefault(key, got)
        return got

    def _compute_basis(self, r: int) -> list:
        return list(range(self.lattice(r).cols))

    def map_of(self, f: IntMatrix) -> IntMatrix:
        src = self.lattice(f.cols)
        tgt_rank = self.rank(f.rows)
        images = self.trans.source.map_of(f) @ src
        if not tgt_rank:
            if not images.is_zero():
                raise InternalLatticeError("kernel image escaped a zero kernel")
            return IntMatrix(0, src.cols)
        solver = self._solver(f.rows)
        cols = []
        for col in images.columns():
            try:
                cols.append(solver.solve(col))
            except NotInLattice as exc:
                raise InternalLatticeError("kernel image outside the target kernel") from exc
        return IntMatrix(tgt_rank, src.cols, cols)

    def expr(self) -> str:
        return self.label or f"ker({self.trans.name}^{self.trans.n})"


@dataclass(frozen=True)
class CokernelOf(PolyFunctor):
    """Componentwise cokernel of a natural transformation.

    Values on free modules need not be free (W_n is torsion), so the basis
    here is the target functor's basis viewed as generators, with
    ``relations(r)`` as the relation columns.
    """

    trans: "NatTrans"
    label: str | None = None

    @property
    def degree(self) -> int:
        return max(self.trans.source.degree, self.trans.target.degree)

    def _compute_basis(self, r: int) -> list:
        return list(self.trans.target.basis_of(r))

    def relations(self, r: int) -> IntMatrix:
        return self.trans.matrix_at(r)

    def value(self, r: int) -> FgAbGroup:
        return column_cokernel(self.relations(r))

    def map_of(self, f: IntMatrix) -> IntMatrix:
        return self.trans.target.map_of(f)

    def expr(self) -> str:
        return self.label or f"coker({self.trans.name}^{self.trans.n})"


def _is_saturated(basis: IntMatrix) -> bool:
    from ..zlinalg import elementary_divisors

    rank, divisors = elementary_divisors(basis)
    return rank == basis.cols and not divisors


def compose(f: PolyFunctor, g: PolyFunctor) -> PolyFunctor:
    return Compose(f, g)


def tensor_product(f: PolyFunctor, g: PolyFunctor) -> PolyFunctor:
    return TensorProd(f, g)


def direct_sum(f: PolyFunctor, g: PolyFunctor) -> PolyFunctor:
    return DirectSum(f, g)


def kernel_functor(t: "NatTrans", label: str | None = None) -> KernelOf:
    return KernelOf(t, label)


def cokernel_functor(t: "NatTrans", label: str | None = None) -> CokernelOf:
    return CokernelOf(t, label)


from .natural import NatTrans  # noqa: E402  (circular: NatTrans builds on combinators)
