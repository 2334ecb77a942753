"""Finitely generated abelian groups in invariant-factor form."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from math import gcd, prod


def invariant_factors_of(orders: Iterable[int]) -> tuple[int, tuple[int, ...]]:
    """Canonicalise a direct sum of cyclic groups.

    ``orders`` lists cyclic summands: 0 means a copy of Z, 1 (or -1) is
    trivial. Returns ``(free_rank, factors)`` with factors a divisibility
    chain of integers >= 2.
    """
    free = 0
    finite = []
    for m in orders:
        m = abs(int(m))
        if m == 0:
            free += 1
        elif m > 1:
            finite.append(m)
    k = len(finite)
    # pairwise (gcd, lcm) sweeps leave a divisibility chain
    for i in range(k):
        for j in range(i + 1, k):
            a, b = finite[i], finite[j]
            g = gcd(a, b)
            finite[i], finite[j] = g, a // g * b
    return free, tuple(d for d in finite if d > 1)


@dataclass(frozen=True, order=True)
class FgAbGroup:
    """Z^free_rank + Z/d_1 + ... + Z/d_k with d_1 | d_2 | ... | d_k, each d_i >= 2."""

    free_rank: int = 0
    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be non-negative")
        facs = tuple(self.invariant_factors)
        object.__setattr__(self, "invariant_factors", facs)
        for d in facs:
            if d < 2:
                raise ValueError(f"invariant factor {d} must be at least 2")
        for a, b in zip(facs, facs[1:]):
            if b % a:
                raise ValueError(f"factors {facs} do not form a divisibility chain")

    @classmethod
    def from_orders(cls, orders: Iterable[int]) -> FgAbGroup:
        free, facs = invariant_factors_of(orders)
        return cls(free, facs)

    @classmethod
    def free(cls, r: int) -> FgAbGroup:
        return cls(r, ())

    @classmethod
    def cyclic(cls, m: int) -> FgAbGroup:
        return cls.from_orders([m])

    @classmethod
    def trivial(cls) -> FgAbGroup:
        return cls(0, ())

    def cyclic_orders(self) -> list[int]:
        return [0] * self.free_rank + list(self.invariant_factors)

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.invariant_factors

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    def order(self) -> int | None:
        """Cardinality, or None when the group is infinite."""
        if self.free_rank:
            return None
        return prod(self.invariant_factors)

    def __add__(self, other: FgAbGroup) -> FgAbGroup:
        return FgAbGroup.from_orders(self.cyclic_orders() + other.cyclic_orders())

    def __mul__(self, k: int) -> FgAbGroup:
        return FgAbGroup.from_orders(self.cyclic_orders() * k)

    __rmul__ = __mul__

    def tensor(self, other: FgAbGroup) -> FgAbGroup:
        orders = []
        for a in self.cyclic_orders():
            for b in other.cyclic_orders():
                orders.append(gcd(a, b))
        return FgAbGroup.from_orders(orders)

    def tor(self, other: FgAbGroup) -> FgAbGroup:
        return FgAbGroup.from_orders(
            [gcd(a, b) for a in self.invariant_factors for b in other.invariant_factors]
        )

    def mod(self, m: int) -> FgAbGroup:
        """A tensor Z/m."""
        return self.tensor(FgAbGroup.cyclic(m))

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.invariant_factors)
        return " + ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"FgAbGroup({self})"


ZERO = FgAbGroup()
