"""Closed-form functors: identity, constants, tensor, symmetric, exterior and divided powers."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement, product
from math import comb

from .base import LinearMap, PolyFunctor, add_into


def permutation_sign(seq: Sequence) -> int:
    """Sign of the permutation that sorts a sequence of distinct items."""
    sign = 1
    s = list(seq)
    for i in range(len(s)):
        for j in range(i + 1, len(s)):
            if s[i] > s[j]:
                sign = -sign
    return sign


def runs(key: Sequence) -> list[tuple[object, int]]:
    """Group a sorted multiset into (label, multiplicity) pairs."""
    out: list[tuple[object, int]] = []
    for x in key:
        if out and out[-1][0] == x:
            out[-1] = (x, out[-1][1] + 1)
        else:
            out.append((x, 1))
    return out


def _letter_images(fmap: LinearMap, key: Sequence) -> list[list[tuple[object, int]]]:
    return [list(fmap(x).items()) for x in key]


@dataclass(frozen=True)
class Identity(PolyFunctor):
    combinatorial = True

    @property
    def degree(self) -> int:
        return 1

    def rank(self, r: int) -> int:
        return r

    def basis_labels(self, labels):
        return list(labels)

    def apply(self, fmap, key):
        return dict(fmap(key))

    def support(self, key):
        return frozenset((key,))

    def expr(self) -> str:
        return "Id"


@dataclass(frozen=True)
class Constant(PolyFunctor):
    """The constant functor Z^k."""

    k: int = 1
    combinatorial = True

    @property
    def degree(self) -> int:
        return 0

    def rank(self, r: int) -> int:
        return self.k

    def basis_labels(self, labels):
        return list(range(self.k))

    def apply(self, fmap, key):
        return {key: 1}

    def support(self, key):
        return frozenset()

    def expr(self) -> str:
        return "Z" if self.k == 1 else f"Z^{self.k}"


@dataclass(frozen=True)
class Tensor(PolyFunctor):
    """n-fold tensor power; keys are n-tuples of labels."""

    n: int
    combinatorial = True

    @property
    def degree(self) -> int:
        return self.n

    def rank(self, r: int) -> int:
        return r ** self.n

    def basis_labels(self, labels):
        return list(product(labels, repeat=self.n))

    def apply(self, fmap, key):
        out: dict = {}
        for terms in product(*_letter_images(fmap, key)):
            c = 1
            for _, v in terms:
                c *= v
            add_into(out, tuple(x for x, _ in terms), c)
        return out

    def support(self, key):
        return frozenset(key)

    def expr(self) -> str:
        return f"T^{self.n}"


@dataclass(frozen=True)
class Sym(PolyFunctor):
    """Symmetric power; keys are weakly increasing tuples."""

    n: int
    combinatorial = True

    @property
    def degree(self) -> int:
        return self.n

    def rank(self, r: int) -> int:
        return comb(r + self.n - 1, self.n)

    def basis_labels(self, labels):
        return list(combinations_with_replacement(labels, self.n))

    def apply(self, fmap, key):
        out: dict = {}
        for terms in product(*_letter_images(fmap, key)):
            c = 1
            for _, v in terms:
                c *= v
            add_into(out, tuple(sorted(x for x, _ in terms)), c)
        return out

    def support(self, key):
        return frozenset(key)

    def expr(self) -> str:
        return f"SP^{self.n}"


@dataclass(frozen=True)
class Ext(PolyFunctor):
    """Exterior power; keys are strictly increasing tuples."""

    n: int
    combinatorial = True

    @property
    def degree(self) -> int:
        return self.n

    def rank(self, r: int) -> int:
        return comb(r, self.n)

    def basis_labels(self, labels):
        return list(combinations(labels, self.n))

    def apply(self, fmap, key):
        out: dict = {}
        for terms in product(*_letter_images(fmap, key)):
            word = [x for x, _ in terms]
            if len(set(word)) < len(word):
                continue
            c = permutation_sign(word)
            for _, v in terms:
                c *= v
            add_into(out, tuple(sorted(word)), c)
        return out

    def support(self, key):
        return frozenset(key)

    def expr(self) -> str:
        return f"L^{self.n}"


def _divided_power_of_sum(items: list[tuple[object, int]], k: int) -> dict:
    """gamma_k(sum c_i x_i) = sum over compositions of prod c_i^{k_i} gamma_{k_i}(x_i)."""
    out: dict = {}

    def rec(pos: int, left: int, coeff: int, mono: list):
        if pos == len(items) - 1:
            x, c = items[pos]
            m = mono + [(x, left)] if left else mono
            add_into(out, tuple(m), coeff * c ** left)
            return
        x, c = items[pos]
        for t in range(left + 1):
            rec(pos + 1, left - t, coeff * c ** t, mono + [(x, t)] if t else mono)

    if not items:
        if k == 0:
            out[()] = 1
        return out
    rec(0, k, 1, [])
    return out


def _multiply_divided(a: dict, b: dict) -> dict:
    """Product in the divided power algebra of monomials {((x, e), ...): c}."""
    out: dict = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            exps = dict(ma)
            c = ca * cb
            for x, e in mb:
                if x in exps:
                    c *= comb(exps[x] + e, e)
                    exps[x] += e
                else:
                    exps[x] = e
            add_into(out, tuple(sorted(exps.items())), c)
    return out


@dataclass(frozen=True)
class Div(PolyFunctor):
    """Divided power Gamma_n; key (x, x, y) stands for gamma_2(x) gamma_1(y)."""

    n: int
    combinatorial = True

    @property
    def degree(self) -> int:
        return self.n

    def rank(self, r: int) -> int:
        return comb(r + self.n - 1, self.n)

    def basis_labels(self, labels):
        return list(combinations_with_replacement(labels, self.n))

    def apply(self, fmap, key):
        acc = {(): 1}
        for x, k in runs(key):
            acc = _multiply_divided(acc, _divided_power_of_sum(list(fmap(x).items()), k))
            if not acc:
                return {}
        out: dict = {}
        for mono, c in acc.items():
            add_into(out, tuple(x for x, e in mono for _ in range(e)), c)
        return out

    def support(self, key):
        return frozenset(key)

    def expr(self) -> str:
        return f"G^{self.n}"
