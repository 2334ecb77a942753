"""Natural transformations between functors and the canonical builders."""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass, field
from itertools import permutations
from math import factorial
from threading import Lock

from ..errors import UnknownName
from ..zlinalg import IntMatrix
from .base import PolyFunctor
from .closed import Div, Ext, Identity, Sym, Tensor, permutation_sign, runs
from .combinators import TensorProd


@dataclass(frozen=True)
class NatTrans:
    """A natural transformation given on basis keys.

    ``rule`` sends a source basis key (over arbitrary labels) to a dict of
    target keys; it must commute with every ``map_of``. ``surjective``
    records that every component is onto, which makes the kernel a
    homotopy fibre levelwise.
    """

    name: str
    n: int
    source: PolyFunctor
    target: PolyFunctor
    rule: Callable = field(compare=False, hash=False, repr=False)
    surjective: bool = False
    injective: bool = False
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)
    _lock: Lock = field(default_factory=Lock, init=False, repr=False, compare=False, hash=False)

    def apply(self, key) -> dict:
        return self.rule(key)

    def matrix_at(self, r: int) -> IntMatrix:
        got = self._cache.get(r)
        if got is None:
            src = self.source.basis_of(r)
            tgt = self.target.index_of(r)
            cols = [{tgt[k]: v for k, v in self.rule(b).items()} for b in src]
            got = IntMatrix(len(tgt), len(src), cols)
            with self._lock:
                got = self._cache.setdefault(r, got)
        return got


def _sym_mult(key) -> dict:
    a, m = key
    return {tuple(sorted((a,) + tuple(m))): 1}


def _ext_mult(key) -> dict:
    a, w = key
    if a in w:
        return {}
    before = sum(1 for x in w if x < a)
    return {tuple(sorted((a,) + tuple(w))): -1 if before % 2 else 1}


def _div_mult(key) -> dict:
    a, m = key
    k = sum(1 for x in m if x == a)
    return {tuple(sorted((a,) + tuple(m))): k + 1}


def _arrangements(key) -> set:
    return set(permutations(key))


def _sp_to_tensor(key) -> dict:
    weight = 1
    for _, k in runs(key):
        weight *= factorial(k)
    return {w: weight for w in _arrangements(key)}


def _ext_to_tensor(key) -> dict:
    return {w: permutation_sign(w) for w in permutations(key)}


def _div_to_tensor(key) -> dict:
    return {w: 1 for w in _arrangements(key)}


def _sp_to_gamma(key) -> dict:
    weight = 1
    for _, k in runs(key):
        weight *= factorial(k)
    return {tuple(key): weight}


_BUILDERS = {
    "sym_mult": lambda n: (TensorProd(Identity(), Sym(n - 1)), Sym(n), _sym_mult, True, False),
    "ext_mult": lambda n: (TensorProd(Identity(), Ext(n - 1)), Ext(n), _ext_mult, True, False),
    "div_mult": lambda n: (TensorProd(Identity(), Div(n - 1)), Div(n), _div_mult, False, False),
    "sp_to_tensor": lambda n: (Sym(n), Tensor(n), _sp_to_tensor, False, True),
    "ext_to_tensor": lambda n: (Ext(n), Tensor(n), _ext_to_tensor, False, True),
    "div_to_tensor": lambda n: (Div(n), Tensor(n), _div_to_tensor, False, True),
    "sp_to_gamma": lambda n: (Sym(n), Div(n), _sp_to_gamma, False, True),
}

_MEMO: dict = {}


def canonical_nat_trans(name: str, n: int) -> NatTrans:
    """One of the standard maps between tensor, symmetric, exterior and divided powers.

    The multiplications ``sym_mult``, ``ext_mult`` and ``div_mult`` go from
    A (x) F^{n-1}(A) to F^n(A); ``sp_to_tensor``, ``ext_to_tensor`` and
    ``div_to_tensor`` are the symmetrisation embeddings, and ``sp_to_gamma``
    sends a product of degree-one elements to the product in Gamma.
    """
    if name not in _BUILDERS:
        raise UnknownName(f"unknown natural transformation {name!r}")
    if n < 1 or (name.endswith("_mult") and n < 2):
        raise ValueError(f"{name} needs n >= 2" if name.endswith("_mult") else "n must be >= 1")
    key = (name, n)
    got = _MEMO.get(key)
    if got is None:
        src, tgt, rule, surj, inj = _BUILDERS[name](n)
        got = _MEMO.setdefault(key, NatTrans(name, n, src, tgt, rule, surj, inj))
    return got

