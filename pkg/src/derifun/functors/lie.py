"""Free Lie ring functors in the Lyndon basis.

The basis element indexed by a Lyndon word w is its standard bracketing
P_w = [P_u, P_v], where w = uv and v is the longest proper Lyndon suffix.
Expanded in the tensor algebra, P_w has coefficient 1 on w and is supported
otherwise on lexicographically larger words. Rewriting a Lie element into
Lyndon coordinates is therefore a leading-term elimination.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from functools import lru_cache

from ..errors import NotInLieImage
from .base import PolyFunctor, add_into
from .closed import Tensor


def is_lyndon(word: Sequence) -> bool:
    """Strictly smaller than all its proper rotations."""
    n = len(word)
    if n == 0:
        return False
    w = tuple(word)
    return all(w < w[i:] + w[:i] for i in range(1, n))


def lyndon_words(k: int, n: int) -> list[tuple[int, ...]]:
    """Lyndon words of length exactly n over 0..k-1, in lexicographic order (Duval)."""
    if k <= 0 or n <= 0:
        return []
    out = []
    w = [-1]
    while w:
        w[-1] += 1
        if len(w) == n:
            out.append(tuple(w))
        m = len(w)
        while len(w) < n:
            w.append(w[len(w) - m])
        while w and w[-1] == k - 1:
            w.pop()
    return out


def witt_number(r: int, n: int) -> int:
    """Rank of the degree-n part of the free Lie ring on r generators."""
    total = 0
    for d in range(1, n + 1):
        if n % d == 0:
            total += _mobius(d) * r ** (n // d)
    return total // n


def _mobius(n: int) -> int:
    mu = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            mu = -mu
        p += 1
    if n > 1:
        mu = -mu
    return mu


def standard_factorization(word: tuple) -> tuple[tuple, tuple]:
    """w = uv with v the longest proper suffix that is Lyndon."""
    for i in range(1, len(word)):
        if is_lyndon(word[i:]):
            return word[:i], word[i:]
    raise ValueError(f"{word} has no standard factorization")


def _bracket(a: Mapping[tuple, int], b: Mapping[tuple, int]) -> dict:
    out: dict = {}
    for wa, ca in a.items():
        for wb, cb in b.items():
            add_into(out, wa + wb, ca * cb)
            add_into(out, wb + wa, -ca * cb)
    return out


@lru_cache(maxsize=None)
def _pattern_expansion(pattern: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], int], ...]:
    if len(pattern) == 1:
        return ((pattern, 1),)
    u, v = standard_factorization(pattern)
    return tuple(sorted(_bracket(dict(lyndon_expansion(u)), dict(lyndon_expansion(v))).items()))


def _pattern(word: tuple) -> tuple[tuple, tuple[int, ...]]:
    letters = tuple(sorted(set(word)))
    where = {x: i for i, x in enumerate(letters)}
    return letters, tuple(where[x] for x in word)


def lyndon_expansion(word: tuple) -> dict:
    """Tensor expansion of the standard bracketing of a Lyndon word over any labels."""
    letters, pat = _pattern(tuple(word))
    return {tuple(letters[i] for i in w): c for w, c in _pattern_expansion(pat)}


def bracket_left(*words: tuple) -> dict:
    """Tensor expansion of the left-normed bracket [[a1, a2], ..., an] of letters."""
    acc: dict = {(words[0],): 1}
    for x in words[1:]:
        acc = _bracket(acc, {(x,): 1})
    return acc


def rewrite_lyndon(vec: Mapping[tuple, int]) -> dict:
    """Lyndon coordinates of a Lie element given in the tensor algebra."""
    v = {w: c for w, c in vec.items() if c}
    out: dict = {}
    while v:
        w = min(v)
        c = v[w]
        if not is_lyndon(w):
            raise NotInLieImage(f"leading word {w} is not Lyndon")
        out[w] = c
        for word, a in lyndon_expansion(w).items():
            add_into(v, word, -c * a)
    return out


def lie_rewrite(tensor_vector, n: int, r: int) -> list[int]:
    """Coordinates in the Lyndon basis of Lie(n) at rank r.

    ``tensor_vector`` is a mapping from n-letter words over 0..r-1 to
    coefficients, or a dense list indexed like :class:`Tensor` (base-r digits).
    """
    if not isinstance(tensor_vector, Mapping):
        words = Tensor(n).basis_of(r)
        tensor_vector = {words[i]: c for i, c in enumerate(tensor_vector) if c}
    coords = rewrite_lyndon(tensor_vector)
    idx = Lie(n).index_of(r)
    out = [0] * len(idx)
    for w, c in coords.items():
        out[idx[w]] = c
    return out


@dataclass(frozen=True)
class Lie(PolyFunctor):
    """Degree-n part of the free Lie ring; keys are Lyndon words."""

    n: int
    combinatorial = True

    @property
    def degree(self) -> int:
        return self.n

    def rank(self, r: int) -> int:
        return witt_number(r, self.n)

    def basis_labels(self, labels):
        labels = list(labels)
        return [tuple(labels[i] for i in w) for w in lyndon_words(len(labels), self.n)]

    def apply(self, fmap, key):
        image = Tensor(self.n).apply
        acc: dict = {}
        for word, c in lyndon_expansion(key).items():
            for w2, c2 in image(fmap, word).items():
                add_into(acc, w2, c * c2)
        return rewrite_lyndon(acc)

    def support(self, key):
        return frozenset(key)

    def expr(self) -> str:
        return f"Lie^{self.n}"
