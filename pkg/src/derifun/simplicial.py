"""Dold–Kan construction, levelwise functors and homotopy groups.

Level m of K(C) is the sum over order-preserving surjections s: [m] -> [k]
of copies of C_k. A basis label is a pair ``(s, c)`` with ``s`` the tuple
of values of the surjection and ``c`` an index into C_k. For a face d_i,
the composite s o delta^i either stays surjective (identity on the
summand), or misses one value v; the summand then maps through d: C_k ->
C_{k-1} when v = 0 and vanishes otherwise. The normalised complex is then
C itself, with the Moore differential d_0.

Two evaluation paths exist:

* the naive path materialises every level as a matrix
  (:func:`dold_kan_K`, :func:`apply_functor_levelwise`,
  :func:`homotopy_groups`) and serves as the oracle;
* :class:`NormalizedModel` builds the normalised complex of F(K(C))
  directly for combinatorial functors. A basis element of F(K(C)_m) is
  degenerate exactly when every summand it touches factors through the
  same codegeneracy, i.e. when the jump sets of its summands fail to cover
  {0, ..., m-1}. Only the covering ones are enumerated.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass, field
from itertools import combinations

from .budget import Budget
from .chain import FreeChainComplex, complex_homology
from .errors import InsufficientTruncation, NotSaturated
from .functors.base import PolyFunctor, add_into
from .zlinalg import FgAbGroup, IntMatrix, elementary_divisors, hstack, smith_normal_form


def surjections(m: int, k: int) -> list[tuple[int, ...]]:
    """Order-preserving surjections [m] -> [k] as value tuples, lexicographically sorted."""
    out = []
    for jumps in combinations(range(m), k):
        vals = []
        level = 0
        js = set(jumps)
        for t in range(m + 1):
            if t > 0 and (t - 1) in js:
                level += 1
            vals.append(level)
        out.append(tuple(vals))
    out.sort()
    return out


def jump_mask(s: tuple[int, ...]) -> int:
    """Bit j set when s(j) != s(j+1)."""
    mask = 0
    for j in range(len(s) - 1):
        if s[j] != s[j + 1]:
            mask |= 1 << j
    return mask


class KComplex:
    """Combinatorial description of K(C) for a complex C concentrated in degrees >= 0."""

    def __init__(self, c: FreeChainComplex):
        if c.lo < 0:
            raise ValueError("K(C) needs a complex concentrated in non-negative degrees")
        self.c = c
        self._labels: dict[int, list] = {}
        self._faces: dict[tuple[int, int], dict] = {}

    def summands(self, m: int) -> list[tuple[tuple[int, ...], int]]:
        """(surjection, degree) pairs contributing to level m."""
        out = []
        for k in range(self.c.lo, min(m, self.c.hi) + 1):
            if self.c.rank(k):
                out.extend((s, k) for s in surjections(m, k))
        out.sort()
        return out

    def labels(self, m: int) -> list:
        got = self._labels.get(m)
        if got is None:
            got = []
            for s, k in self.summands(m):
                got.extend((s, c) for c in range(self.c.rank(k)))
            got.sort()
            self._labels[m] = got
        return got

    def rank(self, m: int) -> int:
        from math import comb

        return sum(comb(m, k) * self.c.rank(k) for k in range(self.c.lo, min(m, self.c.hi) + 1))

    def face_image(self, i: int, label) -> dict:
        s, c = label
        t = s[:i] + s[i + 1:]
        v = s[i]
        if v in t:
            return {(t, c): 1}
        if v != 0:
            return {}
        k = s[-1]
        t2 = tuple(x - 1 for x in t)
        return {(t2, c2): val for c2, val in self.c.d(k).column(c).items()}

    def face_map(self, m: int, i: int):
        """Label map for d_i out of level m, memoised."""
        key = (m, i)
        memo = self._faces.get(key)
        if memo is None:
            memo = self._faces[key] = {}

        def fmap(label):
            got = memo.get(label)
            if got is None:
                got = memo[label] = self.face_image(i, label)
            return got

        return fmap

    @staticmethod
    def degeneracy_image(j: int, label):
        s, c = label
        return (s[:j + 1] + s[j:], c)


@dataclass
class SimplicialFreeAbGroup:
    """Truncated simplicial free abelian group with explicit matrices.

    ``faces[m][i]`` maps level m to m-1 (m >= 1); ``degeneracies[m][j]`` maps
    level m to m+1 (m < max_level).
    """

    max_level: int
    ranks: list[int]
    faces: dict[int, list[IntMatrix]]
    degeneracies: dict[int, list[IntMatrix]]
    labels: dict[int, list] = field(default_factory=dict, repr=False)

    def check_identities(self) -> list[str]:
        """All violated simplicial identities (empty when the object is simplicial)."""
        bad = []
        d, s, top = self.faces, self.degeneracies, self.max_level
        for m in range(2, top + 1):
            for i in range(m):
                for j in range(i + 1, m + 1):
                    if d[m - 1][i] @ d[m][j] != d[m - 1][j - 1] @ d[m][i]:
                        bad.append(f"d{i} d{j} = d{j - 1} d{i} at level {m}")
        for m in range(0, top):
            for i in range(m + 2):
                for j in range(m + 1):
                    lhs = d[m + 1][i] @ s[m][j]
                    if i < j:
                        rhs = s[m - 1][j - 1] @ d[m][i] if m >= 1 else None
                    elif i in (j, j + 1):
                        rhs = IntMatrix.identity(self.ranks[m])
                    else:
                        rhs = s[m - 1][j] @ d[m][i - 1] if m >= 1 else None
                    if rhs is not None and lhs != rhs:
                        bad.append(f"d{i} s{j} at level {m}")
        for m in range(0, top - 1):
            for i in range(m + 1):
                for j in range(i, m + 1):
                    if s[m + 1][i] @ s[m][j] != s[m + 1][j + 1] @ s[m][i]:
                        bad.append(f"s{i} s{j} = s{j + 1} s{i} at level {m}")
        return bad


def dold_kan_K(c: FreeChainComplex, max_level: int) -> SimplicialFreeAbGroup:
    """Explicit matrices for K(C) up to ``max_level``."""
    kc = KComplex(c)
    labels = {m: kc.labels(m) for m in range(max_level + 1)}
    index = {m: {lab: t for t, lab in enumerate(labels[m])} for m in labels}
    faces: dict[int, list[IntMatrix]] = {}
    degens: dict[int, list[IntMatrix]] = {}
    for m in range(1, max_level + 1):
        mats = []
        for i in range(m + 1):
            cols = [{index[m - 1][k]: v for k, v in kc.face_image(i, lab).items()} for lab in labels[m]]
            mats.append(IntMatrix(len(labels[m - 1]), len(labels[m]), cols))
        faces[m] = mats
    for m in range(max_level):
        mats = []
        for j in range(m + 1):
            cols = [{index[m + 1][kc.degeneracy_image(j, lab)]: 1} for lab in labels[m]]
            mats.append(IntMatrix(len(labels[m + 1]), len(labels[m]), cols))
        degens[m] = mats
    return SimplicialFreeAbGroup(max_level, [len(labels[m]) for m in range(max_level + 1)],
                                 faces, degens, labels)


def apply_functor_levelwise(f: PolyFunctor, x: SimplicialFreeAbGroup,
                            budget: Budget | None = None) -> SimplicialFreeAbGroup:
    """F applied to every level, face and degeneracy."""
    budget = budget or Budget()
    ranks = []
    for m, r in enumerate(x.ranks):
        fr = f.rank(r)
        budget.check(fr, level=m)
        ranks.append(fr)
    faces = {m: [f.map_of(d) for d in ds] for m, ds in x.faces.items()}
    degens = {m: [f.map_of(s) for s in ss] for m, ss in x.degeneracies.items()}
    return SimplicialFreeAbGroup(x.max_level, ranks, faces, degens)


def moore_complex_unnormalized(x: SimplicialFreeAbGroup, top: int) -> FreeChainComplex:
    """Alternating face sums on the full levels 0..top."""
    diffs = {}
    for m in range(1, top + 1):
        total = None
        for i, d in enumerate(x.faces[m]):
            term = d if i % 2 == 0 else -d
            total = term if total is None else total + term
        diffs[m] = total
    return FreeChainComplex(0, tuple(x.ranks[: top + 1]), diffs)


class _DegenerateReducer:
    """Reduction modulo the degenerate sublattice at one level.

    Generators are put in echelon form with unit pivots; the coordinates
    off the pivots then give a basis of the quotient.
    """

    def __init__(self, n: int, gens: list[dict[int, int]]):
        self.n = n
        self.rows: list[tuple[int, dict[int, int]]] = []
        pivots = set()
        for g in gens:
            v = self.reduce(g)
            if not v:
                continue
            p = min((r for r, c in v.items() if c in (1, -1)), default=None)
            if p is None:
                raise _NonUnitPivot
            if v[p] == -1:
                v = {r: -c for r, c in v.items()}
            self.rows.append((p, v))
            pivots.add(p)
        self.free = [r for r in range(n) if r not in pivots]
        self.position = {r: t for t, r in enumerate(self.free)}

    def reduce(self, vec: dict[int, int]) -> dict[int, int]:
        v = dict(vec)
        for p, row in self.rows:
            c = v.get(p)
            if c:
                for r, x in row.items():
                    y = v.get(r, 0) - c * x
                    if y:
                        v[r] = y
                    else:
                        v.pop(r, None)
        return v

    def project(self, vec: dict[int, int]) -> dict[int, int]:
        pos = self.position
        return {pos[r]: c for r, c in self.reduce(vec).items()}


class _NonUnitPivot(Exception):
    pass


def _quotient_by_snf(x: SimplicialFreeAbGroup, m: int):
    """Projection P (kills degenerates) and a section L of it at level m."""
    n = x.ranks[m]
    gens = hstack(x.degeneracies[m - 1])
    snf = smith_normal_form(gens)
    diag = [d for d in snf.diagonal() if d]
    if any(d != 1 for d in diag):
        raise NotSaturated(f"degenerate sublattice at level {m} is not a direct summand")
    r = len(diag)
    proj = snf.U.select_rows(range(r, n))
    inv = smith_normal_form(snf.U)
    section = (inv.V @ inv.U).select_columns(range(r, n))
    return proj, section


def moore_complex_normalized(x: SimplicialFreeAbGroup, top: int) -> FreeChainComplex:
    """Alternating face sums on the quotient by the degenerate sublattices."""
    full = moore_complex_unnormalized(x, top)
    reducers: list = []
    for m in range(top + 1):
        n = x.ranks[m]
        gens = [] if m == 0 else [col for s in x.degeneracies[m - 1] for col in s.columns()]
        try:
            reducers.append(_DegenerateReducer(n, gens))
        except _NonUnitPivot:
            reducers.append(_quotient_by_snf(x, m))
    ranks = tuple(len(r.free) if isinstance(r, _DegenerateReducer) else r[0].rows
                  for r in reducers)
    diffs = {}
    for m in range(1, top + 1):
        src, tgt, d = reducers[m], reducers[m - 1], full.d(m)
        if isinstance(src, _DegenerateReducer):
            section = IntMatrix(d.cols, len(src.free), [{r: 1} for r in src.free])
        else:
            section = src[1]
        image = d @ section
        if isinstance(tgt, _DegenerateReducer):
            diffs[m] = IntMatrix(ranks[m - 1], ranks[m], [tgt.project(c) for c in image.columns()])
        else:
            diffs[m] = tgt[0] @ image
    return FreeChainComplex(0, ranks, diffs)


def homotopy_groups(x: SimplicialFreeAbGroup, i_max: int,
                    method: str = "normalized") -> dict[int, FgAbGroup]:
    """pi_i for i <= i_max, from the Moore complex (degenerates quotiented out by default)."""
    if x.max_level < i_max + 1:
        raise InsufficientTruncation(
            f"need levels up to {i_max + 1}, object is truncated at {x.max_level}")
    top = i_max + 1
    if method == "normalized":
        cx = moore_complex_normalized(x, top)
    elif method == "unnormalized":
        cx = moore_complex_unnormalized(x, top)
    else:
        raise ValueError(f"unknown method {method!r}")
    hom = complex_homology(cx)
    return {i: hom[i] for i in range(i_max + 1)}


class NormalizedModel:
    """The normalised complex N F K(C) for a combinatorial functor F, built directly."""

    def __init__(self, f: PolyFunctor, kc: KComplex, budget: Budget | None = None):
        if not f.combinatorial:
            raise TypeError(f"{f} is not combinatorial")
        self.f = f
        self.kc = kc
        self.budget = budget or Budget()
        self._basis: dict[int, list] = {}
        self._index: dict[int, dict] = {}

    def _covering_sets(self, m: int, summands: list, masks: list[int]) -> Iterator[tuple[int, ...]]:
        full = (1 << m) - 1
        d = self.f.degree
        maxjump = max((bin(x).count("1") for x in masks), default=0)
        covers: dict[int, list[int]] = {}
        for idx, mask in enumerate(masks):
            for p in range(m):
                if mask >> p & 1:
                    covers.setdefault(p, []).append(idx)
        last_cover = {p: lst[-1] for p, lst in covers.items()}
        n = len(summands)

        def rec(start: int, chosen: list[int], cov: int):
            if cov == full:
                yield tuple(chosen)
            left = d - len(chosen)
            if left == 0:
                return
            need = full & ~cov
            if need:
                if bin(need).count("1") > left * maxjump:
                    return
                p = (need & -need).bit_length() - 1
                if last_cover.get(p, -1) < start:
                    return
                if left == 1:
                    for idx in covers[p]:
                        if idx >= start and masks[idx] & need == need:
                            yield from rec(idx + 1, chosen + [idx], cov | masks[idx])
                    return
            for idx in range(start, n):
                yield from rec(idx + 1, chosen + [idx], cov | masks[idx])

        yield from rec(0, [], 0)

    def basis(self, m: int) -> list:
        got = self._basis.get(m)
        if got is not None:
            return got
        f, kc = self.f, self.kc
        summands = kc.summands(m)
        masks = [jump_mask(s) for s, _ in summands]
        keys = []
        for chosen in self._covering_sets(m, summands, masks):
            sig = {summands[i][0] for i in chosen}
            labels = sorted((summands[i][0], c) for i in chosen
                            for c in range(kc.c.rank(summands[i][1])))
            for key in f.basis_labels(labels):
                if {lab[0] for lab in f.support(key)} == sig:
                    keys.append(key)
            if len(keys) > self.budget.cap:
                self.budget.check(len(keys), level=m)
        keys.sort()
        self.budget.check(len(keys), level=m)
        self._basis[m] = keys
        self._index[m] = {k: t for t, k in enumerate(keys)}
        return keys

    def index(self, m: int) -> dict:
        self.basis(m)
        return self._index[m]

    def differential(self, m: int) -> IntMatrix:
        """d_m: N_m -> N_{m-1} as the alternating face sum modulo degenerates."""
        src = self.basis(m)
        tgt = self.index(m - 1)
        faces = [self.kc.face_map(m, i) for i in range(m + 1)]
        apply = self.f.apply
        cols = []
        for key in src:
            acc: dict = {}
            for i, fmap in enumerate(faces):
                sign = -1 if i % 2 else 1
                for k2, v in apply(fmap, key).items():
                    t = tgt.get(k2)
                    if t is not None:
                        add_into(acc, t, sign * v)
            cols.append(acc)
        return IntMatrix(len(tgt), len(src), cols)

    def complex(self, top: int) -> FreeChainComplex:
        ranks = tuple(len(self.basis(m)) for m in range(top + 1))
        diffs = {m: self.differential(m) for m in range(1, top + 1)}
        return FreeChainComplex(0, ranks, diffs)


def normalized_chain_map(trans, source: NormalizedModel, target: NormalizedModel,
                         top: int) -> dict[int, IntMatrix]:
    """Components of a natural transformation between two normalised models."""
    out = {}
    for m in range(top + 1):
        tgt = target.index(m)
        cols = []
        for key in source.basis(m):
            cols.append({tgt[k]: v for k, v in trans.apply(key).items() if k in tgt})
        out[m] = IntMatrix(len(tgt), len(source.basis(m)), cols)
    return out


def homotopy_from_complex(cx: FreeChainComplex, i_max: int) -> dict[int, FgAbGroup]:
    """Homology in degrees 0..i_max of a complex whose top degree is at least i_max + 1."""
    info = {k: elementary_divisors(cx.d(k)) for k in range(0, i_max + 2)}
    out = {}
    for i in range(i_max + 1):
        out[i] = FgAbGroup(cx.rank(i) - info[i][0] - info[i + 1][0], tuple(info[i + 1][1]))
    return out
