"""Sparse arbitrary-precision integer matrices.

Entries are kept column-wise as ``{row: value}`` dictionaries because every
producer in the engine (functor maps, face maps, differentials) naturally
emits the image of one basis vector at a time.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence


class IntMatrix:
    """An immutable ``rows x cols`` integer matrix with sparse columns."""

    __slots__ = ("rows", "cols", "_cols", "_hash")

    def __init__(self, rows: int, cols: int, columns: Sequence[Mapping[int, int]] | None = None):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        self.rows = rows
        self.cols = cols
        if columns is None:
            self._cols: tuple[dict[int, int], ...] = tuple({} for _ in range(cols))
        else:
            if len(columns) != cols:
                raise ValueError(f"expected {cols} columns, got {len(columns)}")
            built = []
            for col in columns:
                clean = {}
                for i, v in col.items():
                    if v:
                        if not 0 <= i < rows:
                            raise IndexError(f"row index {i} outside 0..{rows - 1}")
                        clean[i] = int(v)
                built.append(clean)
            self._cols = tuple(built)
        self._hash = None

    # construction helpers

    @classmethod
    def _trusted(cls, rows: int, cols: int, columns: tuple[dict[int, int], ...]) -> IntMatrix:
        # caller guarantees clean, in-range, nonzero entries
        m = cls.__new__(cls)
        m.rows = rows
        m.cols = cols
        m._cols = columns
        m._hash = None
        return m

    @classmethod
    def from_dense(cls, data: Sequence[Sequence[int]], rows: int | None = None,
                   cols: int | None = None) -> IntMatrix:
        nr = len(data) if rows is None else rows
        nc = (len(data[0]) if data else 0) if cols is None else cols
        columns = [dict() for _ in range(nc)]
        for i, row in enumerate(data):
            if len(row) != nc:
                raise ValueError("ragged dense matrix")
            for j, v in enumerate(row):
                if v:
                    columns[j][i] = int(v)
        return cls._trusted(nr, nc, tuple(columns))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls._trusted(n, n, tuple({j: 1} for j in range(n)))

    @classmethod
    def diagonal(cls, entries: Sequence[int], rows: int | None = None,
                 cols: int | None = None) -> IntMatrix:
        k = len(entries)
        nr = k if rows is None else rows
        nc = k if cols is None else cols
        columns = [dict() for _ in range(nc)]
        for j, v in enumerate(entries):
            if v:
                columns[j][j] = int(v)
        return cls(nr, nc, columns)

    @classmethod
    def from_columns(cls, rows: int, columns: Sequence[Mapping[int, int]]) -> IntMatrix:
        return cls(rows, len(columns), columns)

    # access

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"entry ({i}, {j}) outside a {self.rows}x{self.cols} matrix")
        return self._cols[j].get(i, 0)

    def column(self, j: int) -> Mapping[int, int]:
        if not 0 <= j < self.cols:
            raise IndexError(f"column {j} outside 0..{self.cols - 1}")
        return self._cols[j]

    def columns(self) -> tuple[dict[int, int], ...]:
        return self._cols

    def row_dicts(self) -> list[dict[int, int]]:
        out: list[dict[int, int]] = [dict() for _ in range(self.rows)]
        for j, col in enumerate(self._cols):
            for i, v in col.items():
                out[i][j] = v
        return out

    def nnz(self) -> int:
        return sum(len(c) for c in self._cols)

    def is_zero(self) -> bool:
        return all(not c for c in self._cols)

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for j, col in enumerate(self._cols):
            for i, v in col.items():
                out[i][j] = v
        return out

    # algebra

    def transpose(self) -> IntMatrix:
        columns: list[dict[int, int]] = [dict() for _ in range(self.rows)]
        for j, col in enumerate(self._cols):
            for i, v in col.items():
                columns[i][j] = v
        return IntMatrix._trusted(self.cols, self.rows, tuple(columns))

    @property
    def T(self) -> IntMatrix:
        return self.transpose()

    def apply(self, vec: Mapping[int, int]) -> dict[int, int]:
        """Image of a sparse vector ``{col: coeff}``."""
        out: dict[int, int] = {}
        for j, c in vec.items():
            for i, v in self._cols[j].items():
                s = out.get(i, 0) + c * v
                if s:
                    out[i] = s
                else:
                    out.pop(i, None)
        return out

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        return IntMatrix._trusted(self.rows, other.cols,
                                  tuple(self.apply(col) for col in other._cols))

    def _combine(self, other: IntMatrix, sign: int) -> IntMatrix:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        columns = []
        for a, b in zip(self._cols, other._cols):
            c = dict(a)
            for i, v in b.items():
                s = c.get(i, 0) + sign * v
                if s:
                    c[i] = s
                else:
                    c.pop(i, None)
            columns.append(c)
        return IntMatrix._trusted(self.rows, self.cols, tuple(columns))

    def __add__(self, other: IntMatrix) -> IntMatrix:
        return self._combine(other, 1)

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        return self._combine(other, -1)

    def __neg__(self) -> IntMatrix:
        return self.scale(-1)

    def scale(self, k: int) -> IntMatrix:
        if k == 0:
            return IntMatrix(self.rows, self.cols)
        return IntMatrix._trusted(self.rows, self.cols,
                                  tuple({i: k * v for i, v in c.items()} for c in self._cols))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self._cols == other._cols

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rows, self.cols,
                               tuple(tuple(sorted(c.items())) for c in self._cols)))
        return self._hash

    def __repr__(self) -> str:
        if self.rows * self.cols <= 64:
            return f"IntMatrix({self.to_dense()!r})"
        return f"IntMatrix<{self.rows}x{self.cols}, nnz={self.nnz()}>"

    def select_columns(self, indices: Iterable[int]) -> IntMatrix:
        cols = tuple(self._cols[j] for j in indices)
        return IntMatrix._trusted(self.rows, len(cols), cols)

    def select_rows(self, indices: Sequence[int]) -> IntMatrix:
        where = {i: k for k, i in enumerate(indices)}
        cols = tuple({where[i]: v for i, v in c.items() if i in where} for c in self._cols)
        return IntMatrix._trusted(len(indices), self.cols, cols)


def hstack(blocks: Sequence[IntMatrix], rows: int | None = None) -> IntMatrix:
    if not blocks:
        return IntMatrix(rows or 0, 0)
    nr = blocks[0].rows
    if any(b.rows != nr for b in blocks):
        raise ValueError("hstack needs equal row counts")
    cols = tuple(c for b in blocks for c in b.columns())
    return IntMatrix._trusted(nr, len(cols), cols)


def vstack(blocks: Sequence[IntMatrix], cols: int | None = None) -> IntMatrix:
    if not blocks:
        return IntMatrix(0, cols or 0)
    nc = blocks[0].cols
    if any(b.cols != nc for b in blocks):
        raise ValueError("vstack needs equal column counts")
    columns: list[dict[int, int]] = [dict() for _ in range(nc)]
    offset = 0
    for b in blocks:
        for j, col in enumerate(b.columns()):
            for i, v in col.items():
                columns[j][i + offset] = v
        offset += b.rows
    return IntMatrix._trusted(offset, nc, tuple(columns))


def block_diag(blocks: Sequence[IntMatrix]) -> IntMatrix:
    nr = sum(b.rows for b in blocks)
    columns: list[dict[int, int]] = []
    offset = 0
    for b in blocks:
        for col in b.columns():
            columns.append({i + offset: v for i, v in col.items()})
        offset += b.rows
    return IntMatrix._trusted(nr, len(columns), tuple(columns))


def kron(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    """Kronecker product; basis pairs ordered lexicographically."""
    columns = []
    for ca in a.columns():
        for cb in b.columns():
            columns.append({i * b.rows + k: va * vb for i, va in ca.items() for k, vb in cb.items()})
    return IntMatrix._trusted(a.rows * b.rows, a.cols * b.cols, tuple(columns))
