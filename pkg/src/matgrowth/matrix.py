"""Exact nonnegative integer matrices, matrix families and word products.

Entries are plain Python ints, so products never overflow. Indices are
0-based throughout the code.
"""
from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Iterable, Sequence

from .exceptions import (
    DimensionMismatch,
    EmptySet,
    EmptySubset,
    IndexOutOfRange,
    InputError,
    NegativeEntry,
    NonSquare,
)

Entries = tuple[tuple[int, ...], ...]
Word = tuple[int, ...]


def _matmul(a: Entries, b: Entries) -> Entries:
    cols = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a
    )


def _identity_entries(n: int) -> Entries:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class Matrix:
    """Square matrix with nonnegative integer entries of unbounded size."""

    entries: Entries

    def __post_init__(self):
        n = len(self.entries)
        if n == 0:
            raise NonSquare("matrix must have at least one row")
        for r, row in enumerate(self.entries):
            if len(row) != n:
                raise NonSquare(f"row {r} has {len(row)} entries, expected {n}")
            for c, v in enumerate(row):
                if v < 0:
                    raise NegativeEntry(r, c, v)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "Matrix":
        return cls(_coerce_grid(rows))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(_identity_entries(n))

    @classmethod
    def zeros(cls, n: int) -> "Matrix":
        return cls(tuple((0,) * n for _ in range(n)))

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        return self.entries[i][j]

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return multiply(self, other)

    def transpose(self) -> "Matrix":
        return Matrix(tuple(zip(*self.entries)))

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.entries)

    def tolist(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    def __repr__(self):
        return f"Matrix({self.tolist()})"


@dataclass(frozen=True)
class MatrixSet:
    """Finite, ordered family of same-size matrices.

    Order is significant: words refer to members by position.
    """

    matrices: tuple[Matrix, ...]

    def __post_init__(self):
        if not self.matrices:
            raise EmptySet("a matrix set needs at least one matrix")
        n = self.matrices[0].n
        for k, m in enumerate(self.matrices):
            if m.n != n:
                raise DimensionMismatch(
                    f"matrix {k} is {m.n}x{m.n}, expected {n}x{n}"
                )

    @property
    def n(self) -> int:
        return self.matrices[0].n

    def __len__(self) -> int:
        return len(self.matrices)

    def __getitem__(self, k: int) -> Matrix:
        return self.matrices[k]

    def __iter__(self):
        return iter(self.matrices)

    def transpose(self) -> "MatrixSet":
        return MatrixSet(tuple(m.transpose() for m in self.matrices))

    def permute(self, perm: Sequence[int]) -> "MatrixSet":
        """Relabel nodes so that new node ``p`` is old node ``perm[p]``."""
        return MatrixSet(
            tuple(
                Matrix(tuple(tuple(m.entries[a][b] for b in perm) for a in perm))
                for m in self.matrices
            )
        )

    def tolist(self) -> list[list[list[int]]]:
        return [m.tolist() for m in self.matrices]


def _coerce_entry(v, r, c, k=None) -> int:
    if isinstance(v, bool):
        raise InputError(f"boolean entry at row {r}, col {c}")
    try:
        value = operator.index(v)
    except TypeError:
        raise InputError(f"non-integer entry {v!r} at row {r}, col {c}") from None
    if value < 0:
        raise NegativeEntry(r, c, value, k)
    return value


def _coerce_grid(rows, k=None) -> Entries:
    grid = tuple(tuple(row) for row in rows)
    n = len(grid)
    if n == 0:
        raise NonSquare("empty entry grid" + (f" for matrix {k}" if k is not None else ""))
    for r, row in enumerate(grid):
        if len(row) != n:
            where = f"matrix {k}: " if k is not None else ""
            raise NonSquare(f"{where}row {r} has {len(row)} entries, expected {n}")
    return tuple(
        tuple(_coerce_entry(v, r, c, k) for c, v in enumerate(row))
        for r, row in enumerate(grid)
    )


def validate_set(grids, n: int | None = None) -> MatrixSet:
    """Build a :class:`MatrixSet` from a list of row-major entry grids.

    ``n`` optionally pins the expected dimension. Raises ``NonSquare``,
    ``NegativeEntry``, ``DimensionMismatch`` or ``EmptySet``.
    """
    grids = list(grids)
    if not grids:
        raise EmptySet("a matrix set needs at least one matrix")
    matrices = []
    for k, g in enumerate(grids):
        entries = _coerce_grid(g, k)
        if n is not None and len(entries) != n:
            raise DimensionMismatch(
                f"matrix {k} is {len(entries)}x{len(entries)}, expected {n}x{n}"
            )
        matrices.append(Matrix(entries))
    return MatrixSet(tuple(matrices))


def check_matrix_set(X) -> MatrixSet:
    """Accept a MatrixSet, a single Matrix, a 2-d grid, a list of grids or a
    3-d integer array and return a validated :class:`MatrixSet`."""
    if isinstance(X, MatrixSet):
        return X
    if isinstance(X, Matrix):
        return MatrixSet((X,))
    if hasattr(X, "ndim") and hasattr(X, "tolist"):
        if X.ndim == 2:
            return validate_set([X.tolist()])
        if X.ndim == 3:
            return validate_set(X.tolist())
        raise InputError(f"expected a 2-d or 3-d array, got ndim={X.ndim}")
    items = list(X)
    if items and all(isinstance(m, Matrix) for m in items):
        return MatrixSet(tuple(items))
    # a bare grid has integer rows; a family has rows of rows
    if items and all(_is_row(r) for r in items):
        return validate_set([items])
    return validate_set(items)


def _is_row(r) -> bool:
    try:
        return all(not hasattr(v, "__len__") for v in r)
    except TypeError:
        return False


def multiply(a: Matrix, b: Matrix) -> Matrix:
    if a.n != b.n:
        raise DimensionMismatch(f"cannot multiply {a.n}x{a.n} by {b.n}x{b.n}")
    return Matrix(_matmul(a.entries, b.entries))


def _check_word(S: MatrixSet, word) -> Word:
    word = tuple(word)
    for pos, k in enumerate(word):
        if not 0 <= k < len(S):
            raise IndexOutOfRange(
                f"word position {pos} references matrix {k}; set has {len(S)}"
            )
    return word


def product_of_word(S: MatrixSet, word) -> Matrix:
    """Left-to-right product ``S[w0] @ S[w1] @ ...``; the empty word gives I."""
    word = _check_word(S, word)
    acc = _identity_entries(S.n)
    for k in word:
        acc = _matmul(acc, S[k].entries)
    return Matrix(acc)


def row_of_product(S: MatrixSet, word, i: int) -> tuple[int, ...]:
    """Row ``i`` of ``product_of_word(S, word)`` in O(len(word) * n^2)."""
    word = _check_word(S, word)
    n = S.n
    if not 0 <= i < n:
        raise IndexOutOfRange(f"row {i} out of range for n={n}")
    row = [0] * n
    row[i] = 1
    for k in word:
        m = S[k].entries
        nxt = [0] * n
        for a, x in enumerate(row):
            if x:
                for b, y in enumerate(m[a]):
                    if y:
                        nxt[b] += x * y
        row = nxt
    return tuple(row)


def sum_norm(a: Matrix) -> int:
    return sum(sum(row) for row in a.entries)


def restrict(a: Matrix, nodes: Iterable[int]) -> Matrix:
    """Principal submatrix on ``nodes`` (kept in ascending order)."""
    idx = sorted(set(nodes))
    if not idx:
        raise EmptySubset("restriction needs at least one node")
    if idx[0] < 0 or idx[-1] >= a.n:
        raise IndexOutOfRange(f"restriction nodes {idx} out of range for n={a.n}")
    return Matrix(tuple(tuple(a.entries[r][c] for c in idx) for r in idx))
