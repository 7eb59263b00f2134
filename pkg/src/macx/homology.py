"""Exact rational ranks and Betti numbers of finite chain complexes.

Matrices are sparse, column-major, with Python ``int`` entries.  Ranks come
from fraction-free column reduction: every column is cleared against earlier
columns sharing its lowest nonzero row, scaling by the pivot instead of
dividing, and dividing out the column content afterwards to keep entries
small.  No floating point is involved anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Mapping, Sequence

import numpy as np
import scipy.sparse as sp

from .complex_core import SimplicialComplex

Column = dict[int, int]


class CompositionNonzero(ArithmeticError):
    """D_{p-1} D_p != 0: the chain complex was built wrong."""


class IntMatrix:
    """Sparse integer matrix in compressed-column form.

    ``indptr``, ``indices`` and ``data`` are plain lists so every entry is an
    arbitrary-precision Python ``int``.
    """

    __slots__ = ("rows", "cols", "indptr", "indices", "data")

    def __init__(self, rows: int, cols: int, columns: Sequence[Column] | None = None):
        if columns is None:
            columns = [{} for _ in range(cols)]
        if len(columns) != cols:
            raise ValueError(f"expected {cols} columns, got {len(columns)}")
        indptr = [0]
        indices: list[int] = []
        data: list[int] = []
        for col in columns:
            for r in sorted(col):
                if not 0 <= r < rows:
                    raise ValueError(f"row index {r} outside 0..{rows - 1}")
                v = int(col[r])
                if v:
                    indices.append(r)
                    data.append(v)
            indptr.append(len(indices))
        self.rows, self.cols = rows, cols
        self.indptr, self.indices, self.data = indptr, indices, data

    @classmethod
    def from_csc(cls, rows: int, cols: int, indptr: list[int], indices: list[int],
                 data: list[int]) -> "IntMatrix":
        """Adopt compressed-column lists as they are, without validation."""
        out = cls.__new__(cls)
        out.rows, out.cols = rows, cols
        out.indptr, out.indices, out.data = indptr, indices, data
        return out

    @classmethod
    def from_dense(cls, data: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        rows = len(data)
        if cols is None:
            cols = len(data[0]) if rows else 0
        columns: list[Column] = [{} for _ in range(cols)]
        for i, row in enumerate(data):
            for j, v in enumerate(row):
                if v:
                    columns[j][i] = int(v)
        return cls(rows, cols, columns)

    def column(self, j: int) -> Column:
        a, b = self.indptr[j], self.indptr[j + 1]
        return dict(zip(self.indices[a:b], self.data[a:b]))

    @property
    def columns(self) -> list[Column]:
        return [self.column(j) for j in range(self.cols)]

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for j in range(self.cols):
            for i, v in self.column(j).items():
                out[i][j] = v
        return out

    @property
    def nnz(self) -> int:
        return len(self.data)

    def max_abs(self) -> int:
        return max((abs(v) for v in self.data), default=0)

    def to_scipy(self) -> sp.csc_matrix:
        return sp.csc_matrix(
            (np.array(self.data, dtype=np.int64), np.array(self.indices, dtype=np.int64),
             np.array(self.indptr, dtype=np.int64)),
            shape=(self.rows, self.cols))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        left = self.columns
        out = []
        for col in other.columns:
            acc: Column = {}
            for k, b in col.items():
                for i, a in left[k].items():
                    v = acc.get(i, 0) + a * b
                    if v:
                        acc[i] = v
                    else:
                        acc.pop(i, None)
            out.append(acc)
        return IntMatrix(self.rows, other.cols, out)

    def is_zero(self) -> bool:
        return not any(self.data)

    def permuted(self, row_perm: Sequence[int], col_perm: Sequence[int]) -> "IntMatrix":
        """Matrix with row i moved to ``row_perm[i]`` and column j to ``col_perm[j]``."""
        columns: list[Column] = [{} for _ in range(self.cols)]
        for j, col in enumerate(self.columns):
            columns[col_perm[j]] = {row_perm[i]: v for i, v in col.items()}
        return IntMatrix(self.rows, self.cols, columns)

    def __repr__(self) -> str:
        return f"IntMatrix({self.rows}x{self.cols}, nnz={self.nnz})"


def _reduce_columns(m: IntMatrix, skip: set[int] | frozenset[int] = frozenset()) -> dict[int, Column]:
    """Column reduction; returns ``{lowest row: reduced column}`` for nonzero results."""
    pivots: dict[int, Column] = {}
    indptr, indices, data = m.indptr, m.indices, m.data
    for j in range(m.cols):
        if j in skip:
            continue
        a0, b0 = indptr[j], indptr[j + 1]
        if a0 == b0:
            continue
        col = dict(zip(indices[a0:b0], data[a0:b0]))
        while col:
            low = max(col)
            other = pivots.get(low)
            if other is None:
                pivots[low] = col
                break
            a = other[low]
            b = col[low]
            if a == 1 or a == -1:
                f = a * b
                for k, v in other.items():
                    nv = col.get(k, 0) - f * v
                    if nv:
                        col[k] = nv
                    else:
                        del col[k]
            else:
                g = gcd(a, b)
                a //= g
                b //= g
                for k in col:
                    col[k] *= a
                for k, v in other.items():
                    nv = col.get(k, 0) - b * v
                    if nv:
                        col[k] = nv
                    else:
                        del col[k]
                content = 0
                for v in col.values():
                    content = gcd(content, v)
                    if content == 1:
                        break
                if content > 1:
                    for k in col:
                        col[k] //= content
    return pivots


def rank_exact(m: IntMatrix) -> int:
    """Rank over the rationals."""
    return len(_reduce_columns(m))


@dataclass(frozen=True)
class BettiTable:
    """Nonzero ranks by degree; ``hrk`` is their total."""

    ranks: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {int(d): int(r) for d, r in sorted(self.ranks.items()) if r}
        if any(r < 0 for r in clean.values()):
            raise ValueError(f"negative Betti number in {clean}")
        object.__setattr__(self, "ranks", clean)

    @property
    def hrk(self) -> int:
        return sum(self.ranks.values())

    def __getitem__(self, degree: int) -> int:
        return self.ranks.get(degree, 0)

    def euler(self) -> int:
        return sum((-1) ** (d % 2) * r for d, r in self.ranks.items())

    def to_json(self) -> dict[str, int]:
        return {str(d): r for d, r in self.ranks.items()}

    def __hash__(self):
        return hash(tuple(self.ranks.items()))

    def __eq__(self, other):
        if isinstance(other, BettiTable):
            return self.ranks == other.ranks
        if isinstance(other, Mapping):
            return self.ranks == {d: r for d, r in other.items() if r}
        return NotImplemented

    def __repr__(self):
        return f"BettiTable({self.ranks})"


def convolve(a: BettiTable, b: BettiTable, shift: int = 0) -> BettiTable:
    """Degree-wise convolution (Künneth over a field), shifted by ``shift``."""
    out: dict[int, int] = {}
    for i, x in a.ranks.items():
        for j, y in b.ranks.items():
            out[i + j + shift] = out.get(i + j + shift, 0) + x * y
    return BettiTable(out)


class ChainComplex:
    """Graded boundary matrices ``D_p: C_p -> C_{p-1}``.

    ``sizes`` maps each degree to the basis size; ``boundaries[p]`` is absent
    when either side is zero-dimensional.
    """

    def __init__(self, sizes: Mapping[int, int], boundaries: Mapping[int, IntMatrix] | None = None):
        self.sizes = {int(p): int(n) for p, n in sorted(sizes.items())}
        self.boundaries = dict(boundaries or {})
        for p, d in self.boundaries.items():
            if d.cols != self.sizes.get(p, 0) or d.rows != self.sizes.get(p - 1, 0):
                raise ValueError(
                    f"D_{p} is {d.rows}x{d.cols}, expected "
                    f"{self.sizes.get(p - 1, 0)}x{self.sizes.get(p, 0)}")

    @property
    def bottom(self) -> int:
        return min(self.sizes) if self.sizes else 0

    @property
    def top(self) -> int:
        return max(self.sizes) if self.sizes else -1

    def boundary(self, p: int) -> IntMatrix:
        d = self.boundaries.get(p)
        if d is None:
            return IntMatrix(self.sizes.get(p - 1, 0), self.sizes.get(p, 0))
        return d

    def euler(self) -> int:
        return sum((-1) ** (p % 2) * n for p, n in self.sizes.items())

    def check_square_zero(self) -> None:
        """Raise :class:`CompositionNonzero` unless every D_{p-1} D_p vanishes."""
        for p in sorted(self.boundaries):
            lower = self.boundaries.get(p - 1)
            if lower is None:
                continue
            upper = self.boundaries[p]
            if lower.max_abs() * upper.max_abs() * max(lower.rows, 1) < 2 ** 62:
                prod = lower.to_scipy() @ upper.to_scipy()
                ok = prod.count_nonzero() == 0
            else:
                ok = (lower @ upper).is_zero()
            if not ok:
                raise CompositionNonzero(f"D_{p - 1} D_{p} != 0")


def betti(cc: ChainComplex, check: bool = False) -> BettiTable:
    """Betti numbers b_p = c_p - rank D_p - rank D_{p+1} over the rationals.

    Degrees are processed from the top down; the lowest rows of the reduced
    columns of D_{p+1} index p-cells that are homologous to boundaries, and
    those columns of D_p are skipped (their images are already accounted
    for).  With ``check`` the square-zero condition is verified first.
    """
    if check:
        cc.check_square_zero()
    ranks: dict[int, int] = {}
    cleared: set[int] = set()
    for p in range(cc.top, cc.bottom, -1):
        d = cc.boundaries.get(p)
        if d is None:
            ranks[p] = 0
            cleared = set()
            continue
        pivots = _reduce_columns(d, cleared)
        ranks[p] = len(pivots)
        cleared = set(pivots)
    out = {}
    for p, n in cc.sizes.items():
        b = n - ranks.get(p, 0) - ranks.get(p + 1, 0)
        if b < 0:
            raise CompositionNonzero(f"negative Betti number in degree {p}")
        out[p] = b
    return BettiTable(out)


# -- simplicial chains -------------------------------------------------------


def simplicial_chain_complex(k: SimplicialComplex, augmented: bool = True) -> ChainComplex:
    """Oriented simplicial chains of K, faces ordered as in ``K.faces``.

    The face ``σ \\ {v_j}`` (``v_j`` the j-th smallest vertex, from 0) carries
    sign ``(-1)^j``.  With ``augmented`` the empty face spans degree -1.
    """
    faces = k.faces
    lo = -1 if augmented else 0
    sizes = {d: len(faces[d]) for d in faces if d >= lo}
    boundaries = {}
    for d in range(max(lo + 1, 0), k.dim + 1):
        index = {s: i for i, s in enumerate(faces[d - 1])}
        columns = []
        for s in faces[d]:
            col: Column = {}
            sign = 1
            rest = s
            while rest:
                low = rest & -rest
                rest ^= low
                col[index[s ^ low]] = sign
                sign = -sign
            columns.append(col)
        boundaries[d] = IntMatrix(sizes[d - 1], sizes[d], columns)
    return ChainComplex(sizes, boundaries)


def reduced_betti(k: SimplicialComplex, check: bool = False) -> BettiTable:
    """Reduced Betti numbers of K over the rationals, degrees -1..dim K."""
    return betti(simplicial_chain_complex(k, augmented=True), check=check)
