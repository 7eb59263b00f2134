"""The real moment-angle complex (I, S^0)^K as a cubical complex in [-1, 1]^m.

A cell is a pair ``(omega, eps)``: ``omega`` is a face of K listing the
coordinates that range over the whole interval, ``eps`` is a subset of the
remaining coordinates, namely those pinned to +1 (the others sit at -1).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

import numpy as np

from .complex_core import SimplicialComplex, full_set, submasks
from .homology import BettiTable, ChainComplex, IntMatrix, betti

DEFAULT_CELL_BUDGET = 1 << 24


class CellBudgetExceeded(MemoryError):
    def __init__(self, required: int, budget: int):
        super().__init__(f"cubical model needs {required} cells, budget is {budget}")
        self.required = required
        self.budget = budget


class CubicalCell(NamedTuple):
    omega: int
    eps: int

    @property
    def dim(self) -> int:
        return self.omega.bit_count()

    def coordinates(self, m: int) -> list[str]:
        """Human-readable form, e.g. ``['I', '+', '-']``."""
        out = []
        for i in range(m):
            if self.omega >> i & 1:
                out.append("I")
            else:
                out.append("+" if self.eps >> i & 1 else "-")
        return out


def cell_count(k: SimplicialComplex) -> int:
    """Σ over faces ω of 2^(m - |ω|)."""
    return sum(1 << (k.m - f.bit_count()) for f in k.face_set)


def boundary(cell: CubicalCell) -> list[tuple[int, CubicalCell]]:
    """Signed facets of a cube.

    For each free coordinate i, taken in ascending order with s earlier free
    coordinates before it, the facet pinned at +1 has sign (-1)^s and the
    facet pinned at -1 has sign -(-1)^s.
    """
    out = []
    sign = 1
    rest = cell.omega
    while rest:
        low = rest & -rest
        rest ^= low
        face = cell.omega ^ low
        out.append((sign, CubicalCell(face, cell.eps | low)))
        out.append((-sign, CubicalCell(face, cell.eps)))
        sign = -sign
    return out


@dataclass
class CubicalComplex:
    """Cells of (I, S^0)^K grouped by dimension, in a fixed order.

    Cells are held as packed keys ``(omega << m) | eps``; ascending key order
    within a dimension is face order, then sign pattern order.
    """

    k: SimplicialComplex
    keys: dict[int, list[int]]

    @property
    def size(self) -> int:
        return sum(len(v) for v in self.keys.values())

    def counts(self) -> dict[int, int]:
        return {p: len(v) for p, v in self.keys.items()}

    def cells(self, p: int) -> list[CubicalCell]:
        m = self.k.m
        mask = full_set(m)
        return [CubicalCell(key >> m, key & mask) for key in self.keys.get(p, [])]

    def index(self, cell: CubicalCell) -> int:
        key = (cell.omega << self.k.m) | cell.eps
        return self.keys[cell.dim].index(key)

    @cached_property
    def chain_complex(self) -> ChainComplex:
        return self.build_chain_complex(vectorized=2 * self.k.m <= 62)

    def build_chain_complex(self, vectorized: bool = True) -> ChainComplex:
        sizes = self.counts()
        build = _boundary_numpy if vectorized else _boundary_loop
        boundaries = {
            p: build(self.keys[p], self.keys[p - 1], self.k.m)
            for p in range(1, max(self.keys) + 1)
        }
        return ChainComplex(sizes, boundaries)


def _boundary_loop(layer: list[int], below: list[int], m: int) -> IntMatrix:
    mask = full_set(m)
    index = {key: i for i, key in enumerate(below)}
    columns = []
    for key in layer:
        omega = key >> m
        eps = key & mask
        col = {}
        sign = 1
        rest = omega
        while rest:
            low = rest & -rest
            rest ^= low
            base = (omega ^ low) << m
            col[index[base | eps | low]] = sign
            col[index[base | eps]] = -sign
            sign = -sign
        columns.append(col)
    return IntMatrix(len(below), len(layer), columns)


def _boundary_numpy(layer: list[int], below: list[int], m: int) -> IntMatrix:
    # every p-cell has exactly 2p facets, so the column pointer is arithmetic
    keys = np.array(layer, dtype=np.int64)
    lower = np.array(below, dtype=np.int64)
    n = len(keys)
    if n == 0:
        return IntMatrix(len(below), 0)
    omega = keys >> m
    eps = keys & ((1 << m) - 1)
    p = int(np.bitwise_count(omega[0]))
    earlier = np.zeros(n, dtype=np.int64)
    cols, rows, vals = [], [], []
    for i in range(m):
        bit = np.int64(1 << i)
        sel = np.nonzero(omega & bit)[0]
        if len(sel):
            sign = 1 - 2 * (earlier[sel] & 1)
            base = (omega[sel] ^ bit) << m | eps[sel]
            for face, val in ((base | bit, sign), (base, -sign)):
                idx = np.minimum(np.searchsorted(lower, face), len(lower) - 1)
                if np.any(lower[idx] != face):
                    raise AssertionError("cubical facet outside the complex")
                cols.append(sel)
                rows.append(idx)
                vals.append(val)
        earlier += (omega >> i) & 1
    cols = np.concatenate(cols)
    rows = np.concatenate(rows)
    vals = np.concatenate(vals)
    order = np.lexsort((rows, cols))
    return IntMatrix.from_csc(len(below), n, list(range(0, 2 * p * n + 1, 2 * p)),
                              rows[order].tolist(), vals[order].tolist())



def build_cells(k: SimplicialComplex, budget: int = DEFAULT_CELL_BUDGET) -> CubicalComplex:
    """One cell per face ω of K and sign pattern on the coordinates outside ω.

    Faces come in ``K.faces`` order, sign patterns in ascending binary order.
    """
    required = cell_count(k)
    if required > budget:
        raise CellBudgetExceeded(required, budget)
    m = k.m
    top = full_set(m)
    keys: dict[int, list[int]] = {}
    for d, faces in k.faces.items():
        layer: list[int] = []
        for omega in faces:
            base = omega << m
            signs = list(submasks(top & ~omega))
            signs.reverse()
            layer.extend([base | e for e in signs])
        keys[d + 1] = layer
    return CubicalComplex(k, keys)


def betti_rzk(k: SimplicialComplex, budget: int = DEFAULT_CELL_BUDGET, check: bool = False) -> BettiTable:
    """Rational Betti numbers of (I, S^0)^K."""
    return betti(build_cells(k, budget).chain_complex, check=check)


def hrk_rzk(k: SimplicialComplex, budget: int = DEFAULT_CELL_BUDGET) -> int:
    return betti_rzk(k, budget).hrk


def describe(cell: CubicalCell, m: int) -> str:
    return "(" + ",".join(cell.coordinates(m)) + ")" if m else "()"

