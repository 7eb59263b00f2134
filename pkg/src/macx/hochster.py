"""Rational cohomology of the moment-angle complex Z_K from full subcomplexes.

H*(Z_K) splits as a sum over ω ⊆ [m] of the reduced cohomology of the full
subcomplex K_ω.  A class of K_ω in degree p is placed in total degree
p + |ω| + 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .complex_core import ComplexError, SimplicialComplex, members, restriction
from .homology import BettiTable, reduced_betti

MAX_ENUMERATION_M = 20


class MTooLargeForEnumeration(ComplexError):
    pass


def total_degree(omega: int, p: int) -> int:
    return p + omega.bit_count() + 1


@dataclass(frozen=True)
class HochsterTable:
    """Nonzero ranks of H̃^p(K_ω) keyed by ``(omega, p)``, ω in binary order."""

    m: int
    entries: dict[tuple[int, int], int]

    @property
    def hrk(self) -> int:
        return sum(self.entries.values())

    @property
    def graded(self) -> BettiTable:
        out: dict[int, int] = {}
        for (omega, p), r in self.entries.items():
            deg = total_degree(omega, p)
            out[deg] = out.get(deg, 0) + r
        return BettiTable(out)

    def to_json(self) -> list[dict]:
        return [{"omega": members(omega), "p": p, "rank": r}
                for (omega, p), r in self.entries.items()]


def _check(k: SimplicialComplex) -> None:
    if k.m > MAX_ENUMERATION_M:
        raise MTooLargeForEnumeration(
            f"2^{k.m} full subcomplexes exceed the enumeration limit m <= {MAX_ENUMERATION_M}")


def subcomplex_ranks(k: SimplicialComplex, check: bool = False) -> Iterator[tuple[int, BettiTable]]:
    """``(omega, reduced Betti of K_omega)`` for every ω ⊆ [m] in binary order."""
    _check(k)
    for omega in range(1 << k.m):
        yield omega, reduced_betti(restriction(k, omega), check=check)


def hochster_table(k: SimplicialComplex, check: bool = False) -> HochsterTable:
    entries = {}
    for omega, table in subcomplex_ranks(k, check):
        for p, r in table.ranks.items():
            entries[(omega, p)] = r
    return HochsterTable(k.m, entries)


def hrk_zk(k: SimplicialComplex) -> int:
    return hochster_table(k).hrk
