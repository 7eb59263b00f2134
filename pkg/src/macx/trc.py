"""Toral-rank bookkeeping for moment-angle complexes, checked over corpora.

For a complex K on [m]:

* a coordinate subtorus acting almost freely on Z_K has rank at most
  m - 1 - dim K, and that rank is attained;
* hrk of the real moment-angle complex is at least 2^(m - mdim K - 1);
* Z_K is the real moment-angle complex of the double, so hrk(Z_K) is at
  least 2^(m - 1 - dim K), which is the toral rank inequality.

Every check here is a theorem; a false flag means a bug somewhere in the
stack, and the CLI exits non-zero.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, replace
from typing import Iterator, Sequence

from . import __version__
from .complex_core import (
    SimplicialComplex,
    VertexOutOfRange,
    link,
)
from .cubical import DEFAULT_CELL_BUDGET, betti_rzk, build_cells
from .doubling import double
from .hochster import MTooLargeForEnumeration, hochster_table
from .homology import betti

MAX_EXHAUSTIVE_M = 4
MAX_RANDOM_M = 16


def trk_upper_bound(k: SimplicialComplex) -> int:
    if k.m < 1:
        raise ValueError("toral rank bound needs m >= 1")
    return k.m - 1 - k.dim


def theorem_bound(k: SimplicialComplex) -> int:
    return 2 ** (k.m - k.mdim - 1)


def check_theorem(k: SimplicialComplex, budget: int = DEFAULT_CELL_BUDGET) -> tuple[int, int, bool]:
    """``(hrk of the real moment-angle complex, 2^(m - mdim - 1), holds)``."""
    hrk = betti_rzk(k, budget).hrk
    bound = theorem_bound(k)
    return hrk, bound, hrk >= bound


@dataclass(frozen=True)
class SliceResult:
    vertex: int
    k: int
    lhs: int
    rhs: int

    @property
    def ok(self) -> bool:
        return self.lhs >= self.rhs


def slice_check(k: SimplicialComplex, v: int, budget: int = DEFAULT_CELL_BUDGET,
                lhs: int | None = None) -> SliceResult:
    """Compare hrk of (I, S^0)^K with the hyperplane x_v = 0 through it.

    That hyperplane section is 2^(m - k - 1) disjoint copies of the real
    moment-angle complex of the link of v (k = number of link vertices),
    and gluing two collared halves cannot have smaller total rank than the
    section.  ``lhs`` may be passed in when already known.
    """
    if not 1 <= v <= k.m:
        raise VertexOutOfRange(f"vertex {v} outside 1..{k.m}")
    lk, n_link, _ = link(k, v)
    if lhs is None:
        lhs = betti_rzk(k, budget).hrk
    rhs = 2 ** (k.m - n_link - 1) * betti_rzk(lk, budget).hrk
    return SliceResult(v, n_link, lhs, rhs)


@dataclass
class TrcReport:
    id: str
    m: int
    dim: int
    mdim: int
    trk_bound: int
    hrk_zk: int
    hrk_rzk: int
    theorem_bound: int
    trc_bound: int
    flags: dict[str, bool]
    maximal_faces: list[list[int]] = field(default_factory=list)
    betti_zk: dict[str, int] = field(default_factory=dict)
    betti_rzk_double: dict[str, int] = field(default_factory=dict)
    slices: list[dict[str, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(self.flags.values())

    @property
    def theorem_tight(self) -> bool:
        return self.hrk_rzk == self.theorem_bound

    def to_json(self) -> dict:
        out = asdict(self)
        out["theorem_tight"] = self.theorem_tight
        return out


def check_trc(k: SimplicialComplex, complex_id: str = "K", budget: int = DEFAULT_CELL_BUDGET,
              slices: bool = True, check: bool = False) -> TrcReport:
    """Run every check on K; ``check`` also verifies ∂∂ = 0 on each chain complex built."""
    table = hochster_table(k, check=check)
    graded = table.graded
    rzk_double = betti(build_cells(double(k), budget).chain_complex, check=check)
    rzk = betti(build_cells(k, budget).chain_complex, check=check)
    trk = trk_upper_bound(k)
    bound = theorem_bound(k)
    flags = {
        "cross_check_ok": graded == rzk_double and table.hrk == rzk_double.hrk,
        "theorem_ok": rzk.hrk >= bound,
        "trc_ok": table.hrk >= 2 ** trk,
    }
    slice_rows = []
    if slices:
        for v in range(1, k.m + 1):
            s = slice_check(k, v, budget, lhs=rzk.hrk)
            slice_rows.append({"vertex": v, "k": s.k, "lhs": s.lhs, "rhs": s.rhs})
        flags["slice_ok"] = all(r["lhs"] >= r["rhs"] for r in slice_rows)
    return TrcReport(
        id=complex_id,
        m=k.m,
        dim=k.dim,
        mdim=k.mdim,
        trk_bound=trk,
        hrk_zk=table.hrk,
        hrk_rzk=rzk.hrk,
        theorem_bound=bound,
        trc_bound=2 ** trk,
        flags=flags,
        maximal_faces=k.to_lists(),
        betti_zk=graded.to_json(),
        betti_rzk_double=rzk_double.to_json(),
        slices=slice_rows,
    )


# -- corpora -----------------------------------------------------------------


def _candidate_order(m: int) -> list[int]:
    return sorted((s for s in range(1 << m) if s.bit_count() >= 2),
                  key=lambda s: (s.bit_count(), s))


def enumerate_complexes(m: int, max_m: int = MAX_EXHAUSTIVE_M) -> Iterator[SimplicialComplex]:
    """Every complex on [m] containing all singletons, each exactly once.

    Searches downward-closed families of sets of size >= 2: candidates are
    visited by (size, value) and a set may be included only if all of its
    facets of size >= 2 were.
    """
    if not 1 <= m <= max_m:
        raise MTooLargeForEnumeration(f"exhaustive enumeration supports 1 <= m <= {max_m}")
    order = _candidate_order(m)
    singletons = [1 << i for i in range(m)]

    def facets_present(s: int, chosen: set[int]) -> bool:
        rest = s
        while rest:
            low = rest & -rest
            rest ^= low
            f = s ^ low
            if f.bit_count() >= 2 and f not in chosen:
                return False
        return True

    def search(i: int, chosen: set[int]) -> Iterator[SimplicialComplex]:
        if i == len(order):
            yield SimplicialComplex.from_masks(m, singletons + sorted(chosen))
            return
        s = order[i]
        yield from search(i + 1, chosen)
        if facets_present(s, chosen):
            chosen.add(s)
            yield from search(i + 1, chosen)
            chosen.discard(s)

    yield from search(0, set())


def random_complex(m: int, density: float, seed: int) -> SimplicialComplex:
    """Downward closure of randomly accepted subsets of size >= 2, plus all vertices.

    Subsets are visited in ascending binary order and each is accepted when
    ``random.Random(seed).random() < density``; the Mersenne Twister stream is
    fixed across platforms.
    """
    if not 1 <= m <= MAX_RANDOM_M:
        raise ValueError(f"random complexes need 1 <= m <= {MAX_RANDOM_M}")
    if not 0.0 < density < 1.0:
        raise ValueError(f"density must lie strictly between 0 and 1, got {density}")
    rng = random.Random(seed)
    accepted = [s for s in range(1 << m) if s.bit_count() >= 2 and rng.random() < density]
    return SimplicialComplex.from_masks(m, [1 << i for i in range(m)] + accepted)


@dataclass(frozen=True)
class CorpusItem:
    id: str
    complex: SimplicialComplex


def exhaustive_corpus(max_m: int) -> list[CorpusItem]:
    items = []
    for m in range(1, max_m + 1):
        for i, k in enumerate(enumerate_complexes(m)):
            items.append(CorpusItem(f"enum-m{m}-{i:04d}", k))
    return items


def random_corpus(count: int, m: int, density: float, seed: int) -> list[CorpusItem]:
    """``count`` complexes drawn with seeds ``seed, seed + 1, ...``."""
    return [CorpusItem(f"rand-m{m:02d}-d{density:g}-s{seed + i:06d}", random_complex(m, density, seed + i))
            for i in range(count)]


def _run_item(args: tuple[CorpusItem, int, bool]) -> TrcReport:
    item, budget, check = args
    return check_trc(item.complex, item.id, budget=budget, check=check)


def run_corpus(items: Sequence[CorpusItem], budget: int = DEFAULT_CELL_BUDGET, check: bool = False,
               jobs: int = 1) -> list[TrcReport]:
    """Check every item; reports come back sorted by id whatever ``jobs`` is.

    Items carrying the same complex are computed once and the report is
    copied under each id.
    """
    first: dict[SimplicialComplex, CorpusItem] = {}
    for item in items:
        first.setdefault(item.complex, item)
    work = [(item, budget, check) for item in first.values()]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            computed = list(pool.map(_run_item, work, chunksize=4))
    else:
        computed = [_run_item(w) for w in work]
    by_complex = {item.complex: rep for (item, _, _), rep in zip(work, computed)}
    reports = [replace(by_complex[item.complex], id=item.id) for item in items]
    return sorted(reports, key=lambda r: r.id)


def corpus_document(reports: Sequence[TrcReport], parameters: dict) -> dict:
    n_ok = sum(r.ok for r in reports)
    return {
        "tool": "macx",
        "version": __version__,
        "parameters": parameters,
        "summary": {
            "complexes": len(reports),
            "all_ok": n_ok == len(reports),
            "failed": [r.id for r in reports if not r.ok],
            "theorem_tight": sum(r.theorem_tight for r in reports),
        },
        "reports": [r.to_json() for r in reports],
    }

