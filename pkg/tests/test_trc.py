import json
import random

import pytest

from macx.complex_core import SimplicialComplex, VertexOutOfRange, cycle, discrete, simplex, simplex_boundary
from macx.hochster import MTooLargeForEnumeration
from macx.jsonio import dumps
from macx.trc import (
    CorpusItem,
    check_theorem,
    check_trc,
    corpus_document,
    enumerate_complexes,
    random_complex,
    random_corpus,
    run_corpus,
    slice_check,
    theorem_bound,
    trk_upper_bound,
)


def brute_force_complexes(m):
    """All downward-closed families of subsets of [m] containing every singleton."""
    cands = [s for s in range(1 << m) if s.bit_count() >= 2]
    out = set()
    for pick in range(1 << len(cands)):
        fam = {cands[i] for i in range(len(cands)) if pick >> i & 1}
        closed = all(
            (s & ~(1 << b)) in fam
            for s in fam for b in range(m)
            if s >> b & 1 and (s & ~(1 << b)).bit_count() >= 2
        )
        if closed:
            out.add(SimplicialComplex.from_masks(m, [1 << i for i in range(m)] + sorted(fam)))
    return out


class TestBounds:
    @pytest.mark.parametrize("k, expected", [
        (simplex_boundary(2), 1),
        (simplex(5), 0),
        (cycle(4), 2),
    ])
    def test_trk(self, k, expected):
        assert trk_upper_bound(k) == expected

    def test_trk_needs_vertices(self):
        from macx.complex_core import EMPTY

        with pytest.raises(ValueError):
            trk_upper_bound(EMPTY)

    def test_bound_ordering(self, small_corpus):
        for k in small_corpus:
            assert 2 ** trk_upper_bound(k) <= theorem_bound(k)

    @pytest.mark.parametrize("k, expected", [
        (simplex_boundary(2), (2, 2, True)),
        (simplex(3), (1, 1, True)),
        (cycle(4), (4, 4, True)),
    ])
    def test_check_theorem(self, k, expected):
        assert check_theorem(k) == expected


class TestSlice:
    def test_cycle(self):
        s = slice_check(cycle(4), 1)
        assert (s.lhs, s.rhs, s.k, s.ok) == (4, 4, 2, True)

    def test_simplex(self):
        for m in range(1, 5):
            for v in range(1, m + 1):
                s = slice_check(simplex(m), v)
                assert (s.lhs, s.rhs, s.ok) == (1, 1, True)

    def test_three_points(self):
        s = slice_check(discrete(3), 1)
        assert (s.lhs, s.rhs, s.k) == (6, 4, 0)

    def test_out_of_range(self):
        with pytest.raises(VertexOutOfRange):
            slice_check(cycle(4), 0)

    def test_exhaustive_up_to_five_vertices(self):
        from macx.cubical import betti_rzk

        count = 0
        for m in range(1, 6):
            for k in enumerate_complexes(m, max_m=5):
                lhs = betti_rzk(k).hrk
                for v in range(1, m + 1):
                    assert slice_check(k, v, lhs=lhs).ok
                count += 1
        assert count == 1 + 2 + 9 + 114 + 6894


class TestCheckTrc:
    def test_four_cycle(self):
        r = check_trc(cycle(4))
        assert (r.trk_bound, r.hrk_zk, r.trc_bound) == (2, 4, 4)
        assert r.ok and r.theorem_tight

    def test_three_points(self):
        r = check_trc(discrete(3))
        assert (r.trk_bound, r.hrk_zk, r.hrk_rzk, r.trc_bound, r.theorem_bound) == (2, 6, 6, 4, 4)
        assert r.ok and not r.theorem_tight

    def test_two_points(self):
        r = check_trc(simplex_boundary(2), check=True)
        assert (r.trk_bound, r.hrk_zk, r.trc_bound) == (1, 2, 2)
        assert r.betti_zk == r.betti_rzk_double == {"0": 1, "3": 1}
        assert set(r.flags) == {"cross_check_ok", "theorem_ok", "trc_ok", "slice_ok"}
        assert r.ok

    def test_json_fields(self):
        obj = check_trc(cycle(4), "c4").to_json()
        for key in ("id", "m", "dim", "mdim", "trk_bound", "hrk_zk", "hrk_rzk",
                    "theorem_bound", "trc_bound", "flags"):
            assert key in obj
        json.dumps(obj)


class TestEnumeration:
    @pytest.mark.parametrize("m, count", [(1, 1), (2, 2), (3, 9)])
    def test_small_counts(self, m, count):
        assert sum(1 for _ in enumerate_complexes(m)) == count

    @pytest.mark.parametrize("m", [1, 2, 3, 4])
    def test_against_brute_force(self, m):
        found = list(enumerate_complexes(m))
        assert len(found) == len(set(found))
        assert set(found) == brute_force_complexes(m)

    def test_deterministic(self):
        assert list(enumerate_complexes(4)) == list(enumerate_complexes(4))

    def test_cap(self):
        with pytest.raises(MTooLargeForEnumeration):
            list(enumerate_complexes(5))


class TestRandom:
    def test_low_density(self):
        assert random_complex(3, 1e-12, 5) == discrete(3)

    def test_high_density(self):
        assert random_complex(3, 1 - 1e-12, 5) == simplex(3)

    def test_snapshot(self):
        k = random_complex(5, 0.3, 42)
        assert k.to_lists() == [[1, 2, 5], [2, 3, 5], [1, 2, 3, 4], [1, 3, 4, 5]]

    def test_reproducible(self):
        rng = random.Random(0)
        for _ in range(20):
            m, seed = rng.randint(1, 10), rng.randint(0, 10 ** 6)
            assert random_complex(m, 0.2, seed) == random_complex(m, 0.2, seed)

    @pytest.mark.parametrize("m, density", [(0, 0.3), (17, 0.3), (4, 0.0), (4, 1.0)])
    def test_ranges(self, m, density):
        with pytest.raises(ValueError):
            random_complex(m, density, 1)


class TestCorpus:
    def test_sorted_and_deduplicated(self):
        items = [CorpusItem("b", cycle(4)), CorpusItem("a", cycle(4)), CorpusItem("c", discrete(2))]
        reports = run_corpus(items)
        assert [r.id for r in reports] == ["a", "b", "c"]
        assert reports[0].to_json() | {"id": "b"} == reports[1].to_json()

    def test_parallel_matches_serial(self):
        items = random_corpus(4, 4, 0.3, 7)
        serial = run_corpus(items)
        parallel = run_corpus(items, jobs=2)
        assert [r.to_json() for r in serial] == [r.to_json() for r in parallel]

    def test_document_is_reproducible(self):
        items = random_corpus(5, 4, 0.3, 99)
        a = dumps(corpus_document(run_corpus(items), {"seed": 99}))
        b = dumps(corpus_document(run_corpus(list(reversed(items))), {"seed": 99}))
        assert a == b
        assert json.loads(a)["summary"]["all_ok"]
