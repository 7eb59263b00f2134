"""Finite simplicial complexes on the vertex set [m] = {1, ..., m}.

Vertex sets are plain Python ints used as bit vectors: vertex ``i`` is bit
``i - 1``.  A complex is stored by its inclusion-maximal faces, sorted by
(cardinality, numeric value), so that two equal complexes compare equal as
values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Callable, Iterable, Iterator, Sequence

MAX_VERTICES = 63


class ComplexError(ValueError):
    """Base class for invalid complex input."""


class VertexOutOfRange(ComplexError):
    pass


class GhostVertex(ComplexError):
    pass


class MTooLarge(ComplexError):
    pass


# -- vertex sets -------------------------------------------------------------


def vset(vertices: Iterable[int]) -> int:
    """Bit vector of a collection of 1-indexed vertices."""
    mask = 0
    for v in vertices:
        mask |= 1 << (v - 1)
    return mask


def members(mask: int) -> list[int]:
    """Sorted 1-indexed vertices of a bit vector."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def full_set(m: int) -> int:
    return (1 << m) - 1


def complement(mask: int, m: int) -> int:
    return full_set(m) & ~mask


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def submasks(mask: int) -> Iterator[int]:
    """All subsets of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def compress(mask: int, support: int) -> int:
    """Re-index ``mask`` (a subset of ``support``) onto 1..|support|, order-preserving."""
    out = 0
    bit = 1
    while support:
        low = support & -support
        if mask & low:
            out |= bit
        bit <<= 1
        support ^= low
    return out


def expand(mask: int, support: int) -> int:
    """Inverse of :func:`compress`: map positions 1..|support| back into ``support``."""
    out = 0
    while support and mask:
        low = support & -support
        if mask & 1:
            out |= low
        mask >>= 1
        support ^= low
    return out


def _canonical_key(mask: int) -> tuple[int, int]:
    return (mask.bit_count(), mask)


def maximal_elements(sets: Iterable[int]) -> tuple[int, ...]:
    """Inclusion-maximal members of a family, in canonical order."""
    ordered = sorted(set(sets), key=_canonical_key, reverse=True)
    kept: list[int] = []
    for s in ordered:
        if not any(s & ~k == 0 for k in kept):
            kept.append(s)
    return tuple(sorted(kept, key=_canonical_key))


def minimal_elements(sets: Iterable[int]) -> tuple[int, ...]:
    """Inclusion-minimal members of a family, in canonical order."""
    ordered = sorted(set(sets), key=_canonical_key)
    kept: list[int] = []
    for s in ordered:
        if not any(k & ~s == 0 for k in kept):
            kept.append(s)
    return tuple(kept)


# -- complexes ---------------------------------------------------------------


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex on [m] given by its maximal faces.

    Construct through :func:`from_maximal_faces` or :meth:`from_masks`; the
    raw constructor trusts its input.
    """

    m: int
    maximal_faces: tuple[int, ...] = field()

    @classmethod
    def from_masks(cls, m: int, faces: Iterable[int]) -> "SimplicialComplex":
        if not 0 <= m <= MAX_VERTICES:
            raise MTooLarge(f"m={m} outside 0..{MAX_VERTICES}")
        faces = list(faces)
        top = full_set(m)
        union = 0
        for f in faces:
            if f & ~top:
                raise VertexOutOfRange(
                    f"face {members(f)} has a vertex outside 1..{m}")
            union |= f
        if m == 0:
            return cls(0, (0,))
        if union != top:
            missing = members(top & ~union)
            raise GhostVertex(f"vertices {missing} lie in no face")
        return cls(m, maximal_elements(faces))

    @classmethod
    def from_minimal_non_faces(cls, m: int, non_faces: Iterable[int]) -> "SimplicialComplex":
        """Complex on [m] whose faces are the sets containing no given non-face.

        Maximal faces are obtained by splitting: start from [m] and, for each
        non-face N in turn, replace every current maximal face F ⊇ N by the
        sets F \\ {v}, v ∈ N, then discard non-maximal members.
        """
        if not 0 <= m <= MAX_VERTICES:
            raise MTooLarge(f"m={m} outside 0..{MAX_VERTICES}")
        current = [full_set(m)]
        for n in minimal_elements(non_faces):
            if n == 0:
                raise ComplexError("the empty set cannot be a non-face")
            nxt = []
            for f in current:
                if n & ~f:
                    nxt.append(f)
                    continue
                rest = n
                while rest:
                    low = rest & -rest
                    nxt.append(f & ~low)
                    rest ^= low
            current = list(maximal_elements(nxt))
        return cls.from_masks(m, current)

    # -- basic invariants --

    @property
    def dim(self) -> int:
        return max(f.bit_count() for f in self.maximal_faces) - 1

    @property
    def mdim(self) -> int:
        return min(f.bit_count() for f in self.maximal_faces) - 1

    @property
    def is_pure(self) -> bool:
        return self.dim == self.mdim

    def is_face(self, sigma: int) -> bool:
        if sigma & ~full_set(self.m):
            raise VertexOutOfRange(f"{members(sigma)} not within 1..{self.m}")
        return any(sigma & ~f == 0 for f in self.maximal_faces)

    def contains(self, sigma: int) -> bool:
        # unchecked variant of is_face for inner loops
        for f in self.maximal_faces:
            if sigma & ~f == 0:
                return True
        return False

    @cached_property
    def face_set(self) -> frozenset[int]:
        out: set[int] = set()
        for f in self.maximal_faces:
            if f in out:
                continue
            out.update(submasks(f))
        return frozenset(out)

    @cached_property
    def faces(self) -> dict[int, tuple[int, ...]]:
        """Faces grouped by dimension -1..dim, ascending bit value within each."""
        grouped: dict[int, list[int]] = {d: [] for d in range(-1, self.dim + 1)}
        for s in self.face_set:
            grouped[s.bit_count() - 1].append(s)
        return {d: tuple(sorted(v)) for d, v in grouped.items()}

    @property
    def f_vector(self) -> list[int]:
        return [len(self.faces[d]) for d in range(-1, self.dim + 1)]

    @cached_property
    def minimal_non_faces(self) -> frozenset[int]:
        """Inclusion-minimal subsets of [m] that are not faces.

        A non-face σ is minimal iff every σ \\ {v} is a face, so candidates are
        F ∪ {v} for faces F and vertices v ∉ F.
        """
        faces = self.face_set
        found: set[int] = set()
        for f in faces:
            rest = full_set(self.m) & ~f
            while rest:
                low = rest & -rest
                rest ^= low
                cand = f | low
                if cand in faces or cand in found:
                    continue
                if all((cand & ~b) in faces for b in _bits(cand)):
                    found.add(cand)
        return frozenset(found)

    # -- presentation --

    def to_lists(self) -> list[list[int]]:
        return [members(f) for f in self.maximal_faces]

    def to_json_obj(self) -> dict:
        return {"m": self.m, "maximal_faces": self.to_lists()}

    def __repr__(self) -> str:
        return f"SimplicialComplex(m={self.m}, maximal_faces={self.to_lists()})"


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low
        mask ^= low


def from_maximal_faces(m: int, faces: Sequence[Sequence[int]]) -> SimplicialComplex:
    """Validated complex on [m] from lists of 1-indexed vertices."""
    if not 0 <= m <= MAX_VERTICES:
        raise MTooLarge(f"m={m} outside 0..{MAX_VERTICES}")
    masks = []
    for face in faces:
        for v in face:
            if not 1 <= v <= m:
                raise VertexOutOfRange(f"vertex {v} outside 1..{m}")
        masks.append(vset(face))
    return SimplicialComplex.from_masks(m, masks)


EMPTY = SimplicialComplex(0, (0,))


def simplex(m: int) -> SimplicialComplex:
    """Full simplex on m vertices (the empty complex when m = 0)."""
    return SimplicialComplex.from_masks(m, [full_set(m)])


def simplex_boundary(m: int) -> SimplicialComplex:
    """Boundary of the full simplex on m ≥ 2 vertices."""
    if m < 2:
        raise ComplexError("boundary of a simplex needs at least 2 vertices")
    top = full_set(m)
    return SimplicialComplex.from_masks(m, [top & ~(1 << i) for i in range(m)])


def discrete(m: int) -> SimplicialComplex:
    """m disjoint points."""
    return SimplicialComplex.from_masks(m, [1 << i for i in range(m)])


def cycle(m: int) -> SimplicialComplex:
    """Boundary of an m-gon, m ≥ 3."""
    return SimplicialComplex.from_masks(
        m, [vset([i, i % m + 1]) for i in range(1, m + 1)])


# -- operations --------------------------------------------------------------


def join(k1: SimplicialComplex, k2: SimplicialComplex) -> SimplicialComplex:
    m = k1.m + k2.m
    if m > MAX_VERTICES:
        raise MTooLarge(f"join would have {m} vertices")
    return SimplicialComplex.from_masks(
        m, [f1 | (f2 << k1.m) for f1 in k1.maximal_faces for f2 in k2.maximal_faces])


def restriction(k: SimplicialComplex, omega: int) -> SimplicialComplex:
    """Full subcomplex on ``omega``, re-indexed onto 1..|omega|."""
    if omega & ~full_set(k.m):
        raise VertexOutOfRange(f"{members(omega)} not within 1..{k.m}")
    if omega == 0:
        return EMPTY
    faces = [compress(f & omega, omega) for f in k.maximal_faces]
    return SimplicialComplex(omega.bit_count(), maximal_elements(faces))


def link(k: SimplicialComplex, v: int) -> tuple[SimplicialComplex, int, int]:
    """Link of vertex ``v`` re-indexed onto its support.

    Returns ``(link, k, support)`` where ``k`` is the number of link vertices
    and ``support`` the bit vector of those vertices in [m].
    """
    if not 1 <= v <= k.m:
        raise VertexOutOfRange(f"vertex {v} outside 1..{k.m}")
    bit = 1 << (v - 1)
    star = [f & ~bit for f in k.maximal_faces if f & bit]
    support = 0
    for f in star:
        support |= f
    if support == 0:
        return EMPTY, 0, 0
    faces = [compress(f, support) for f in star]
    return SimplicialComplex(support.bit_count(), maximal_elements(faces)), support.bit_count(), support


def relabel(k: SimplicialComplex, perm: Sequence[int]) -> SimplicialComplex:
    """Apply the vertex permutation ``i -> perm[i - 1]``."""
    if sorted(perm) != list(range(1, k.m + 1)):
        raise ComplexError(f"{list(perm)} is not a permutation of 1..{k.m}")
    table = [1 << (p - 1) for p in perm]

    def move(mask: int) -> int:
        out = 0
        for i in range(k.m):
            if mask >> i & 1:
                out |= table[i]
        return out

    return SimplicialComplex.from_masks(k.m, [move(f) for f in k.maximal_faces])


def subset_scan(n: int, is_face: Callable[[int], bool]) -> SimplicialComplex:
    """Complex on [n] from a membership oracle by scanning all 2^n subsets."""
    if n > 24:
        raise MTooLarge(f"subset scan over 2^{n} sets refused")
    faces = [s for s in range(1 << n) if is_face(s)]
    return SimplicialComplex.from_masks(n, faces)


def vertex_sets_by_size(m: int, size: int) -> Iterator[int]:
    for combo in combinations(range(m), size):
        mask = 0
        for i in combo:
            mask |= 1 << i
        yield mask
