"""The doubling operation K -> L(K).

Vertex ``v_i`` of K becomes vertex ``2i - 1`` of L(K) and its partner
``v_i'`` becomes ``2i``.  The minimal non-faces of L(K) are the doubled
minimal non-faces of K.
"""

from __future__ import annotations

from .complex_core import (
    MAX_VERTICES,
    MTooLarge,
    SimplicialComplex,
    subset_scan,
)


def double_set(sigma: int) -> int:
    """d(σ): replace every vertex i by the pair {2i - 1, 2i}."""
    out = 0
    i = 0
    while sigma:
        if sigma & 1:
            out |= 0b11 << (2 * i)
        sigma >>= 1
        i += 1
    return out


def paired_part(tau: int) -> int:
    """Vertices i of K whose pair {2i - 1, 2i} lies entirely inside τ."""
    both = tau & (tau >> 1) & 0x5555555555555555_5555555555555555
    out = 0
    i = 0
    while both:
        if both & 1:
            out |= 1 << i
        both >>= 2
        i += 1
    return out


def vertex_map(m: int) -> dict[tuple[int, bool], int]:
    """Position of (v_i, primed) in [2m]."""
    return {(i, primed): 2 * i - 1 + int(primed) for i in range(1, m + 1) for primed in (False, True)}


def _check_size(m: int) -> None:
    if 2 * m > MAX_VERTICES:
        raise MTooLarge(f"doubling needs 2m={2 * m} vertices")


def double(k: SimplicialComplex) -> SimplicialComplex:
    """L(K), materialized from the doubled minimal non-faces of K."""
    _check_size(k.m)
    return SimplicialComplex.from_minimal_non_faces(
        2 * k.m, [double_set(s) for s in k.minimal_non_faces])


def double_by_scan(k: SimplicialComplex) -> SimplicialComplex:
    """L(K) by testing every τ ⊆ [2m] against the membership rule.

    τ is a face iff no doubled minimal non-face lies inside it, i.e. iff the
    vertices paired inside τ span a face of K.  Only for small m.
    """
    _check_size(k.m)
    return subset_scan(2 * k.m, lambda tau: k.contains(paired_part(tau)))


def doubling_permutation(m1: int, m2: int) -> list[int]:
    """Permutation carrying L(K1) * L(K2) onto L(K1 * K2).

    Entry ``j - 1`` is the image of vertex ``j``.  Joins shift the second
    factor by its partner's vertex count, so L(K1) occupies 1..2m1 and the
    shifted L(K2) occupies 2m1+1..2(m1+m2); in L(K1 * K2) the vertex
    v_{m1+i} of K2 doubles to 2(m1+i)-1, 2(m1+i), which is the same block.
    """
    if 2 * (m1 + m2) > MAX_VERTICES:
        raise MTooLarge(f"doubling needs {2 * (m1 + m2)} vertices")
    target = vertex_map(m1 + m2)
    perm = []
    for i in range(1, m1 + 1):
        perm += [target[(i, False)], target[(i, True)]]
    for i in range(1, m2 + 1):
        perm += [target[(m1 + i, False)], target[(m1 + i, True)]]
    return perm
