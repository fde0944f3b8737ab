"""Reduced simplicial homology and a Hochster-formula depth oracle.

This path never touches Čech strands: it works with simplicial boundary
matrices of Stanley-Reisner complexes and their links, so agreement with the
Čech engine is an independent check on both.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .combinatorics import (
    DecompositionError,
    RingSpec,
    SquarefreeIdeal,
    bits,
    complex_facets,
    popcount,
    subsets,
)
from .linalg import QQ, FieldSpec, SignMatrix, rank


def _maximal(masks) -> tuple[int, ...]:
    kept: list[int] = []
    for s in sorted(set(masks), key=popcount, reverse=True):
        if not any(k & s == s for k in kept):
            kept.append(s)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex given by its facets (as vertex bitmasks).

    No facets is the void complex; the single facet ``0`` is ``{∅}``.
    """

    facets: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "facets", _maximal(self.facets))

    @property
    def vertices(self) -> int:
        v = 0
        for f in self.facets:
            v |= f
        return v

    @property
    def dim(self) -> int:
        return max((popcount(f) for f in self.facets), default=0) - 1

    def faces(self) -> set[int]:
        out: set[int] = set()
        for f in self.facets:
            out.update(subsets(f))
        return out

    def faces_by_size(self) -> list[list[int]]:
        faces = self.faces()
        by_size: list[list[int]] = [[] for _ in range(self.dim + 2)]
        for F in sorted(faces):
            by_size[popcount(F)].append(F)
        return by_size

    def link(self, face: int) -> "SimplicialComplex":
        return SimplicialComplex(tuple(G & ~face for G in self.facets if G & face == face))

    def f_vector(self) -> list[int]:
        """Face counts by size, starting with the empty face."""
        return [len(x) for x in self.faces_by_size()]


def boundary_matrix(lower: list[int], upper: list[int]) -> SignMatrix:
    """Boundary map from faces in ``upper`` (size k+1) to ``lower`` (size k)."""
    index = {F: r for r, F in enumerate(lower)}
    rows = [[0] * len(upper) for _ in lower]
    for c, G in enumerate(upper):
        for pos, v in enumerate(bits(G)):
            rows[index[G & ~(1 << v)]][c] = -1 if pos & 1 else 1
    return SignMatrix(len(lower), len(upper), tuple(tuple(r) for r in rows))


def reduced_homology_dims(cx: SimplicialComplex, field: FieldSpec = QQ) -> list[int]:
    """``dim H̃_k`` for ``k = -1 .. dim(cx)``; empty list for the void complex."""
    return list(_reduced_homology(cx.facets, field.characteristic))


@lru_cache(maxsize=1 << 16)
def _reduced_homology(facets: tuple[int, ...], characteristic: int) -> tuple[int, ...]:
    cx = SimplicialComplex(facets)
    if not cx.facets:
        return ()
    field = FieldSpec(characteristic)
    by_size = cx.faces_by_size()
    # ranks[k] is the rank of the map from size-(k+1) faces to size-k faces
    ranks = [0] + [rank(boundary_matrix(by_size[k - 1], by_size[k]), field)
                   for k in range(1, len(by_size))] + [0]
    return tuple(len(by_size[k]) - ranks[k] - ranks[k + 1] for k in range(len(by_size)))


def stanley_reisner_complex(I: SquarefreeIdeal) -> SimplicialComplex:
    return SimplicialComplex(tuple(complex_facets(I)))


def depth_dim_oracle(I: SquarefreeIdeal, field: FieldSpec = QQ) -> tuple[int, int]:
    """``(depth S/I, dim S/I)`` from reduced homology of links (Hochster).

    ``H^i_m(S/I) != 0`` iff some face ``F`` has ``H̃_{i-|F|-1}(lk F) != 0``.
    """
    if I.is_unit:
        raise DecompositionError(f"S/I is zero for the unit ideal {I}")
    return _depth_dim(I.ring.nvars, I.gens, field.characteristic)


@lru_cache(maxsize=1 << 16)
def _depth_dim(nvars: int, gens: frozenset[int], characteristic: int) -> tuple[int, int]:
    cx = stanley_reisner_complex(SquarefreeIdeal(RingSpec(nvars, 0), gens))
    field = FieldSpec(characteristic)
    depth = None
    for F in cx.faces():
        dims = reduced_homology_dims(cx.link(F), field)
        for k, h in enumerate(dims):
            if h:
                # dims[k] is the reduced homology in degree k - 1
                i = (k - 1) + popcount(F) + 1
                depth = i if depth is None else min(depth, i)
                break
    return depth, cx.dim + 1
