"""Squarefree ideal corpora: exhaustive enumeration and seeded random samples."""

from __future__ import annotations

import random
from typing import Iterator

from .combinatorics import RingSpec, SquarefreeIdeal, squarefree_antichains

# number of antichains in the Boolean lattice on k elements (Dedekind numbers)
DEDEKIND = (2, 3, 6, 20, 168, 7581, 7828354, 2414682040998, 56130437228687557907788,
            286386577668298411128469151667598498812366)


def proper_count(nvars: int) -> int:
    """How many proper nonzero squarefree ideals live on ``nvars`` variables."""
    return DEDEKIND[nvars] - 2


def proper_antichains(nvars: int) -> Iterator[frozenset[int]]:
    for gens in squarefree_antichains(nvars):
        if gens and 0 not in gens:
            yield gens


def rings_up_to(total: int) -> Iterator[RingSpec]:
    """Every ring shape ``(m, n)`` with ``1 <= m + n <= total``."""
    for nv in range(1, total + 1):
        for m in range(nv + 1):
            yield RingSpec(m, nv - m)


def all_ideals(max_vars: int) -> Iterator[SquarefreeIdeal]:
    """Every proper nonzero squarefree ideal in every ring with ``m + n <= max_vars``."""
    for nv in range(1, max_vars + 1):
        shapes = list(proper_antichains(nv))
        for m in range(nv + 1):
            ring = RingSpec(m, nv - m)
            for gens in shapes:
                yield SquarefreeIdeal(ring, gens)


def random_ideal(ring: RingSpec, rng: random.Random, max_gens: int = 8) -> SquarefreeIdeal:
    nv = ring.nvars
    while True:
        k = rng.randint(1, max_gens)
        gens = set()
        for _ in range(k):
            size = min(nv, max(1, round(rng.triangular(1, nv, 2.5))))
            gens.add(sum(1 << v for v in rng.sample(range(nv), size)))
        I = SquarefreeIdeal(ring, frozenset(gens))
        if not I.is_zero and not I.is_unit:
            return I


def random_ideals(nvars: int, count: int, seed: int = 0) -> list[SquarefreeIdeal]:
    """``count`` random proper nonzero ideals on ``nvars`` variables with random splits."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        m = rng.randint(0, nvars)
        out.append(random_ideal(RingSpec(m, nvars - m), rng))
    return out
