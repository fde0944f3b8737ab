"""Search harness for the open non-vanishing question.

Among Cohen-Macaulay ``S/I`` whose local cohomology with respect to the
y-block is nonzero at every index from grade to cd, look for one whose
x-block local cohomology has an interior gap.  A hit would be a
counterexample candidate; the expected outcome is no hit.
"""

from __future__ import annotations

import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field

from .cech import profile_of
from .combinatorics import RingSpec, SquarefreeIdeal
from .corpus import DEDEKIND, proper_antichains, proper_count, random_ideal
from .homology import depth_dim_oracle
from .linalg import QQ, FieldSpec

MAX_SEARCH_VARS = 8
# rough cost of scanning one ideal on six variables, in seconds
_SECONDS_PER_IDEAL = 0.01


class SearchDeclined(ValueError):
    pass


@dataclass(frozen=True)
class Finding:
    ideal: SquarefreeIdeal
    q_nonvanishing: tuple[bool, ...]
    p_nonvanishing: tuple[bool, ...]
    counterexample: bool

    @property
    def q_width(self) -> int:
        return sum(self.q_nonvanishing)


@dataclass
class SearchResult:
    max_x: int
    max_y: int
    field: FieldSpec
    budget: int
    exhaustive: bool
    scanned: int = 0
    cohen_macaulay: int = 0
    qualifying: int = 0
    counterexamples: list[Finding] = dc_field(default_factory=list)
    findings: list[Finding] = dc_field(default_factory=list)
    width_histogram: dict[int, int] = dc_field(default_factory=dict)

    @property
    def message(self) -> str:
        if self.counterexamples:
            return f"{len(self.counterexamples)} counterexample candidate(s) found"
        return "no counterexample in search space"


def examine(I: SquarefreeIdeal, field: FieldSpec = QQ) -> Finding | None:
    """``None`` unless ``S/I`` is CM with a gap-free y-block profile."""
    depth, dim = depth_dim_oracle(I, field)
    if depth != dim:
        return None
    q = profile_of(I, I.ring.y_mask, field)
    if not q.full_interval:
        return Finding(I, q.nonvanishing, (), False)
    p = profile_of(I, I.ring.x_mask, field)
    return Finding(I, q.nonvanishing, p.nonvanishing, not p.full_interval)


def _examine_batch(ideals: list[SquarefreeIdeal], characteristic: int):
    field = FieldSpec(characteristic)
    return [examine(I, field) for I in ideals]


def _candidates(max_x: int, max_y: int, budget: int, include, seed: int):
    total = sum(proper_count(m + n) for m in range(max_x + 1) for n in range(max_y + 1)
                if m + n)
    pool: list[SquarefreeIdeal] = list(include)[:budget]
    if total + len(pool) <= budget:
        for m in range(max_x + 1):
            for n in range(max_y + 1):
                if m + n:
                    ring = RingSpec(m, n)
                    pool.extend(SquarefreeIdeal(ring, g) for g in proper_antichains(m + n))
        return pool, True
    rng = random.Random(seed)
    ring = RingSpec(max_x, max_y)
    seen = {I.gens for I in pool if I.ring == ring}
    attempts = 0
    while len(pool) < budget and attempts < 50 * budget:
        attempts += 1
        I = random_ideal(ring, rng)
        if I.gens not in seen:
            seen.add(I.gens)
            pool.append(I)
    return pool, False


def question_search(max_x: int, max_y: int, field: FieldSpec = QQ, budget: int = 1000, *,
                    include=(), seed: int = 0, jobs: int = 1) -> SearchResult:
    """Scan squarefree ideals in rings up to ``(max_x, max_y)``.

    Every ring shape inside the bounds is enumerated exhaustively when the
    total fits in ``budget``; otherwise ``include`` is scanned first and the
    rest of the budget is a seeded random sample from the largest ring.
    """
    if max_x < 0 or max_y < 0:
        raise ValueError("bounds must be nonnegative")
    if max_x + max_y > MAX_SEARCH_VARS:
        nv = max_x + max_y
        count = DEDEKIND[nv] - 2 if nv < len(DEDEKIND) else float("inf")
        raise SearchDeclined(
            f"{nv} variables is above the cap of {MAX_SEARCH_VARS}; exhaustive scan covers "
            f"about {count:.3g} ideals (~{count * _SECONDS_PER_IDEAL:.3g} s)")
    result = SearchResult(max_x, max_y, field, budget, exhaustive=False)
    if budget <= 0:
        return result
    pool, exhaustive = _candidates(max_x, max_y, budget, include, seed)
    result.exhaustive = exhaustive
    if jobs > 1 and len(pool) > jobs:
        size = -(-len(pool) // jobs)
        batches = [pool[i:i + size] for i in range(0, len(pool), size)]
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            # map keeps batch order, so the merge is deterministic
            outcomes = [f for part in ex.map(_examine_batch, batches,
                                             [field.characteristic] * len(batches))
                        for f in part]
    else:
        outcomes = _examine_batch(pool, field.characteristic)
    widths: Counter[int] = Counter()
    for I, f in zip(pool, outcomes):
        result.scanned += 1
        if f is None:
            continue
        result.cohen_macaulay += 1
        if not f.p_nonvanishing:
            continue
        result.qualifying += 1
        widths[f.q_width] += 1
        if f.counterexample:
            result.counterexamples.append(f)
        if f.counterexample or f.q_width >= 3:
            result.findings.append(f)
    result.width_histogram = dict(sorted(widths.items()))
    return result
