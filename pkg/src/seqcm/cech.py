"""Local cohomology of monomial quotients ``A/B`` via Čech complex strands.

For a torsion variable set ``T`` the Čech complex of ``A/B`` splits into
fine-multidegree strands.  In a degree ``a`` the component indexed by
``W ⊆ T`` is one-dimensional exactly when ``a`` is negative only on ``W`` and
the monomial ``x^a`` lies in ``A`` but not ``B`` after inverting ``W``.  Strand
cohomology is computed exactly; ``H^i_T(A/B) != 0`` iff some strand has
``H^i != 0``.  Only nonvanishing is tracked, never Hilbert series.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Union

import numpy as np

from .combinatorics import (
    GeneralMonomialIdeal,
    RingMismatchError,
    RingSpec,
    SquarefreeIdeal,
    associated_primes,
    bits,
    minimal_primes,
    minimalize,
    popcount,
    subsets,
)
from .linalg import QQ, ChainComplex, FieldSpec, SignMatrix, cohomology_dims

Ideal = Union[SquarefreeIdeal, GeneralMonomialIdeal]

JOBS_ENV = "SEQCM_JOBS"


class ModuleError(ValueError):
    """Invalid quotient module input (for instance ``B`` not inside ``A``)."""


def _as_general(I: Ideal) -> GeneralMonomialIdeal:
    return I.to_general() if isinstance(I, SquarefreeIdeal) else I


def _unit_like(I: Ideal) -> Ideal:
    if isinstance(I, SquarefreeIdeal):
        return SquarefreeIdeal.unit(I.ring)
    return GeneralMonomialIdeal(I.ring, frozenset({(0,) * I.ring.nvars}))


@dataclass(frozen=True, init=False)
class QuotientModule:
    """The module ``A/B`` for monomial ideals ``B ⊆ A`` in one ring."""

    A: GeneralMonomialIdeal
    B: GeneralMonomialIdeal

    def __init__(self, A: Ideal, B: Ideal):
        if A.ring != B.ring:
            raise RingMismatchError("A and B live in different rings")
        A, B = _as_general(A), _as_general(B)
        if not A.is_unit and not all(A.contains(g) for g in B.gens):
            raise ModuleError(f"B = {B} is not contained in A = {A}")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)

    @classmethod
    def cyclic(cls, I: Ideal) -> "QuotientModule":
        """``S/I``."""
        return cls(_unit_like(I), I)

    @property
    def ring(self) -> RingSpec:
        return self.A.ring

    @property
    def is_zero(self) -> bool:
        return all(self.B.contains(g) for g in self.A.gens)

    @property
    def is_squarefree(self) -> bool:
        return self.A.is_squarefree and self.B.is_squarefree

    @property
    def max_exponent(self) -> int:
        return max(self.A.max_exponent, self.B.max_exponent)

    def key(self) -> tuple:
        return (self.ring.m, self.ring.n, tuple(sorted(self.A.gens)), tuple(sorted(self.B.gens)))

    def __str__(self):
        if self.A.is_unit:
            return f"S/{self.B}"
        return f"{self.A}/{self.B}"


@dataclass(frozen=True, order=True)
class Degree:
    """A fine multidegree; strands only see its sign/size pattern."""

    exponents: tuple[int, ...]

    @property
    def pos(self) -> int:
        return sum(1 << i for i, e in enumerate(self.exponents) if e > 0)

    @property
    def neg(self) -> int:
        return sum(1 << i for i, e in enumerate(self.exponents) if e < 0)

    def label(self, ring: RingSpec) -> str:
        parts = [ring.var_name(i) if e == 1 else f"{ring.var_name(i)}^{e}"
                 for i, e in enumerate(self.exponents) if e]
        return "*".join(parts) or "1"


def _obstructions(gens: Iterable[tuple[int, ...]], exps: tuple[int, ...]) -> list[int]:
    """Per generator, the mask of variables where its exponent exceeds ``exps``.

    A generator divides ``x^exps`` once ``W`` is inverted iff its mask ⊆ ``W``.
    """
    out = []
    for g in gens:
        mask = 0
        for i, (ge, e) in enumerate(zip(g, exps)):
            if ge > e:
                mask |= 1 << i
        out.append(mask)
    return out


def localized_membership(C: Ideal, degree: Degree, W: int) -> bool:
    """Whether ``x^degree`` lies in ``C`` with the variables of ``W`` inverted."""
    if degree.neg & ~W:
        raise ValueError("negative exponents must lie in the inverted set")
    return any(b & ~W == 0 for b in _obstructions(_as_general(C).gens, degree.exponents))


def _cech_sign(W: int, j: int) -> int:
    return -1 if popcount(W & ((1 << j) - 1)) & 1 else 1


def complex_on_family(family: Iterable[int], universe: int) -> ChainComplex:
    """Čech-signed cochain complex with one basis vector per set in ``family``.

    ``family`` must be convex (closed under betweenness) inside the subsets of
    ``universe``; the complex is graded by set size, from 0 to ``|universe|``.
    """
    top = popcount(universe)
    by_size: list[list[int]] = [[] for _ in range(top + 1)]
    for W in sorted(family):
        by_size[popcount(W)].append(W)
    maps = []
    for k in range(top):
        src, dst = by_size[k], by_size[k + 1]
        index = {V: r for r, V in enumerate(dst)}
        rows = [[0] * len(src) for _ in dst]
        for c, W in enumerate(src):
            for j in bits(universe & ~W):
                r = index.get(W | (1 << j))
                if r is not None:
                    rows[r][c] = _cech_sign(W, j)
        maps.append(SignMatrix(len(dst), len(src), tuple(tuple(r) for r in rows)))
    return ChainComplex(tuple(len(s) for s in by_size), tuple(maps))


@dataclass(frozen=True)
class StrandComplex:
    degree: Degree
    torsion: int
    components: tuple[int, ...]
    complex: ChainComplex

    def cohomology(self, field: FieldSpec = QQ) -> list[int]:
        return cohomology_dims(self.complex, field)


def strand(module: QuotientModule, T: int, degree: Degree) -> StrandComplex:
    """The Čech strand of ``module`` in ``degree``, indexed by inverted sets ``W ⊆ T``."""
    if degree.neg & ~T:
        raise ValueError("negative exponents are only allowed on torsion variables")
    exps = degree.exponents
    obs_a = _obstructions(module.A.gens, exps)
    obs_b = _obstructions(module.B.gens, exps)
    comps = []
    for U in subsets(T & ~degree.neg):
        W = U | degree.neg
        in_a = any(b & ~W == 0 for b in obs_a)
        if in_a and not any(b & ~W == 0 for b in obs_b):
            comps.append(W)
    return StrandComplex(degree, T, tuple(sorted(comps)), complex_on_family(comps, T))


@lru_cache(maxsize=1 << 18)
def _strand_family(free: int, rel_a: frozenset[int], rel_b: frozenset[int]) -> tuple[int, ...]:
    """Components ``U ⊆ free`` above some mask of ``rel_a`` and above none of
    ``rel_b``; empty when the strand is zero or a cone (hence acyclic).
    """
    family = [U for U in subsets(free)
              if any(a & U == a for a in rel_a) and not any(b & U == b for b in rel_b)]
    members = set(family)
    for j in bits(free):
        bit = 1 << j
        if all((U ^ bit) in members for U in family):
            return ()
    return tuple(family)


@lru_cache(maxsize=1 << 18)
def _family_dims(family: tuple[int, ...], free: int, characteristic: int) -> tuple[int, ...]:
    return tuple(cohomology_dims(complex_on_family(family, free), FieldSpec(characteristic)))


def _relative_dims(free: int, rel_a: frozenset[int], rel_b: frozenset[int],
                   characteristic: int) -> tuple[int, ...] | None:
    """Strand cohomology indexed by ``|U|`` (``None`` when it vanishes).

    Shifting by the negative support relabels indices and changes the Čech
    signs only by a diagonal change of basis, so the relative data suffice.
    """
    family = _strand_family(free, rel_a, rel_b)
    if not family:
        return None
    return _family_dims(family, free, characteristic)


def _relative_key(a_gens, b_gens, T: int, exps: tuple[int, ...], neg: int):
    # generators obstructed outside T can never become members
    rel_a = frozenset(b & ~neg for b in _obstructions(a_gens, exps) if not b & ~T)
    rel_b = frozenset(b & ~neg for b in _obstructions(b_gens, exps) if not b & ~T)
    return rel_a, rel_b


def strand_cohomology(module: QuotientModule, T: int, degree: Degree,
                      field: FieldSpec = QQ) -> list[int]:
    """``dim H^i`` of the strand in ``degree`` for ``i = 0..|T|``."""
    neg = degree.neg
    if neg & ~T:
        raise ValueError("negative exponents are only allowed on torsion variables")
    free = T & ~neg
    rel_a, rel_b = _relative_key(module.A.gens, module.B.gens, T, degree.exponents, neg)
    out = [0] * (popcount(T) + 1)
    dims = _relative_dims(free, rel_a, rel_b, field.characteristic)
    if dims:
        shift = popcount(neg)
        for k, h in enumerate(dims):
            out[shift + k] = h
    return out


@lru_cache(maxsize=256)
def _degree_table(nvars: int, T: int, top: int, extra: int, prune: bool) -> np.ndarray:
    """All box degrees as rows of an integer array, in lexicographic order."""
    top = max(top, 1)
    ranges = []
    for v in range(nvars):
        if T >> v & 1:
            hi = top - 1 if prune else top + extra
            ranges.append(range(-1 - extra, hi + 1))
        else:
            ranges.append(range(0, top + extra + 1))
    table = np.array(list(itertools.product(*ranges)), dtype=np.int64).reshape(-1, nvars)
    table.setflags(write=False)
    return table


def degree_box(ring: RingSpec, T: int, top: int, extra: int = 0, prune: bool = True
               ) -> Iterator[Degree]:
    """Representative degrees in lexicographic order.

    Torsion variables range over ``[-1-extra, top+extra]`` and the others over
    ``[0, top+extra]``, where ``top`` is the largest generator exponent (at
    least 1).  With ``prune``, degrees in which a torsion variable sits at or
    above every generator exponent are skipped: membership then ignores that
    variable and the strand is a cone, hence acyclic.
    """
    for exps in _degree_table(ring.nvars, T, top, extra, prune).tolist():
        yield Degree(tuple(exps))


@dataclass(frozen=True)
class CohomologyProfile:
    """Which ``H^i_T(M)`` vanish, for ``i = 0..|T|``, with a witness degree each."""

    ring: RingSpec
    torsion: int
    field: FieldSpec
    nonvanishing: tuple[bool, ...]
    witnesses: tuple[Degree | None, ...]

    @property
    def is_zero_module(self) -> bool:
        return not any(self.nonvanishing)

    @property
    def indices(self) -> list[int]:
        return [i for i, f in enumerate(self.nonvanishing) if f]

    @property
    def grade(self) -> int | None:
        """Least nonvanishing index; ``None`` for the zero module."""
        idx = self.indices
        return idx[0] if idx else None

    @property
    def cd(self) -> int | None:
        """Largest nonvanishing index; ``None`` for the zero module."""
        idx = self.indices
        return idx[-1] if idx else None

    @property
    def is_cohen_macaulay(self) -> bool:
        return not self.is_zero_module and self.grade == self.cd

    @property
    def full_interval(self) -> bool:
        """Nonvanishing at every index between grade and cd."""
        if self.is_zero_module:
            return False
        return all(self.nonvanishing[self.grade:self.cd + 1])

    def vanishes_below(self, k: int) -> bool:
        return not any(self.nonvanishing[:max(k, 0)])


def _obstruction_matrix(gens: frozenset, degrees: np.ndarray) -> np.ndarray:
    """``out[d, j]``: mask of variables where generator ``j`` exceeds degree ``d``."""
    nvars = degrees.shape[1]
    g = np.array(sorted(gens), dtype=np.int64).reshape(-1, nvars)
    weights = np.int64(1) << np.arange(nvars, dtype=np.int64)
    return (g[None, :, :] > degrees[:, None, :]).astype(np.int64) @ weights


def _evaluate(a_gens: frozenset, b_gens: frozenset, nvars: int, T: int, characteristic: int,
              top: int, extra: int, prune: bool, fast: bool, part: tuple[int, int] | None = None
              ) -> tuple[list[bool], list[tuple[int, ...] | None]]:
    size = popcount(T) + 1
    flags = [False] * size
    wits: list[tuple[int, ...] | None] = [None] * size
    if extra == 0 and top <= 1:
        return _evaluate_squarefree(a_gens, b_gens, nvars, T, characteristic, prune, fast, part)
    degrees = _degree_table(nvars, T, top, extra, prune)
    if part is not None:
        degrees = degrees[part[0]:part[1]]
    if not len(degrees):
        return flags, wits
    neg = (degrees < 0).astype(np.int64) @ (np.int64(1) << np.arange(nvars, dtype=np.int64))
    n_a = len(a_gens)
    # one row per degree: its negative support and every generator's obstruction
    data = np.concatenate([neg[:, None], _obstruction_matrix(a_gens, degrees),
                           _obstruction_matrix(b_gens, degrees)], axis=1)
    # degrees with identical rows have identical strands; keep each first occurrence
    rows, first = np.unique(data, axis=0, return_index=True)
    order = np.argsort(first)
    for row, at in zip(rows[order].tolist(), first[order].tolist()):
        ng = row[0]
        rel_a = frozenset(b & ~ng for b in row[1:1 + n_a] if not b & ~T)
        if not rel_a:
            continue
        rel_b = frozenset(b & ~ng for b in row[1 + n_a:] if not b & ~T)
        dims = _relative_dims(T & ~ng, rel_a, rel_b, characteristic)
        if dims is None:
            continue
        shift = popcount(ng)
        for k, h in enumerate(dims):
            if h and not flags[shift + k]:
                flags[shift + k] = True
                wits[shift + k] = tuple(degrees[at].tolist())
        if fast and all(flags):
            break
    return flags, wits


@lru_cache(maxsize=256)
def _squarefree_table(nvars: int, T: int, prune: bool) -> tuple[tuple[tuple[int, ...], int, int], ...]:
    out = []
    for exps in _degree_table(nvars, T, 1, 0, prune).tolist():
        pos = sum(1 << i for i, e in enumerate(exps) if e > 0)
        neg = sum(1 << i for i, e in enumerate(exps) if e < 0)
        out.append((tuple(exps), pos, neg))
    return tuple(out)


def _evaluate_squarefree(a_gens, b_gens, nvars, T, characteristic, prune, fast, part):
    """Base box for 0/1 generators: the obstruction of ``g`` is ``neg | (g & ~pos)``."""
    size = popcount(T) + 1
    flags = [False] * size
    wits: list[tuple[int, ...] | None] = [None] * size
    a_masks = [sum(1 << i for i, e in enumerate(g) if e) for g in a_gens]
    b_masks = [sum(1 << i for i, e in enumerate(g) if e) for g in b_gens]
    table = _squarefree_table(nvars, T, prune)
    if part is not None:
        table = table[part[0]:part[1]]
    for exps, pos, neg in table:
        rel_a = frozenset(g & ~pos & ~neg for g in a_masks if not g & ~pos & ~T)
        if not rel_a:
            continue
        rel_b = frozenset(g & ~pos & ~neg for g in b_masks if not g & ~pos & ~T)
        dims = _relative_dims(T & ~neg, rel_a, rel_b, characteristic)
        if dims is None:
            continue
        shift = popcount(neg)
        for k, h in enumerate(dims):
            if h and not flags[shift + k]:
                flags[shift + k] = True
                wits[shift + k] = exps
        if fast and all(flags):
            break
    return flags, wits


def _jobs(jobs: int | None) -> int:
    if jobs is None:
        jobs = int(os.environ.get(JOBS_ENV, "1") or 1)
    return max(1, jobs)


def cohomology_profile(module: QuotientModule, T: int, field: FieldSpec = QQ, *,
                       extra: int = 0, prune: bool = True, fast: bool = False,
                       jobs: int | None = None) -> CohomologyProfile:
    """Nonvanishing pattern of ``H^i_T(module)`` over ``field``.

    ``extra`` enlarges the representative degree box in every direction; the
    enlarged box always goes through the general exponent-vector path.
    ``fast`` stops as soon as every index is known to be nonzero.  ``jobs`` > 1
    evaluates slices of the degree table in worker processes; the merge
    (per-index OR, lexicographically least witness) makes the result
    independent of the split.  ``jobs`` defaults to ``$SEQCM_JOBS`` or 1.
    """
    ring = module.ring
    if T & ~ring.all_mask:
        raise RingMismatchError("torsion set uses variables outside the ring")
    args = (module.A.gens, module.B.gens, ring.nvars, T, field.characteristic,
            module.max_exponent, extra, prune, fast)
    n_jobs = _jobs(jobs)
    if module.is_zero:
        size = popcount(T) + 1
        flags, wits = (False,) * size, (None,) * size
    elif n_jobs == 1:
        flags, wits = _profile_cached(*args)
    else:
        flags, wits = _profile_parallel(args, n_jobs)
    return CohomologyProfile(ring, T, field, tuple(flags),
                             tuple(None if w is None else Degree(w) for w in wits))


@lru_cache(maxsize=1 << 17)
def _profile_cached(*args) -> tuple[tuple[bool, ...], tuple]:
    flags, wits = _evaluate(*args)
    return tuple(flags), tuple(wits)


def _profile_parallel(args: tuple, jobs: int):
    a_gens, b_gens, nvars, T, characteristic, top, extra, prune, fast = args
    total = len(_degree_table(nvars, T, top, extra, prune))
    chunk = -(-total // jobs)
    parts = [(i, min(i + chunk, total)) for i in range(0, total, chunk)]
    size = popcount(T) + 1
    flags: list[bool] = [False] * size
    wits: list = [None] * size
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(_evaluate, *args, part) for part in parts]
        # slices are in lexicographic order, so the first witness seen is the least
        for fut in futures:
            f, w = fut.result()
            for i in range(size):
                if f[i] and not flags[i]:
                    flags[i], wits[i] = True, w[i]
    return flags, wits


def profile_of(I: Ideal, T: int, field: FieldSpec = QQ, **kw) -> CohomologyProfile:
    """Profile of the cyclic module ``S/I``."""
    return cohomology_profile(QuotientModule.cyclic(I), T, field, **kw)


def cd_of_prime(prime: int, T: int) -> int:
    """``cd(T, S/p)`` for the monomial prime on ``prime``: the free torsion variables."""
    return popcount(T & ~prime)


def cd_via_primes(I: SquarefreeIdeal, T: int) -> int:
    """``cd(T, S/I)`` as the maximum of ``cd(T, S/p)`` over the minimal primes."""
    return max(cd_of_prime(p.vars, T) for p in minimal_primes(I))


def cd_via_associated(I: GeneralMonomialIdeal, T: int) -> int:
    """As :func:`cd_via_primes`, for an arbitrary monomial ideal."""
    return max(cd_of_prime(p.vars, T) for p in associated_primes(I))
