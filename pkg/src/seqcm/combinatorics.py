"""Monomials, monomial ideals and their minimal primes over a bigraded ring.

Variables are numbered ``0 .. m+n-1``; the first ``m`` are ``x1..xm`` and the
remaining ``n`` are ``y1..yn``.  Variable sets are stored as ``int`` bitmasks,
so squarefree ideal algebra reduces to set algebra on small integers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence


class DecompositionError(ValueError):
    """Raised when an ideal has no proper primary decomposition (unit or zero)."""


class RingMismatchError(ValueError):
    pass


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def subsets(mask: int) -> Iterator[int]:
    """Yield every submask of ``mask`` (including 0 and ``mask``), small first."""
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask


def minimalize(masks: Iterable[int]) -> frozenset[int]:
    """Antichain reduction under inclusion: keep only the minimal sets."""
    kept: list[int] = []
    for s in sorted(set(masks), key=popcount):
        if not any(k & s == k for k in kept):
            kept.append(s)
    return frozenset(kept)


@dataclass(frozen=True)
class RingSpec:
    """The bigraded ring ``K[x1..xm, y1..yn]``."""

    m: int
    n: int

    def __post_init__(self):
        if self.m < 0 or self.n < 0 or self.m + self.n < 1:
            raise ValueError(f"invalid ring shape m={self.m}, n={self.n}")

    @property
    def nvars(self) -> int:
        return self.m + self.n

    @property
    def x_mask(self) -> int:
        return (1 << self.m) - 1

    @property
    def y_mask(self) -> int:
        return ((1 << self.n) - 1) << self.m

    @property
    def all_mask(self) -> int:
        return (1 << self.nvars) - 1

    def var_name(self, i: int) -> str:
        if not 0 <= i < self.nvars:
            raise IndexError(i)
        return f"x{i + 1}" if i < self.m else f"y{i - self.m + 1}"

    def var_index(self, name: str) -> int:
        """Index of a variable named like ``x2`` or ``y1``; ``KeyError`` if absent."""
        block, num = name[:1], name[1:]
        if block not in ("x", "y") or not num.isdigit() or num.startswith("0"):
            raise KeyError(name)
        k = int(num)
        limit = self.m if block == "x" else self.n
        if not 1 <= k <= limit:
            raise KeyError(name)
        return k - 1 if block == "x" else self.m + k - 1

    def names(self, mask: int) -> list[str]:
        return [self.var_name(i) for i in bits(mask)]

    def torsion(self, which: str) -> int:
        """Variable mask for ``"P"`` (x-block), ``"Q"`` (y-block) or ``"m"`` (all)."""
        try:
            return {"P": self.x_mask, "Q": self.y_mask, "m": self.all_mask}[which]
        except KeyError:
            raise ValueError(f"torsion set must be P, Q or m, not {which!r}") from None

    def mask_of(self, names: Iterable[str]) -> int:
        mask = 0
        for nm in names:
            mask |= 1 << self.var_index(nm)
        return mask


@dataclass(frozen=True)
class SquarefreeMonomial:
    ring: RingSpec
    support: int

    def __str__(self):
        return "*".join(self.ring.names(self.support)) or "1"


@dataclass(frozen=True)
class MonomialPrime:
    """The prime ideal generated by the variables in ``vars``."""

    ring: RingSpec
    vars: int

    def codim(self) -> int:
        return popcount(self.vars)

    def ideal(self) -> "SquarefreeIdeal":
        return SquarefreeIdeal(self.ring, frozenset(1 << v for v in bits(self.vars)))

    def __str__(self):
        return "(" + ", ".join(self.ring.names(self.vars)) + ")"


@dataclass(frozen=True)
class SquarefreeIdeal:
    """Squarefree monomial ideal given by the supports of its generators.

    The generator set is reduced to an antichain on construction.  The unit
    ideal is ``{0}`` (the monomial 1) and the zero ideal is the empty set.
    """

    ring: RingSpec
    gens: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        full = self.ring.all_mask
        if any(g & ~full for g in self.gens):
            raise RingMismatchError("generator uses a variable outside the ring")
        object.__setattr__(self, "gens", minimalize(self.gens))

    @classmethod
    def from_names(cls, ring: RingSpec, monomials: Iterable[Iterable[str]]):
        return cls(ring, frozenset(ring.mask_of(mono) for mono in monomials))

    @classmethod
    def unit(cls, ring: RingSpec):
        return cls(ring, frozenset({0}))

    @classmethod
    def zero(cls, ring: RingSpec):
        return cls(ring, frozenset())

    @property
    def is_unit(self) -> bool:
        return 0 in self.gens

    @property
    def is_zero(self) -> bool:
        return not self.gens

    def contains(self, support: int) -> bool:
        """Membership of the squarefree monomial with the given support."""
        return any(g & support == g for g in self.gens)

    def issubset(self, other: "SquarefreeIdeal") -> bool:
        _check_same_ring(self, other)
        return all(other.contains(g) for g in self.gens)

    def in_prime(self, prime: int) -> bool:
        """Whether this ideal lies inside the monomial prime on ``prime``."""
        return all(g & prime for g in self.gens)

    def sorted_gens(self) -> list[int]:
        return sorted(self.gens, key=lambda g: (popcount(g), _lex_key(g)))

    def to_general(self) -> "GeneralMonomialIdeal":
        nv = self.ring.nvars
        # an antichain of supports is already a minimal generating set
        return GeneralMonomialIdeal._trusted(
            self.ring, frozenset(tuple((g >> i) & 1 for i in range(nv)) for g in self.gens))

    def __str__(self):
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(
            str(SquarefreeMonomial(self.ring, g)) for g in self.sorted_gens()
        ) + ")"


def _lex_key(mask: int) -> tuple[int, ...]:
    return tuple(bits(mask))


def _check_same_ring(*ideals):
    rings = {I.ring for I in ideals}
    if len(rings) > 1:
        raise RingMismatchError(f"ideals live in different rings: {rings}")


def _divides(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))


@dataclass(frozen=True)
class GeneralMonomialIdeal:
    """Monomial ideal given by minimal generator exponent vectors."""

    ring: RingSpec
    gens: frozenset[tuple[int, ...]] = field(default_factory=frozenset)

    def __post_init__(self):
        nv = self.ring.nvars
        for g in self.gens:
            if len(g) != nv or any(e < 0 for e in g):
                raise RingMismatchError(f"bad exponent vector {g} for {nv} variables")
        gs = sorted(set(self.gens), key=sum)
        kept: list[tuple[int, ...]] = []
        for g in gs:
            if not any(_divides(k, g) for k in kept):
                kept.append(g)
        object.__setattr__(self, "gens", frozenset(kept))

    @classmethod
    def _trusted(cls, ring: RingSpec, gens: frozenset[tuple[int, ...]]):
        obj = object.__new__(cls)
        object.__setattr__(obj, "ring", ring)
        object.__setattr__(obj, "gens", gens)
        return obj

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self.gens for e in g)

    @property
    def is_unit(self) -> bool:
        return any(not any(g) for g in self.gens)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def max_exponent(self) -> int:
        return max((e for g in self.gens for e in g), default=0)

    def contains(self, exps: Sequence[int]) -> bool:
        return any(_divides(g, exps) for g in self.gens)

    def to_squarefree(self) -> SquarefreeIdeal:
        if not self.is_squarefree:
            raise ValueError("ideal is not squarefree")
        return SquarefreeIdeal(
            self.ring,
            frozenset(sum(1 << i for i, e in enumerate(g) if e) for g in self.gens),
        )

    def sorted_gens(self) -> list[tuple[int, ...]]:
        return sorted(self.gens, key=lambda g: (sum(g), tuple(-e for e in g)))

    def __str__(self):
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(monomial_str(self.ring, g) for g in self.sorted_gens()) + ")"


def monomial_str(ring: RingSpec, exps: Sequence[int]) -> str:
    parts = []
    for i, e in enumerate(exps):
        if e == 1:
            parts.append(ring.var_name(i))
        elif e > 1:
            parts.append(f"{ring.var_name(i)}^{e}")
    return "*".join(parts) or "1"


def minimal_transversals(edges: Iterable[int]) -> frozenset[int]:
    """Minimal vertex covers of a hypergraph given as bitmask edges.

    Incremental (Berge) scheme: extend the current minimal covers to hit each
    new edge, pruning to an antichain after every step.  An empty edge has no
    transversal; no edges yields the single empty cover.
    """
    covers = frozenset({0})
    for e in sorted(set(edges), key=popcount):
        if e == 0:
            return frozenset()
        grown = set()
        for c in covers:
            if c & e:
                grown.add(c)
            else:
                grown.update(c | (1 << v) for v in bits(e))
        covers = minimalize(grown)
    return covers


def minimal_primes(I: SquarefreeIdeal) -> list[MonomialPrime]:
    """Minimal primes of a proper nonzero squarefree ideal, as minimal covers."""
    if I.is_unit or I.is_zero:
        raise DecompositionError(f"no proper decomposition for {I}")
    covers = minimal_transversals(I.gens)
    return [MonomialPrime(I.ring, c) for c in sorted(covers, key=_lex_key)]


def intersect(ideals: Sequence[SquarefreeIdeal], ring: RingSpec | None = None) -> SquarefreeIdeal:
    """Intersection of squarefree ideals; the empty intersection is the unit ideal."""
    if not ideals:
        if ring is None:
            raise ValueError("empty intersection needs an explicit ring")
        return SquarefreeIdeal.unit(ring)
    _check_same_ring(*ideals)
    acc = ideals[0].gens
    for J in ideals[1:]:
        acc = minimalize(a | b for a in acc for b in J.gens)
    return SquarefreeIdeal(ideals[0].ring, acc)


def intersect_primes(ring: RingSpec, primes: Iterable[MonomialPrime | int]) -> SquarefreeIdeal:
    """Intersection of monomial primes, given as ``MonomialPrime`` or variable masks."""
    masks = [p.vars if isinstance(p, MonomialPrime) else p for p in primes]
    return SquarefreeIdeal(ring, minimal_transversals(masks))


def ideal_sum(I: SquarefreeIdeal, J: SquarefreeIdeal) -> SquarefreeIdeal:
    _check_same_ring(I, J)
    return SquarefreeIdeal(I.ring, I.gens | J.gens)


def complex_facets(I: SquarefreeIdeal) -> list[int]:
    """Facets of the Stanley-Reisner complex: complements of the minimal covers."""
    full = I.ring.all_mask
    if I.is_unit:
        return []
    return sorted((full & ~c for c in minimal_transversals(I.gens)), key=_lex_key)


def dim_of_quotient(I: SquarefreeIdeal) -> int:
    """Krull dimension of ``S/I``: the largest facet size (-1 for the unit ideal)."""
    return max((popcount(f) for f in complex_facets(I)), default=-1)


def associated_primes(I: GeneralMonomialIdeal) -> list[MonomialPrime]:
    """Associated primes of ``S/I`` for an arbitrary monomial ideal.

    A monomial prime ``p`` is associated iff ``I : u = p`` for some monomial
    ``u`` outside ``I``.  Exponents of ``u`` above the largest generator
    exponent never change the colon, so a bounded box search is exhaustive.
    """
    ring = I.ring
    if I.is_unit or I.is_zero:
        raise DecompositionError(f"no proper decomposition for {I}")
    top = I.max_exponent
    found = set()
    for u in itertools.product(range(top + 1), repeat=ring.nvars):
        if I.contains(u):
            continue
        colon = GeneralMonomialIdeal(
            ring, frozenset(tuple(max(g - e, 0) for g, e in zip(gen, u)) for gen in I.gens)
        )
        prime = 0
        for g in colon.gens:
            if sum(g) != 1:
                break
            prime |= 1 << g.index(1)
        else:
            found.add(prime)
    return [MonomialPrime(ring, p) for p in sorted(found, key=_lex_key)]


def squarefree_antichains(nvars: int) -> Iterator[frozenset[int]]:
    """Every antichain of subsets of ``nvars`` elements (every squarefree ideal)."""
    universe = sorted(range(1 << nvars), key=lambda s: (popcount(s), s))

    def extend(start: int, chosen: list[int]):
        yield frozenset(chosen)
        for k in range(start, len(universe)):
            s = universe[k]
            if all(c & s != c and c & s != s for c in chosen):
                chosen.append(s)
                yield from extend(k + 1, chosen)
                chosen.pop()

    yield from extend(0, [])
