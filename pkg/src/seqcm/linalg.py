"""Exact ranks and cochain cohomology over the rationals and prime fields.

No floating point is used.  Over the rationals ranks come from fraction-free
(Bareiss) elimination on Python integers; over GF(p) from modular elimination,
with rows packed into integer bitmasks when p = 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


class StructuralError(AssertionError):
    """A complex violated d∘d = 0 or an internal consistency check (a bug)."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    characteristic: int = 0

    def __post_init__(self):
        c = self.characteristic
        if c != 0 and not _is_prime(c):
            raise ValueError(f"characteristic must be 0 or a prime, got {c}")
        if c > 1 << 16:
            raise ValueError("prime characteristic must be at most 2^16")

    def __str__(self):
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"


QQ = FieldSpec(0)
GF2 = FieldSpec(2)


@dataclass(frozen=True)
class SignMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entries do not match the declared shape")
        if any(e not in (-1, 0, 1) for r in self.entries for e in r):
            raise ValueError("sign matrices only hold -1, 0, +1")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None):
        entries = tuple(tuple(r) for r in rows)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        return cls(len(entries), cols, entries)

    @classmethod
    def zeros(cls, rows: int, cols: int):
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))


def _rank_gf2(rows: Sequence[Sequence[int]]) -> int:
    pivots: dict[int, int] = {}
    for row in rows:
        v = 0
        for j, e in enumerate(row):
            if e & 1:
                v |= 1 << j
        while v:
            top = v.bit_length() - 1
            if top not in pivots:
                pivots[top] = v
                break
            v ^= pivots[top]
    return len(pivots)


def _rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    a = [[e % p for e in r] for r in rows]
    a = [r for r in a if any(r)]
    rank = 0
    ncols = len(a[0]) if a else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(a)) if a[i][c]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = pow(a[rank][c], p - 2, p)
        prow = [(e * inv) % p for e in a[rank]]
        a[rank] = prow
        for i in range(len(a)):
            if i != rank and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], prow)]
        rank += 1
    return rank


def _rank_bareiss(rows: Sequence[Sequence[int]]) -> int:
    a = [list(r) for r in rows if any(r)]
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    rank, prev = 0, 1
    for c in range(ncols):
        piv = next((i for i in range(rank, nrows) if a[i][c]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][c]
        for i in range(rank + 1, nrows):
            f = a[i][c]
            # every division here is exact (Sylvester identity)
            a[i] = [(p * x - f * y) // prev for x, y in zip(a[i], a[rank])]
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def rank_rows(rows: Sequence[Sequence[int]], characteristic: int) -> int:
    """Rank of an integer matrix given as row lists, over QQ (0) or GF(p)."""
    if not rows:
        return 0
    if characteristic == 0:
        return _rank_bareiss(rows)
    if characteristic == 2:
        return _rank_gf2(rows)
    return _rank_mod_p(rows, characteristic)


def rank(mat: SignMatrix, field: FieldSpec = QQ) -> int:
    return rank_rows(mat.entries, field.characteristic)


@dataclass(frozen=True)
class ChainComplex:
    """Cochain complex ``C^0 -> C^1 -> ... -> C^k``.

    ``dims[i]`` is the dimension of ``C^i`` and ``maps[i]`` is the differential
    ``d^i : C^i -> C^{i+1}`` as a ``dims[i+1] x dims[i]`` matrix.  A ``shift``
    relabels the first component as ``C^shift``.
    """

    dims: tuple[int, ...]
    maps: tuple[SignMatrix, ...]
    shift: int = 0

    def __post_init__(self):
        if len(self.maps) != max(len(self.dims) - 1, 0):
            raise ValueError("need exactly one differential between consecutive components")
        for i, d in enumerate(self.maps):
            if (d.rows, d.cols) != (self.dims[i + 1], self.dims[i]):
                raise ValueError(f"d^{i} has shape {d.rows}x{d.cols}, "
                                 f"expected {self.dims[i + 1]}x{self.dims[i]}")

    def euler_characteristic(self) -> int:
        return sum((-1) ** (i + self.shift) * d for i, d in enumerate(self.dims))

    def check_square_zero(self) -> None:
        for i in range(len(self.maps) - 1):
            a, b = self.maps[i].entries, self.maps[i + 1].entries
            for r in range(len(b)):
                for c in range(self.dims[i]):
                    if sum(b[r][k] * a[k][c] for k in range(len(a))):
                        raise StructuralError(f"d^{i + 1} o d^{i} != 0 at ({r}, {c})")


def cohomology_dims(cx: ChainComplex, field: FieldSpec = QQ) -> list[int]:
    """``dim H^i`` for each component, indexed from the complex's first slot."""
    cx.check_square_zero()
    ranks = [rank(d, field) for d in cx.maps]
    out = []
    for i, dim in enumerate(cx.dims):
        out_rank = ranks[i] if i < len(ranks) else 0
        in_rank = ranks[i - 1] if i > 0 else 0
        h = dim - out_rank - in_rank
        if h < 0:
            raise StructuralError(f"negative cohomology dimension at index {i}")
        out.append(h)
    chi = sum((-1) ** (i + cx.shift) * h for i, h in enumerate(out))
    if chi != cx.euler_characteristic():
        raise StructuralError("Euler characteristic mismatch")
    return out
