"""The ideal document text format.

Grammar (one statement per line, ``#`` starts a comment)::

    document   := statement*
    statement  := "ring" INT INT          # m x-variables, n y-variables; exactly once, first
                | "name" WORD
                | "chars" INT+            # field characteristics, 0 or primes
                | "gens" monomial ("," monomial)* ","?
    monomial   := "1" | power ("*" power)*
    power      := VAR ("^" INT)?
    VAR        := ("x" | "y") INT         # x1..xm, y1..yn

``gens`` may repeat; its lists accumulate.  A trailing comma continues the
list on the next ``gens`` line, purely for readability.  Example::

    ring 2 2
    name squares
    gens x1^2, x1*x2, y1^2, y1*y2
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

from .combinatorics import GeneralMonomialIdeal, RingSpec, SquarefreeIdeal, monomial_str
from .linalg import FieldSpec


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.reason = message


_POWER = re.compile(r"([A-Za-z]+)(\d+)(?:\^(\d+))?$")
_WORD = re.compile(r"[A-Za-z0-9_.\-]+$")


@dataclass(frozen=True)
class IdealDocument:
    ring: RingSpec
    generators: tuple[tuple[int, ...], ...]
    name: str | None = None
    characteristics: tuple[int, ...] = field(default=())

    def __post_init__(self):
        ideal = GeneralMonomialIdeal(self.ring, self.generators)
        object.__setattr__(self, "generators", tuple(ideal.sorted_gens()))

    @property
    def squarefree(self) -> bool:
        return all(e <= 1 for g in self.generators for e in g)

    def general(self) -> GeneralMonomialIdeal:
        return GeneralMonomialIdeal(self.ring, self.generators)

    def ideal(self) -> SquarefreeIdeal | GeneralMonomialIdeal:
        g = self.general()
        return g.to_squarefree() if self.squarefree else g

    def fields(self) -> tuple[FieldSpec, ...]:
        return tuple(FieldSpec(c) for c in self.characteristics) or (FieldSpec(0),)

    def generator_strings(self) -> list[str]:
        return [monomial_str(self.ring, g) for g in self.generators]


def _parse_monomial(text: str, ring: RingSpec, line: int, col: int) -> tuple[int, ...]:
    exps = [0] * ring.nvars
    if text == "1":
        return tuple(exps)
    offset = 0
    for piece in text.split("*"):
        pos = col + offset
        offset += len(piece) + 1
        token = piece.strip()
        pos += len(piece) - len(piece.lstrip())
        match = _POWER.match(token)
        if not match:
            raise ParseError(f"malformed power {token!r}", line, pos)
        var = match.group(1) + match.group(2)
        try:
            idx = ring.var_index(var)
        except KeyError:
            raise ParseError(f"unknown variable {var!r} in ring ({ring.m}, {ring.n})",
                             line, pos) from None
        power = int(match.group(3) or 1)
        if power < 1:
            raise ParseError(f"malformed power {token!r}", line, pos)
        exps[idx] += power
    return tuple(exps)


def parse_ideal(text: str) -> IdealDocument:
    ring = None
    name = None
    chars: tuple[int, ...] = ()
    gens: list[tuple[int, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        stripped = line.lstrip()
        if not stripped:
            continue
        indent = len(line) - len(stripped)
        key, _, rest = stripped.partition(" ")
        rest_col = indent + len(key) + 2
        if key == "ring":
            if ring is not None:
                raise ParseError("duplicate ring declaration", lineno, indent + 1)
            parts = rest.split()
            if len(parts) != 2 or not all(p.isdigit() for p in parts):
                raise ParseError("ring needs two nonnegative integers m n", lineno, rest_col)
            ring = RingSpec(int(parts[0]), int(parts[1]))
            if ring.nvars == 0:
                raise ParseError("ring needs at least one variable", lineno, rest_col)
        elif ring is None:
            raise ParseError("ring declaration must come first", lineno, indent + 1)
        elif key == "name":
            if name is not None:
                raise ParseError("duplicate name", lineno, indent + 1)
            if not _WORD.match(rest.strip()):
                raise ParseError("name must be a single word", lineno, rest_col)
            name = rest.strip()
        elif key == "chars":
            values = []
            for tok in rest.split():
                try:
                    values.append(FieldSpec(int(tok)).characteristic)
                except ValueError:
                    raise ParseError(f"bad characteristic {tok!r}", lineno,
                                     rest_col + rest.find(tok)) from None
            if not values:
                raise ParseError("chars needs at least one value", lineno, rest_col)
            chars = tuple(values)
        elif key == "gens":
            col = rest_col
            for chunk in rest.split(","):
                if chunk.strip():
                    lead = len(chunk) - len(chunk.lstrip())
                    gens.append(_parse_monomial(chunk.strip(), ring, lineno, col + lead))
                col += len(chunk) + 1
        else:
            raise ParseError(f"unknown statement {key!r}", lineno, indent + 1)
    if ring is None:
        raise ParseError("missing ring declaration", 1, 1)
    return IdealDocument(ring, tuple(gens), name, chars)


def serialize(doc: IdealDocument) -> str:
    lines = [f"ring {doc.ring.m} {doc.ring.n}"]
    if doc.name:
        lines.append(f"name {doc.name}")
    if doc.characteristics:
        lines.append("chars " + " ".join(map(str, doc.characteristics)))
    mons = doc.generator_strings()
    for i in range(0, len(mons), 6):
        lines.append("gens " + ", ".join(mons[i:i + 6]))
    return "\n".join(lines) + "\n"


BUILTIN_TEXT = {
    "rp2": """\
# Stanley-Reisner ideal of a six-vertex triangulation of the real projective plane.
# Cohen-Macaulay exactly when the characteristic is not 2.
ring 3 3
name rp2
chars 0 2 3
gens x1*x2*x3, x1*x2*y1, x1*x3*y2, x1*y1*y3, x1*y2*y3,
gens x2*x3*y3, x2*y1*y2, x2*y2*y3, x3*y1*y2, x3*y1*y3
""",
    "moebius": """\
# Stanley-Reisner ideal of a Moebius band triangulation.
ring 3 3
name moebius
gens x1*x3, x1*y2, x2*y3, x2*x3*y1, x3*y1*y2, y1*y2*y3
""",
    "squares": """\
# Not Cohen-Macaulay: the y-block profile is full but the dimension count fails.
ring 2 2
name squares
gens x1^2, x1*x2, y1^2, y1*y2
""",
}

BUILTINS = {key: parse_ideal(text) for key, text in BUILTIN_TEXT.items()}


def load(source: str) -> IdealDocument:
    """A built-in name, ``-`` for stdin, or a path."""
    if source in BUILTINS:
        return BUILTINS[source]
    if source == "-":
        import sys
        return parse_ideal(sys.stdin.read())
    return parse_ideal(Path(source).read_text(encoding="utf-8"))
