"""Finite partial magmas presented by Cayley tables.

A partial magma is a non-empty finite carrier with a partial binary
operation that is defined on at least one pair.  Undefined products are
``None`` cells.  Everything is index-based: element ``i`` is
``elements[i]`` and ``table[i][j]`` holds the index of the product of
element ``i`` (row, left operand) with element ``j`` (column, right
operand), or ``None``.

All values are immutable after construction, so they can be shared
freely between concurrent tasks; every function here is pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import ParseError

# Whitespace separates tokens, ':' ends row labels, '#' starts comments.
_TOKEN_FORBIDDEN = set(" \t\r\n\f\v:#")


def _valid_token(tok: str) -> bool:
    return bool(tok) and tok != "-" and not any(c in _TOKEN_FORBIDDEN for c in tok)


@dataclass(frozen=True)
class Witness:
    """A finite counterexample to a structural check.

    ``kind`` names the failure, ``elements`` are the indices whose replay
    against the structure reproduces it.  Witnesses are falsy so that
    checkers can return ``True`` or a witness and callers can branch on
    truthiness.
    """

    kind: str
    elements: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))

    def __bool__(self) -> bool:
        return False

    def format(self, names: Sequence[str]) -> str:
        return "%s %s" % (self.kind, ",".join(str(names[i]) for i in self.elements))


@dataclass(frozen=True)
class PartialMagma:
    """A carrier plus a partial Cayley table."""

    elements: tuple[str, ...]
    table: tuple[tuple[int | None, ...], ...]

    def __post_init__(self):
        elements = tuple(self.elements)
        table = tuple(tuple(row) for row in self.table)
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "table", table)
        n = len(elements)
        if n == 0:
            raise ValueError("carrier must be non-empty")
        if len(set(elements)) != n:
            raise ValueError("duplicate element names")
        for name in elements:
            if not isinstance(name, str) or not _valid_token(name):
                raise ValueError(f"invalid element name {name!r}")
        if len(table) != n:
            raise ValueError(f"expected {n} table rows, got {len(table)}")
        defined = 0
        for row in table:
            if len(row) != n:
                raise ValueError(f"expected {n} entries per row, got {len(row)}")
            for cell in row:
                if cell is None:
                    continue
                if not isinstance(cell, int) or isinstance(cell, bool) or not 0 <= cell < n:
                    raise ValueError(f"table entry {cell!r} is not an element index")
                defined += 1
        if defined == 0:
            raise ValueError("the operation must be defined on at least one pair")

    @property
    def size(self) -> int:
        return len(self.elements)

    def index(self, name: str) -> int:
        try:
            return self.elements.index(name)
        except ValueError:
            raise KeyError(f"unknown element {name!r}") from None

    def product(self, x: int, y: int) -> int | None:
        return self.table[x][y]


def product(m: PartialMagma, x: int, y: int) -> int | None:
    """The table cell for (x, y); ``None`` means the product is undefined."""
    return m.table[x][y]


def precedes(m: PartialMagma, x: int, y: int) -> bool:
    """Whether x can stand before y in some defined expression.

    True iff xy is defined, or x(yz) is defined for some z, or (zx)y is
    defined for some z.  The quantification over z is existential.
    """
    t = m.table
    if t[x][y] is not None:
        return True
    for z in range(m.size):
        yz = t[y][z]
        if yz is not None and t[x][yz] is not None:
            return True
        zx = t[z][x]
        if zx is not None and t[zx][y] is not None:
            return True
    return False


def left_units(m: PartialMagma) -> tuple[int, ...]:
    """Elements e with ex = x whenever ex is defined."""
    t = m.table
    n = m.size
    return tuple(
        e for e in range(n)
        if all(t[e][x] is None or t[e][x] == x for x in range(n))
    )


def right_units(m: PartialMagma) -> tuple[int, ...]:
    """Elements e with xe = x whenever xe is defined."""
    t = m.table
    n = m.size
    return tuple(
        e for e in range(n)
        if all(t[x][e] is None or t[x][e] == x for x in range(n))
    )


def units(m: PartialMagma) -> tuple[int, ...]:
    """Two-sided units, under the literal (vacuously permitting) reading.

    An element with no defined products at all qualifies; downstream
    checks that need effective units filter such pathologies out.
    """
    rights = set(right_units(m))
    return tuple(e for e in left_units(m) if e in rights)


def effective_units(m: PartialMagma, x: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Units e with ex defined, and units e with xe defined.

    In a verified poloid both tuples are singletons.
    """
    t = m.table
    e_set = units(m)
    lefts = tuple(e for e in e_set if t[e][x] is not None)
    rights = tuple(e for e in e_set if t[x][e] is not None)
    return lefts, rights


def _fresh_zero_name(elements: Sequence[str]) -> str:
    name = "0"
    while name in elements:
        name += "0"
    return name


def adjoin_zero(m: PartialMagma) -> PartialMagma:
    """Total magma on the carrier plus an absorbing zero.

    Defined cells are copied, undefined cells map to the new zero, and
    the zero annihilates everything.  Product xy of the original is
    recovered as "defined iff nonzero".
    """
    n = m.size
    zero = n
    rows = [
        tuple(cell if cell is not None else zero for cell in row) + (zero,)
        for row in m.table
    ]
    rows.append((zero,) * (n + 1))
    return PartialMagma(m.elements + (_fresh_zero_name(m.elements),), tuple(rows))


def parse_magma(text: str) -> PartialMagma:
    """Parse the line-oriented magma file format.

    Format: a line ``elements: <tok> ...`` followed by one row per
    element, in carrier order: ``<tok>: <entry> ...`` where an entry is
    an element token or ``-`` for undefined.  ``#`` starts a comment.
    """
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise ParseError("empty magma file")
    head, sep, rest = lines[0].partition(":")
    if head.strip() != "elements" or not sep:
        raise ParseError("magma file must start with an 'elements:' line")
    names = rest.split()
    if not names:
        raise ParseError("no elements listed")
    for name in names:
        if not _valid_token(name):
            raise ParseError(f"invalid element token {name!r}")
    if len(set(names)) != len(names):
        raise ParseError("duplicate element name")
    n = len(names)
    index = {name: i for i, name in enumerate(names)}
    body = lines[1:]
    if len(body) != n:
        raise ParseError(f"expected {n} table rows, got {len(body)}")
    table = []
    for i, line in enumerate(body):
        label, sep, entries_text = line.partition(":")
        if not sep:
            raise ParseError(f"table row without ':': {line!r}")
        label = label.strip()
        if label != names[i]:
            raise ParseError(f"expected row for {names[i]!r}, got {label!r}")
        entries = entries_text.split()
        if len(entries) != n:
            raise ParseError(f"row {label!r}: expected {n} entries, got {len(entries)}")
        row = []
        for tok in entries:
            if tok == "-":
                row.append(None)
            elif tok in index:
                row.append(index[tok])
            else:
                raise ParseError(f"row {label!r}: unknown element token {tok!r}")
        table.append(tuple(row))
    if all(cell is None for row in table for cell in row):
        raise ParseError("all products undefined: the operation must be non-empty")
    return PartialMagma(tuple(names), tuple(table))


def serialize_magma(m: PartialMagma) -> str:
    """Canonical rendering; inverse of :func:`parse_magma`."""
    out = ["elements: " + " ".join(m.elements)]
    for name, row in zip(m.elements, m.table):
        cells = " ".join("-" if c is None else m.elements[c] for c in row)
        out.append(f"{name}: {cells}")
    return "\n".join(out) + "\n"
