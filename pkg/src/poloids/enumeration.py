"""Exhaustive generation of partial Cayley tables.

Tables on n elements are encoded flat: a tuple of n*n entries in
``range(n + 1)``, where ``n`` stands for an undefined cell; the
all-undefined table is excluded.  ``filtered`` prunes the search tree
on definite one-sided associativity violations, which is sound for
every verdict class except ``total`` (all the others imply the
right-directed triple law); the survivors are still run through the
real checkers.
"""

from __future__ import annotations

from itertools import permutations, product as iproduct
from typing import Iterator

from .classify import (
    VERDICT_NAMES,
    classify,
    is_group,
    is_groupoid,
    is_monoid,
    is_normal,
    is_poloid,
    is_right_directed_semigroupoid,
    is_right_poloid,
    is_semigroupoid,
    is_total,
    is_unit_posetal,
)
from .errors import BoundExceeded
from .tables import PartialMagma

ELEMENT_NAMES = ("a", "b", "c", "d", "e", "f", "g", "h")

RAW_BOUND = 3
FILTERED_BOUND = 4

# classes whose members are always right-directed semigroupoids
_RD_CLASSES = frozenset(VERDICT_NAMES) - {"total"}

_CHECKS = {
    "semigroupoid": is_semigroupoid,
    "poloid": is_poloid,
    "groupoid": is_groupoid,
    "total": is_total,
    "monoid": is_monoid,
    "group": is_group,
    "right_directed_semigroupoid": is_right_directed_semigroupoid,
    "right_poloid": is_right_poloid,
    "normal": lambda m: bool(is_right_poloid(m)) and bool(is_normal(m)),
    "unit_posetal": lambda m: bool(is_right_poloid(m)) and bool(is_unit_posetal(m)),
}


def matches(m: PartialMagma, verdict: str) -> bool:
    """Whether the magma belongs to the named verdict class."""
    if verdict not in _CHECKS:
        raise ValueError(f"unknown class {verdict!r}")
    return bool(_CHECKS[verdict](m))


def from_flat(flat, n: int, elements=None) -> PartialMagma:
    names = tuple(elements) if elements is not None else ELEMENT_NAMES[:n]
    table = tuple(
        tuple(v if v < n else None for v in flat[i * n:(i + 1) * n]) for i in range(n)
    )
    return PartialMagma(names, table)


def to_flat(m: PartialMagma) -> tuple[int, ...]:
    n = m.size
    return tuple(n if c is None else c for row in m.table for c in row)


def all_magmas(n: int, bound: int = RAW_BOUND) -> Iterator[PartialMagma]:
    """Every partial magma on n elements, in lexicographic table order."""
    if not 1 <= n <= bound:
        raise BoundExceeded(f"raw enumeration supports 1..{bound} elements, got {n}")
    empty = (n,) * (n * n)
    for flat in iproduct(range(n + 1), repeat=n * n):
        if flat != empty:
            yield from_flat(flat, n)


def _prefix_violates_rd(values: list[int], n: int, undef: int) -> bool:
    """Definite right-directed-law violation in a partially built table.

    Cells hold an element index, ``undef``, or ``-1`` for not yet
    chosen.  Only violations that no later choice can repair count.
    """
    for x in range(n):
        for y in range(n):
            xy = values[x * n + y]
            if xy < 0 or xy == undef:
                continue
            for z in range(n):
                yz = values[y * n + z]
                wz = values[xy * n + z]
                if yz == undef:
                    if wz >= 0 and wz != undef:
                        return True  # (xy)z defined forces yz defined
                    continue
                if yz < 0:
                    continue
                # trigger holds: xy and yz defined
                if wz == undef:
                    return True
                xv = values[x * n + yz]
                if xv == undef:
                    return True
                if wz >= 0 and xv >= 0 and wz != xv:
                    return True
    return False


def filtered(n: int, verdict: str, bound: int = FILTERED_BOUND) -> Iterator[PartialMagma]:
    """Every partial magma on n elements in the given class.

    Uses the pruned search for classes that imply the right-directed
    law and a defined-cells-only product space for ``total``.
    """
    if verdict not in _CHECKS:
        raise ValueError(f"unknown class {verdict!r}")
    if not 1 <= n <= bound:
        raise BoundExceeded(f"filtered enumeration supports 1..{bound} elements, got {n}")
    if verdict not in _RD_CLASSES:
        if n > RAW_BOUND:
            raise BoundExceeded(f"class {verdict!r} cannot be pruned; maximum is {RAW_BOUND}")
        for m in all_magmas(n):
            if matches(m, verdict):
                yield m
        return
    if n <= 2:
        # tiny spaces: brute force is simpler than the pruned walk
        for m in all_magmas(n):
            if matches(m, verdict):
                yield m
        return

    undef = n
    cells = n * n
    values = [-1] * cells

    def walk(k: int) -> Iterator[PartialMagma]:
        if k == cells:
            if all(v == undef for v in values):
                return
            m = from_flat(tuple(values), n)
            if matches(m, verdict):
                yield m
            return
        for v in range(n + 1):
            values[k] = v
            if not _prefix_violates_rd(values, n, undef):
                yield from walk(k + 1)
        values[k] = -1

    yield from walk(0)


def count_by_class(n: int) -> dict[str, int]:
    """How many partial magmas on n elements fall in each verdict class."""
    counts = {name: 0 for name in VERDICT_NAMES}
    total = 0
    for m in all_magmas(n):
        total += 1
        report = classify(m)
        for name, ok in report.verdicts.items():
            if ok:
                counts[name] += 1
    counts["partial_magmas"] = total
    return counts


def canonical_form(m: PartialMagma) -> tuple[int, ...]:
    """The least relabelling of the flat table over all carrier permutations."""
    n = m.size
    flat = to_flat(m)
    best = None
    for perm in permutations(range(n)):
        relabeled = tuple(
            n if flat[perm.index(x) * n + perm.index(y)] == n
            else perm[flat[perm.index(x) * n + perm.index(y)]]
            for x in range(n)
            for y in range(n)
        )
        if best is None or relabeled < best:
            best = relabeled
    return best
