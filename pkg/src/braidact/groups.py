"""Finite groups as explicit multiplication tables.

Tables are validated on construction (identity, inverses, associativity),
so downstream counting loops can trust them blindly.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from pathlib import Path

__all__ = [
    "DEFAULT_FINGERPRINT_GROUPS",
    "FiniteGroupTable",
    "builtin_group",
    "cyclic_group",
    "dihedral_group",
    "group_from_table",
    "load_group_table",
    "symmetric_group",
]

# Battery used by the invariant fingerprints unless the caller says otherwise.
DEFAULT_FINGERPRINT_GROUPS = ("Z2", "Z3", "Z4", "Z5", "S3", "S4")

_NAME = re.compile(r"([ZSD])([1-9][0-9]*)")


@dataclass(frozen=True)
class FiniteGroupTable:
    name: str
    table: tuple[tuple[int, ...], ...]
    identity: int
    inverse: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def inv(self, x: int) -> int:
        return self.inverse[x]

    def __str__(self) -> str:
        return f"{self.name} (order {self.order})"


def group_from_table(name: str, rows: list[list[int]]) -> FiniteGroupTable:
    """Build and validate a group from a raw multiplication table."""
    order = len(rows)
    if order == 0:
        raise ValueError("a group table needs at least the identity element")
    for row in rows:
        if len(row) != order or any(not 0 <= x < order for x in row):
            raise ValueError("table must be square with entries in 0..order-1")
    identity = None
    for e in range(order):
        if all(rows[e][x] == x and rows[x][e] == x for x in range(order)):
            identity = e
            break
    if identity is None:
        raise ValueError("table has no identity element")
    inverse = []
    for x in range(order):
        y = next(
            (y for y in range(order) if rows[x][y] == identity and rows[y][x] == identity),
            None,
        )
        if y is None:
            raise ValueError(f"element {x} has no inverse")
        inverse.append(y)
    for x in range(order):
        for y in range(order):
            for z in range(order):
                if rows[rows[x][y]][z] != rows[x][rows[y][z]]:
                    raise ValueError(f"table is not associative at ({x}, {y}, {z})")
    return FiniteGroupTable(
        name, tuple(tuple(r) for r in rows), identity, tuple(inverse)
    )


def cyclic_group(n: int) -> FiniteGroupTable:
    if n < 1:
        raise ValueError("cyclic group order must be >= 1")
    rows = [[(i + j) % n for j in range(n)] for i in range(n)]
    return group_from_table(f"Z{n}", rows)


def symmetric_group(n: int) -> FiniteGroupTable:
    if not 1 <= n <= 6:
        raise ValueError("symmetric groups are supported for 1 <= n <= 6")
    perms = sorted(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    # Product pq acts as "p then q".
    rows = [[index[tuple(q[x] for x in p)] for q in perms] for p in perms]
    return group_from_table(f"S{n}", rows)


def dihedral_group(n: int) -> FiniteGroupTable:
    """Symmetries of the regular n-gon, order 2n."""
    if n < 2:
        raise ValueError("dihedral groups are supported for n >= 2")

    # Element (k, f) acts on Z/n as x -> (-1)^f x + k; index = k + n*f.
    def combine(e1: tuple[int, int], e2: tuple[int, int]) -> tuple[int, int]:
        k1, f1 = e1
        k2, f2 = e2
        return ((k2 + (k1 if f2 == 0 else -k1)) % n, (f1 + f2) % 2)

    elems = [(k, f) for f in (0, 1) for k in range(n)]
    index = {e: i for i, e in enumerate(elems)}
    rows = [[index[combine(e1, e2)] for e2 in elems] for e1 in elems]
    return group_from_table(f"D{n}", rows)


def builtin_group(name: str) -> FiniteGroupTable:
    """Groups available by name: Z<k>, S<k> (k <= 6), D<k>."""
    m = _NAME.fullmatch(name.strip())
    if m is None:
        raise ValueError(f"unknown group name {name!r} (expected Zk, Sk or Dk)")
    kind, k = m.group(1), int(m.group(2))
    if kind == "Z":
        if k > 512:
            raise ValueError(f"cyclic group Z{k} is too large for table form")
        return cyclic_group(k)
    if kind == "S":
        return symmetric_group(k)
    if k > 128:
        raise ValueError(f"dihedral group D{k} is too large for table form")
    return dihedral_group(k)


def load_group_table(path: str | Path, name: str | None = None) -> FiniteGroupTable:
    """Read a table file: the order N followed by N*N row-major 0-based entries."""
    p = Path(path)
    tokens = p.read_text().split()
    if not tokens:
        raise ValueError(f"{p}: empty group table file")
    try:
        numbers = [int(t) for t in tokens]
    except ValueError as exc:
        raise ValueError(f"{p}: {exc}") from None
    order, rest = numbers[0], numbers[1:]
    if len(rest) != order * order:
        raise ValueError(f"{p}: expected {order * order} entries, got {len(rest)}")
    rows = [rest[i * order : (i + 1) * order] for i in range(order)]
    return group_from_table(name or p.stem, rows)
