# file: src/module_core/groups.py
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence, Tuple

from algebra_core.algebra import Table, _normalize_table
from bcktop_errors import GroupAxiomViolation


@dataclass(frozen=True)
class AbelianGroup:
    size: int
    add: Table
    neg: Tuple[int, ...]

    @property
    def zero(self) -> int:
        return 0

    @property
    def elements(self) -> range:
        return range(self.size)

    def plus(self, a: int, b: int) -> int:
        return self.add[a][b]


def group_from_table(size: int, add: Sequence[Sequence[int]]) -> AbelianGroup:
    """
    Validates identity at 0, commutativity, inverses and associativity,
    in that order, reporting the lexicographically first witness.
    """
    table = _normalize_table(size, add, "add table")
    els = range(size)

    for a in els:
        if table[0][a] != a or table[a][0] != a:
            raise GroupAxiomViolation("identity", (a,))
    for a, b in itertools.product(els, repeat=2):
        if table[a][b] != table[b][a]:
            raise GroupAxiomViolation("commutativity", (a, b))

    neg = []
    for a in els:
        inv = next((b for b in els if table[a][b] == 0), None)
        if inv is None:
            raise GroupAxiomViolation("inverse", (a,))
        neg.append(inv)

    for a, b, c in itertools.product(els, repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise GroupAxiomViolation("associativity", (a, b, c))

    return AbelianGroup(size=size, add=table, neg=tuple(neg))


def cyclic_group(n: int) -> AbelianGroup:
    add = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    return AbelianGroup(size=n, add=add, neg=tuple((-a) % n for a in range(n)))


def trivial_group() -> AbelianGroup:
    return cyclic_group(1)


def direct_product(g: AbelianGroup, h: AbelianGroup) -> AbelianGroup:
    """(a, b) is encoded as a * |h| + b, so the identity stays at index 0."""
    n = g.size * h.size

    def split(x: int) -> Tuple[int, int]:
        return divmod(x, h.size)

    def encode(a: int, b: int) -> int:
        return a * h.size + b

    add = []
    for x in range(n):
        xa, xb = split(x)
        row = []
        for y in range(n):
            ya, yb = split(y)
            row.append(encode(g.plus(xa, ya), h.plus(xb, yb)))
        add.append(tuple(row))
    neg = tuple(encode(g.neg[split(x)[0]], h.neg[split(x)[1]]) for x in range(n))
    return AbelianGroup(size=n, add=tuple(add), neg=neg)


def klein_group() -> AbelianGroup:
    # Z2 x Z2: 1=(0,1), 2=(1,0), 3=(1,1); таблица = побитовый XOR
    return direct_product(cyclic_group(2), cyclic_group(2))
