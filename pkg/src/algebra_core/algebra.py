# file: src/algebra_core/algebra.py
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, List, Optional, Sequence, Tuple

from bcktop_errors import AxiomViolation, MalformedTable

log = logging.getLogger("bcktop.algebra")

Table = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class BckAlgebra:
    """
    Конечная BCK-алгебра: элементы 0..size-1, ноль всегда индекс 0,
    star[a][b] = a*b. Создавать только через algebra_from_table / chain_algebra.
    """

    size: int
    star: Table
    one: Optional[int] = None

    @property
    def zero(self) -> int:
        return 0

    @property
    def elements(self) -> range:
        return range(self.size)

    def op(self, a: int, b: int) -> int:
        return self.star[a][b]

    @cached_property
    def top(self) -> Optional[int]:
        """Greatest element: the declared `one`, otherwise searched."""
        if self.one is not None:
            return self.one
        return greatest_element(self)


# -----------------------------
# Validation
# -----------------------------

def _normalize_table(size: int, rows: Sequence[Sequence[int]], what: str) -> Table:
    if size < 1:
        raise MalformedTable(what, f"size must be positive, got {size}")
    if len(rows) != size:
        raise MalformedTable(what, f"expected {size} rows, got {len(rows)}")
    out: List[Tuple[int, ...]] = []
    for i, row in enumerate(rows):
        if len(row) != size:
            raise MalformedTable(what, f"row {i} has {len(row)} entries, expected {size}")
        for j, v in enumerate(row):
            if not isinstance(v, int) or not (0 <= v < size):
                raise MalformedTable(what, f"entry [{i}][{j}] = {v!r} is out of range 0..{size - 1}")
        out.append(tuple(row))
    return tuple(out)


def first_axiom_violation(size: int, star: Table) -> Optional[Tuple[str, Tuple[int, ...]]]:
    """
    BCK1..BCK5 in order, each scanned lexicographically over its variables.
    BCK6 only defines the order a <= b, so nothing to check there.
    """
    els = range(size)

    def s(a: int, b: int) -> int:
        return star[a][b]

    # BCK1 печатается в статьях криво; берём стандартную форму ((a*b)*(a*c))*(c*b) = 0
    for a, b, c in itertools.product(els, repeat=3):
        if s(s(s(a, b), s(a, c)), s(c, b)) != 0:
            return "BCK1", (a, b, c)
    for a, b in itertools.product(els, repeat=2):
        if s(s(a, s(a, b)), b) != 0:
            return "BCK2", (a, b)
    for a in els:
        if s(a, a) != 0:
            return "BCK3", (a,)
    for a in els:
        if s(0, a) != 0:
            return "BCK4", (a,)
    for a, b in itertools.product(els, repeat=2):
        if s(a, b) == 0 and s(b, a) == 0 and a != b:
            return "BCK5", (a, b)
    return None


def algebra_from_table(size: int, star: Sequence[Sequence[int]], one: Optional[int] = None) -> BckAlgebra:
    table = _normalize_table(size, star, "star table")
    if one is not None and not (0 <= one < size):
        raise MalformedTable("star table", f"one = {one} is out of range 0..{size - 1}")

    failure = first_axiom_violation(size, table)
    if failure is not None:
        axiom, witnesses = failure
        raise AxiomViolation(axiom, witnesses)

    if one is not None:
        for a in range(size):
            if table[a][one] != 0:
                raise AxiomViolation("bounded", (a, one))

    log.debug("BCK-algebra of size %s validated (one=%s)", size, one)
    return BckAlgebra(size=size, star=table, one=one)


def chain_algebra(n: int) -> BckAlgebra:
    """Chain 0 < 1 < ... < n-1 with truncated subtraction a*b = max(a-b, 0)."""
    if n < 1:
        raise MalformedTable("chain algebra", f"n must be positive, got {n}")
    star = tuple(tuple(max(a - b, 0) for b in range(n)) for a in range(n))
    return BckAlgebra(size=n, star=star, one=n - 1)


def iter_tables(size: int) -> Iterator[Table]:
    """All size x size tables over 0..size-1 (for exhaustive classification)."""
    cells = size * size
    for flat in itertools.product(range(size), repeat=cells):
        yield tuple(tuple(flat[r * size:(r + 1) * size]) for r in range(size))


def count_bck_algebras(size: int) -> int:
    return sum(1 for t in iter_tables(size) if first_axiom_violation(size, t) is None)


# -----------------------------
# Order / meet / predicates
# -----------------------------

def leq(alg: BckAlgebra, a: int, b: int) -> bool:
    return alg.op(a, b) == 0


def meet(alg: BckAlgebra, a: int, b: int) -> int:
    return alg.op(b, alg.op(b, a))


def greatest_element(alg: BckAlgebra) -> Optional[int]:
    for u in alg.elements:
        if all(alg.op(a, u) == 0 for a in alg.elements):
            return u
    return None


def join(alg: BckAlgebra, u: int, v: int) -> int:
    """u ∨ v = 1*((1*u) ∧ (1*v)); defined for bounded algebras only."""
    one = alg.top
    if one is None:
        raise ValueError("join needs a bounded algebra")
    return alg.op(one, meet(alg, alg.op(one, u), alg.op(one, v)))


def is_bounded(alg: BckAlgebra) -> bool:
    return alg.top is not None


def is_commutative(alg: BckAlgebra) -> bool:
    # симметричность meet: b*(b*a) == a*(a*b)
    return all(meet(alg, a, b) == meet(alg, b, a) for a, b in itertools.product(alg.elements, repeat=2))


def is_implicative(alg: BckAlgebra) -> bool:
    return all(alg.op(a, alg.op(b, a)) == a for a, b in itertools.product(alg.elements, repeat=2))
