# file: src/module_core/modules.py
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from algebra_core.algebra import BckAlgebra, Table, chain_algebra, is_bounded, is_implicative, join, meet
from bcktop_errors import BckError, ConstructionFailed, MalformedTable, ModuleAxiomViolation, NotBoundedImplicative

from .groups import AbelianGroup, group_from_table

log = logging.getLogger("bcktop.module")


@dataclass(frozen=True)
class BckModule:
    """
    Left X-module: abelian group + action[a][m] = a·m.

    labels - имена элементов в объемлющем модуле (для подмодулей и фактор-модулей).
    Участвуют в равенстве: подмодуль {0,2} в M4 и сам Z2 - разные модули.
    """

    algebra: BckAlgebra
    group: AbelianGroup
    action: Table
    labels: Optional[Tuple[int, ...]] = None

    @property
    def size(self) -> int:
        return self.group.size

    @property
    def elements(self) -> range:
        return range(self.group.size)

    def plus(self, a: int, b: int) -> int:
        return self.group.add[a][b]

    def neg(self, a: int) -> int:
        return self.group.neg[a]

    def act(self, x: int, m: int) -> int:
        return self.action[x][m]

    def label(self, m: int) -> int:
        return self.labels[m] if self.labels is not None else m


def first_module_violation(algebra: BckAlgebra, group: AbelianGroup, action: Table) -> Optional[Tuple[str, Tuple[int, ...]]]:
    xs = algebra.elements
    ms = group.elements

    # M1: (a∧b)m = a(bm)
    for a, b, m in itertools.product(xs, xs, ms):
        if action[meet(algebra, a, b)][m] != action[a][action[b][m]]:
            return "M1", (a, b, m)
    # M2: a(m1+m2) = am1 + am2
    for a, m1, m2 in itertools.product(xs, ms, ms):
        if action[a][group.plus(m1, m2)] != group.plus(action[a][m1], action[a][m2]):
            return "M2", (a, m1, m2)
    # M3: 0m = 0
    for m in ms:
        if action[0][m] != 0:
            return "M3", (m,)
    # M4: 1m = m, только если алгебра ограничена
    one = algebra.top
    if one is not None:
        for m in ms:
            if action[one][m] != m:
                return "M4", (m,)
    return None


def module_from_tables(
    algebra: BckAlgebra,
    group: AbelianGroup,
    action: Sequence[Sequence[int]],
    labels: Optional[Sequence[int]] = None,
) -> BckModule:
    if len(action) != algebra.size:
        raise MalformedTable("action table", f"expected {algebra.size} rows (one per algebra element), got {len(action)}")
    rows = []
    for a, row in enumerate(action):
        if len(row) != group.size:
            raise MalformedTable("action table", f"row {a} has {len(row)} entries, expected {group.size}")
        for m, v in enumerate(row):
            if not isinstance(v, int) or not (0 <= v < group.size):
                raise MalformedTable("action table", f"entry [{a}][{m}] = {v!r} is out of range 0..{group.size - 1}")
        rows.append(tuple(row))
    table = tuple(rows)

    failure = first_module_violation(algebra, group, table)
    if failure is not None:
        axiom, witnesses = failure
        raise ModuleAxiomViolation(axiom, witnesses)

    return BckModule(
        algebra=algebra,
        group=group,
        action=table,
        labels=tuple(labels) if labels is not None else None,
    )


def scalar_module_over_C2(group: AbelianGroup) -> BckModule:
    """Any abelian group over the 2-chain: 0·m = 0, 1·m = m."""
    action = [[0] * group.size, list(group.elements)]
    return module_from_tables(chain_algebra(2), group, action)


def self_module(alg: BckAlgebra) -> BckModule:
    """
    Bounded implicative X over itself: a + b = (a*b) ∨ (b*a), a·m = a∧m.
    Конструкция только цитируется, поэтому результат проходит полный валидатор.
    """
    bounded, implicative = is_bounded(alg), is_implicative(alg)
    if not (bounded and implicative):
        raise NotBoundedImplicative(bounded, implicative)

    n = alg.size
    add = [[join(alg, alg.op(a, b), alg.op(b, a)) for b in range(n)] for a in range(n)]
    action = [[meet(alg, a, m) for m in range(n)] for a in range(n)]
    try:
        group = group_from_table(n, add)
        module = module_from_tables(alg, group, action)
    except BckError as e:
        raise ConstructionFailed("self module", e) from e
    log.debug("self module over algebra of size %s built", n)
    return module
