# file: src/baig_topology/spaces.py
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from bcktop_env import max_carrier, max_product
from bcktop_errors import CarrierTooLarge
from module_core.submodules import canonical_key

log = logging.getLogger("bcktop.spaces")

Subset = FrozenSet[int]


def sort_subsets(family: Iterable[Subset]) -> Tuple[Subset, ...]:
    return tuple(sorted(set(family), key=canonical_key))


@dataclass(frozen=True)
class FiniteTopology:
    """
    Finite space on points 0..points-1 given by a base.

    is_open works straight from the base (every point of S has a basic
    neighbourhood inside S), so big carriers such as products never need
    the whole open family. `opens` enumerates it, under the carrier cap.
    """

    points: int
    base: Tuple[Subset, ...]
    labels: Optional[Tuple[Any, ...]] = field(default=None, compare=False)

    @property
    def carrier(self) -> Subset:
        return frozenset(range(self.points))

    @cached_property
    def neighbourhoods(self) -> Tuple[Tuple[Subset, ...], ...]:
        """Basic neighbourhoods of each point, smallest first."""
        around: List[List[Subset]] = [[] for _ in range(self.points)]
        for b in self.base:
            for p in b:
                around[p].append(b)
        return tuple(tuple(sorted(a, key=canonical_key)) for a in around)

    def _check_subset(self, s: Iterable[int]) -> Subset:
        fs = frozenset(s)
        if not fs <= self.carrier:
            raise ValueError(f"{sorted(fs)} is not a subset of the carrier 0..{self.points - 1}")
        return fs

    def is_open(self, s: Iterable[int]) -> bool:
        fs = self._check_subset(s)
        return all(any(b <= fs for b in self.neighbourhoods[p]) for p in fs)

    def is_open_in(self, s: Iterable[int], subspace: Iterable[int]) -> bool:
        """S open in the relative topology of `subspace` (S = O ∩ subspace for some open O)."""
        fs, sub = self._check_subset(s), self._check_subset(subspace)
        if not fs <= sub:
            return False
        return all(any(b & sub <= fs for b in self.neighbourhoods[p]) for p in fs)

    def is_closed(self, s: Iterable[int]) -> bool:
        return self.is_open(self.carrier - self._check_subset(s))

    def is_clopen(self, s: Iterable[int]) -> bool:
        return self.is_open(s) and self.is_closed(s)

    def _enumerate_opens(self) -> Tuple[Subset, ...]:
        return tuple(s for s in all_subsets(self.points) if self.is_open(s))

    @cached_property
    def opens(self) -> Tuple[Subset, ...]:
        limit = max_carrier()
        if self.points > limit:
            raise CarrierTooLarge(self.points, limit)
        return sort_subsets(self._enumerate_opens())

    @cached_property
    def open_set(self) -> FrozenSet[Subset]:
        return frozenset(self.opens)

    def label(self, p: int) -> Any:
        return self.labels[p] if self.labels is not None else p


def all_subsets(n: int) -> Iterable[Subset]:
    points = range(n)
    for r in range(n + 1):
        for combo in itertools.combinations(points, r):
            yield frozenset(combo)


def unions_of(base: Iterable[Subset]) -> FrozenSet[Subset]:
    """Every union of base members, the empty union included."""
    base = list(set(base))
    found: Set[Subset] = {frozenset()}
    frontier = [frozenset()]
    while frontier:
        s = frontier.pop()
        for b in base:
            u = s | b
            if u not in found:
                found.add(u)
                frontier.append(u)
    return frozenset(found)


def topology_axioms_failure(points: int, opens: Iterable[Subset]) -> Optional[str]:
    family = set(opens)
    carrier = frozenset(range(points))
    if frozenset() not in family:
        return "empty set is not open"
    if carrier not in family:
        return "carrier is not open"
    items = list(family)
    for a, b in itertools.combinations(items, 2):
        if a | b not in family:
            return f"union of {sorted(a)} and {sorted(b)} is not open"
        if a & b not in family:
            return f"intersection of {sorted(a)} and {sorted(b)} is not open"
    # пары + конечность = замкнутость относительно любых объединений
    return None


def discrete_topology(n: int) -> FiniteTopology:
    return FiniteTopology(points=n, base=tuple(frozenset([p]) for p in range(n)))


def indiscrete_topology(n: int) -> FiniteTopology:
    return FiniteTopology(points=n, base=(frozenset(range(n)),))


def product_topology(t1: FiniteTopology, t2: FiniteTopology) -> FiniteTopology:
    """Base {U×V}; the point (a, b) is encoded as a * |t2| + b."""
    n = t1.points * t2.points
    limit = max_product()
    if n > limit:
        raise CarrierTooLarge(n, limit, what="product carrier")

    base: Dict[Subset, None] = {}
    for u in t1.base:
        for v in t2.base:
            base[frozenset(a * t2.points + b for a in u for b in v)] = None
    labels = tuple((t1.label(a), t2.label(b)) for a in range(t1.points) for b in range(t2.points))
    log.debug("product topology: %d points, %d basic sets", n, len(base))
    return FiniteTopology(points=n, base=sort_subsets(base), labels=labels)
