# file: src/module_core/submodules.py
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import FrozenSet, Iterable, List, Optional, Set, Tuple

from bcktop_errors import NotASubmodule

from .groups import AbelianGroup
from .modules import BckModule


@dataclass(frozen=True)
class Submodule:
    parent: BckModule
    elements: Tuple[int, ...]

    @cached_property
    def members(self) -> FrozenSet[int]:
        return frozenset(self.elements)

    def __contains__(self, m: object) -> bool:
        return m in self.members

    def __len__(self) -> int:
        return len(self.elements)

    def issubset(self, other: "Submodule") -> bool:
        return self.members <= other.members


def canonical_key(elements: Iterable[int]) -> Tuple[int, Tuple[int, ...]]:
    """Канонический порядок подмножеств: сначала по размеру, потом лексикографически."""
    t = tuple(sorted(elements))
    return len(t), t


def submodule_failure(mod: BckModule, elements: Iterable[int]) -> Optional[str]:
    s = set(elements)
    if any(not (0 <= m < mod.size) for m in s):
        return "element out of range"
    if 0 not in s:
        return "does not contain 0"
    for a in s:
        if mod.neg(a) not in s:
            return f"not closed under negation at {a}"
        for b in s:
            if mod.plus(a, b) not in s:
                return f"not closed under + at ({a},{b})"
    for x in mod.algebra.elements:
        for m in s:
            if mod.act(x, m) not in s:
                return f"not closed under action of {x} at {m}"
    return None


def submodule(mod: BckModule, elements: Iterable[int]) -> Submodule:
    els = sorted(set(elements))
    reason = submodule_failure(mod, els)
    if reason is not None:
        raise NotASubmodule(els, reason)
    return Submodule(parent=mod, elements=tuple(els))


def whole(mod: BckModule) -> Submodule:
    return Submodule(parent=mod, elements=tuple(mod.elements))


def zero_submodule(mod: BckModule) -> Submodule:
    return Submodule(parent=mod, elements=(0,))


def span(mod: BckModule, gens: Iterable[int]) -> Submodule:
    """Smallest submodule containing gens (closure under +, negation and the action)."""
    found: Set[int] = {0} | set(gens)
    frontier: List[int] = list(found)
    while frontier:
        a = frontier.pop()
        new = [mod.neg(a)] + [mod.act(x, a) for x in mod.algebra.elements]
        new += [mod.plus(a, b) for b in list(found)]
        for c in new:
            if c not in found:
                found.add(c)
                frontier.append(c)
    return Submodule(parent=mod, elements=tuple(sorted(found)))


def enumerate_submodules(mod: BckModule) -> List[Submodule]:
    """
    Submodule lattice by saturation: start from {0}, keep adding one generator.
    Every finite submodule is reached because it is spanned by its own elements.
    """
    seen = {(0,): zero_submodule(mod)}
    frontier = [seen[(0,)]]
    while frontier:
        s = frontier.pop()
        for x in mod.elements:
            if x in s:
                continue
            t = span(mod, s.elements + (x,))
            if t.elements not in seen:
                seen[t.elements] = t
                frontier.append(t)
    return sorted(seen.values(), key=lambda sub: canonical_key(sub.elements))


def ensure_submodule_of(sub: Submodule, mod: BckModule) -> None:
    if sub.parent != mod:
        raise NotASubmodule(sub.elements, "belongs to a different module")


def intersect_submodules(a: Submodule, b: Submodule) -> Submodule:
    ensure_submodule_of(b, a.parent)
    return Submodule(parent=a.parent, elements=tuple(sorted(a.members & b.members)))


def sum_submodules(a: Submodule, b: Submodule) -> Submodule:
    ensure_submodule_of(b, a.parent)
    mod = a.parent
    return Submodule(parent=mod, elements=tuple(sorted({mod.plus(x, y) for x in a.elements for y in b.elements})))


def coset(mod: BckModule, x: int, sub: Submodule) -> FrozenSet[int]:
    return frozenset(mod.plus(x, s) for s in sub.elements)


def submodule_as_module(sub: Submodule) -> BckModule:
    """
    Re-indexes K as a module of its own: local index j is sub.elements[j].
    Ноль остаётся на индексе 0, т.к. elements отсортированы и содержат 0.
    """
    mod = sub.parent
    index = {m: j for j, m in enumerate(sub.elements)}
    add = tuple(tuple(index[mod.plus(a, b)] for b in sub.elements) for a in sub.elements)
    neg = tuple(index[mod.neg(a)] for a in sub.elements)
    action = tuple(tuple(index[mod.act(x, m)] for m in sub.elements) for x in mod.algebra.elements)

    return BckModule(
        algebra=mod.algebra,
        group=AbelianGroup(size=len(sub.elements), add=add, neg=neg),
        action=action,
        labels=tuple(mod.label(m) for m in sub.elements),
    )
