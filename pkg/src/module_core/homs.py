# file: src/module_core/homs.py
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Sequence, Tuple

from bcktop_env import max_hom_source
from bcktop_errors import CarrierTooLarge, HomomorphismViolation, InvariantBroken, MalformedTable

from .modules import BckModule
from .submodules import Submodule, coset, ensure_submodule_of, submodule, submodule_as_module

log = logging.getLogger("bcktop.homs")


@dataclass(frozen=True)
class ModuleHom:
    source: BckModule
    target: BckModule
    table: Tuple[int, ...]

    def __call__(self, m: int) -> int:
        return self.table[m]

    def image_of(self, elements) -> FrozenSet[int]:
        return frozenset(self.table[m] for m in elements)


def hom_failure(src: BckModule, dst: BckModule, table: Sequence[int]) -> Optional[Tuple[str, Tuple[int, ...]]]:
    # 1) f(m1+m2) = f(m1)+f(m2)
    for m1, m2 in itertools.product(src.elements, repeat=2):
        if table[src.plus(m1, m2)] != dst.plus(table[m1], table[m2]):
            return "additive", (m1, m2)
    # 2) f(xm) = xf(m)
    for x, m in itertools.product(src.algebra.elements, src.elements):
        if table[src.act(x, m)] != dst.act(x, table[m]):
            return "action", (x, m)
    return None


def module_hom(src: BckModule, dst: BckModule, table: Sequence[int]) -> ModuleHom:
    if src.algebra != dst.algebra:
        raise MalformedTable("hom", "source and target are modules over different algebras")
    if len(table) != src.size:
        raise MalformedTable("hom", f"map has {len(table)} entries, source has {src.size} elements")
    for m, v in enumerate(table):
        if not isinstance(v, int) or not (0 <= v < dst.size):
            raise MalformedTable("hom", f"f({m}) = {v!r} is out of range 0..{dst.size - 1}")
    failure = hom_failure(src, dst, table)
    if failure is not None:
        raise HomomorphismViolation(*failure)
    return ModuleHom(source=src, target=dst, table=tuple(table))


def identity_hom(mod: BckModule) -> ModuleHom:
    return ModuleHom(source=mod, target=mod, table=tuple(mod.elements))


def zero_hom(src: BckModule, dst: BckModule) -> ModuleHom:
    return ModuleHom(source=src, target=dst, table=(0,) * src.size)


def compose(g: ModuleHom, f: ModuleHom) -> ModuleHom:
    """g ∘ f."""
    if f.target != g.source:
        raise MalformedTable("hom", "cannot compose: target of f is not the source of g")
    return ModuleHom(source=f.source, target=g.target, table=tuple(g.table[v] for v in f.table))


def inclusion_hom(sub: Submodule) -> ModuleHom:
    return ModuleHom(source=submodule_as_module(sub), target=sub.parent, table=sub.elements)


# -----------------------------
# Kernel / image / predicates
# -----------------------------

def kernel(f: ModuleHom) -> Submodule:
    return submodule(f.source, [m for m in f.source.elements if f.table[m] == 0])


def image(f: ModuleHom) -> Submodule:
    return submodule(f.target, set(f.table))


def is_injective(f: ModuleHom) -> bool:
    return len(set(f.table)) == f.source.size


def is_surjective(f: ModuleHom) -> bool:
    return len(set(f.table)) == f.target.size


def is_isomorphism(f: ModuleHom) -> bool:
    return is_injective(f) and is_surjective(f)


def hom_coset_image(f: ModuleHom, k: Submodule, m: int) -> FrozenSet[int]:
    """f(K+m), checked against f(K)+f(m)."""
    ensure_submodule_of(k, f.source)
    lhs = f.image_of(coset(f.source, m, k))
    rhs = frozenset(f.target.plus(v, f.table[m]) for v in f.image_of(k.elements))
    if lhs != rhs:
        raise InvariantBroken(f"f(K+m) != f(K)+f(m) for K={k.elements}, m={m}")
    return lhs


# -----------------------------
# Enumeration
# -----------------------------

def enumerate_homs_brute_force(src: BckModule, dst: BckModule) -> List[ModuleHom]:
    out = []
    for table in itertools.product(dst.elements, repeat=src.size):
        if hom_failure(src, dst, table) is None:
            out.append(ModuleHom(source=src, target=dst, table=tuple(table)))
    return out


def enumerate_homs(src: BckModule, dst: BckModule) -> List[ModuleHom]:
    """
    All X-homomorphisms src -> dst in lexicographic order of their tables.

    Backtracking over the source elements in index order: a constraint is
    checked as soon as every value it mentions is assigned, so the output is
    exactly the brute-force list, only pruned earlier.
    """
    if src.algebra != dst.algebra:
        raise MalformedTable("hom", "source and target are modules over different algebras")
    limit = max_hom_source()
    if src.size > limit:
        raise CarrierTooLarge(src.size, limit, what="hom source")

    n = src.size
    # constraints ready once the largest index they mention is assigned
    ready: List[List[Tuple[str, int, int]]] = [[] for _ in range(n)]
    for m1, m2 in itertools.product(src.elements, repeat=2):
        ready[max(m1, m2, src.plus(m1, m2))].append(("add", m1, m2))
    for x, m in itertools.product(src.algebra.elements, src.elements):
        ready[max(m, src.act(x, m))].append(("act", x, m))

    out: List[ModuleHom] = []
    table = [0] * n

    def ok(pos: int) -> bool:
        for kind, a, b in ready[pos]:
            if kind == "add":
                if table[src.plus(a, b)] != dst.plus(table[a], table[b]):
                    return False
            elif table[src.act(a, b)] != dst.act(a, table[b]):
                return False
        return True

    def extend(pos: int) -> None:
        if pos == n:
            out.append(ModuleHom(source=src, target=dst, table=tuple(table)))
            return
        for v in dst.elements:
            table[pos] = v
            if ok(pos):
                extend(pos + 1)

    extend(0)
    log.debug("enumerated %d homs (|src|=%d, |dst|=%d)", len(out), src.size, dst.size)
    return out
