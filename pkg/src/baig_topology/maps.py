# file: src/baig_topology/maps.py
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from module_core.homs import ModuleHom
from module_core.submodules import Submodule, ensure_submodule_of

from .baig import BaigTopology
from .spaces import FiniteTopology, Subset, discrete_topology, product_topology


@dataclass(frozen=True)
class FiniteMap:
    domain: FiniteTopology
    codomain: FiniteTopology
    table: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.table) != self.domain.points:
            raise ValueError(f"map has {len(self.table)} entries, domain has {self.domain.points} points")
        if any(not (0 <= v < self.codomain.points) for v in self.table):
            raise ValueError("map leaves the codomain")

    def image(self, s: Subset) -> Subset:
        return frozenset(self.table[p] for p in s)

    def preimage(self, s: Subset) -> Subset:
        return frozenset(p for p in range(self.domain.points) if self.table[p] in s)


# -----------------------------
# Witness finders (None = property holds)
# -----------------------------

def continuity_witness(f: FiniteMap) -> Optional[Subset]:
    """First open U of the codomain whose preimage is not open."""
    for u in f.codomain.opens:
        if not f.domain.is_open(f.preimage(u)):
            return u
    return None


def continuity_at_witness(f: FiniteMap, m: int) -> Optional[Subset]:
    """First open U ∋ f(m) such that no open V ∋ m has f(V) ⊆ U."""
    y = f.table[m]
    for u in f.codomain.opens:
        if y not in u:
            continue
        # любое открытое V ∋ m содержит базовую окрестность m
        if not any(f.image(b) <= u for b in f.domain.neighbourhoods[m]):
            return u
    return None


def open_map_witness(f: FiniteMap) -> Optional[Subset]:
    """
    First basic open set whose image is not open. Images commute with
    unions, so checking the base decides every open set.
    """
    for b in f.domain.base:
        if not f.codomain.is_open(f.image(b)):
            return b
    return None


def open_onto_image_witness(f: FiniteMap) -> Optional[Subset]:
    """As open_map_witness, with f(M) carrying the relative topology."""
    onto = f.image(f.domain.carrier)
    for b in f.domain.base:
        if not f.codomain.is_open_in(f.image(b), onto):
            return b
    return None


def is_continuous(f: FiniteMap) -> bool:
    return continuity_witness(f) is None


def is_continuous_at(f: FiniteMap, m: int) -> bool:
    return continuity_at_witness(f, m) is None


def is_open_map(f: FiniteMap) -> bool:
    return open_map_witness(f) is None


def is_open_onto_image(f: FiniteMap) -> bool:
    return open_onto_image_witness(f) is None


def is_bijective(f: FiniteMap) -> bool:
    return f.domain.points == f.codomain.points and len(set(f.table)) == f.domain.points


def inverse(f: FiniteMap) -> FiniteMap:
    if not is_bijective(f):
        raise ValueError("map is not bijective")
    inv = [0] * f.domain.points
    for p, v in enumerate(f.table):
        inv[v] = p
    return FiniteMap(domain=f.codomain, codomain=f.domain, table=tuple(inv))


def is_homeomorphism(f: FiniteMap) -> bool:
    return is_bijective(f) and is_continuous(f) and is_continuous(inverse(f))


# -----------------------------
# Maps of a Baig-topologized module
# -----------------------------

def negation_map(t: BaigTopology) -> FiniteMap:
    mod = t.module
    return FiniteMap(domain=t, codomain=t, table=tuple(mod.neg(m) for m in mod.elements))


def translation_map(t: BaigTopology, a: int) -> FiniteMap:
    mod = t.module
    return FiniteMap(domain=t, codomain=t, table=tuple(mod.plus(a, m) for m in mod.elements))


def scalar_map(t: BaigTopology, x: int) -> FiniteMap:
    mod = t.module
    return FiniteMap(domain=t, codomain=t, table=tuple(mod.act(x, m) for m in mod.elements))


def characteristic_map(t: BaigTopology, n: Submodule) -> FiniteMap:
    """χ_N into the discrete space {0, 1}."""
    ensure_submodule_of(n, t.module)
    return FiniteMap(
        domain=t,
        codomain=discrete_topology(2),
        table=tuple(1 if m in n else 0 for m in t.module.elements),
    )


def addition_map(t: BaigTopology, product: Optional[FiniteTopology] = None) -> FiniteMap:
    """(m, m') -> m + m' on M x M with the product topology."""
    mod = t.module
    domain = product if product is not None else product_topology(t, t)
    table = tuple(mod.plus(a, b) for a in mod.elements for b in mod.elements)
    return FiniteMap(domain=domain, codomain=t, table=table)


def hom_map(hom: ModuleHom, source: FiniteTopology, target: FiniteTopology) -> FiniteMap:
    return FiniteMap(domain=source, codomain=target, table=hom.table)


def table_map(source: FiniteTopology, target: FiniteTopology, table: Sequence[int]) -> FiniteMap:
    return FiniteMap(domain=source, codomain=target, table=tuple(table))


def is_topological_module(t: BaigTopology) -> bool:
    """
    + continuous on M x M and every μ_x continuous: the Baig topology makes
    M a BCK-topological module.
    """
    if not is_continuous(addition_map(t)):
        return False
    return all(is_continuous(scalar_map(t, x)) for x in t.module.algebra.elements)
