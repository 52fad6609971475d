# file: src/baig_topology/baig.py
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Tuple

from bcktop_env import max_carrier
from bcktop_errors import InvariantBroken
from module_core.modules import BckModule
from module_core.quotients import QuotientModule, project_submodule, quotient
from module_core.submodules import Submodule, coset, ensure_submodule_of, intersect_submodules, submodule_as_module

from .dss import Dss
from .spaces import FiniteTopology, Subset, all_subsets, sort_subsets, unions_of

log = logging.getLogger("bcktop.baig")


@dataclass(frozen=True)
class BaigTopology(FiniteTopology):
    """
    V is open iff every v in V has some n with v + M_n ⊆ V.
    base - все различные смежные классы x + M_n.
    """

    dss: Dss = None  # type: ignore[assignment]

    @property
    def module(self) -> BckModule:
        return self.dss.module

    @cached_property
    def coset_table(self) -> Tuple[Tuple[Subset, ...], ...]:
        """coset_table[v][n-1] = v + M_n for n = 1..len(dss)."""
        mod = self.module
        return tuple(tuple(coset(mod, v, m_n) for m_n in self.dss.chain) for v in mod.elements)

    def satisfies_eq2(self, s: Iterable[int]) -> bool:
        fs = self._check_subset(s)
        return all(any(c <= fs for c in self.coset_table[v]) for v in fs)

    def _enumerate_opens(self) -> Tuple[Subset, ...]:
        return tuple(s for s in all_subsets(self.points) if self.satisfies_eq2(s))


def baig_base(dss: Dss) -> Tuple[Subset, ...]:
    mod = dss.module
    found: Dict[Subset, None] = {}
    for m_n in dss.chain:
        for x in mod.elements:
            found[coset(mod, x, m_n)] = None
    return sort_subsets(found)


def build_baig(dss: Dss) -> BaigTopology:
    mod = dss.module
    t = BaigTopology(points=mod.size, base=baig_base(dss), labels=mod.labels, dss=dss)

    # выше лимита работают только запросы по базе; opens бросит CarrierTooLarge
    if mod.size > max_carrier():
        log.debug("Baig topology on %d points: %d basic cosets, opens not enumerated", t.points, len(t.base))
        return t

    # открытые множества по определению должны совпасть с объединениями базы
    if t.open_set != unions_of(t.base):
        raise InvariantBroken("open sets from the membership criterion differ from unions of cosets")
    log.debug("Baig topology on %d points: %d opens, %d basic cosets", t.points, len(t.opens), len(t.base))
    return t


def is_connected(t: FiniteTopology) -> bool:
    carrier = t.carrier
    return all(s in (frozenset(), carrier) for s in t.opens if t.is_closed(s))


def clopen_sets(t: FiniteTopology) -> Tuple[Subset, ...]:
    return tuple(s for s in t.opens if t.is_closed(s))


# -----------------------------
# Induced / factor topologies
# -----------------------------

def induced_dss(dss: Dss, k: Submodule) -> Dss:
    """K_n = K ∩ M_n, re-indexed onto K as a module of its own."""
    ensure_submodule_of(k, dss.module)
    kmod = submodule_as_module(k)
    index = {m: j for j, m in enumerate(k.elements)}
    chain = []
    for m_n in dss.chain:
        k_n = intersect_submodules(k, m_n)
        chain.append(Submodule(parent=kmod, elements=tuple(sorted(index[m] for m in k_n.elements))))
    return Dss(module=kmod, chain=tuple(chain))


def induced_topology(t: BaigTopology, k: Submodule) -> BaigTopology:
    return build_baig(induced_dss(t.dss, k))


def relative_opens(t: FiniteTopology, k: Submodule) -> Tuple[Subset, ...]:
    """{O ∩ K : O open}, in K's local indices."""
    index = {m: j for j, m in enumerate(k.elements)}
    family: List[FrozenSet[int]] = []
    for o in t.opens:
        family.append(frozenset(index[m] for m in o if m in index))
    return sort_subsets(family)


def factor_dss(dss: Dss, k: Submodule) -> Tuple[QuotientModule, Dss]:
    """(M_n + K)/K on M/K."""
    ensure_submodule_of(k, dss.module)
    q = quotient(dss.module, k)
    chain = tuple(project_submodule(q, m_n) for m_n in dss.chain)
    return q, Dss(module=q.module, chain=chain)


def factor_topology(t: BaigTopology, k: Submodule) -> BaigTopology:
    _, fdss = factor_dss(t.dss, k)
    return build_baig(fdss)
