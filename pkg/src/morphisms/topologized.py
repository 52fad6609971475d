# file: src/morphisms/topologized.py
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from baig_topology.baig import BaigTopology, build_baig
from baig_topology.dss import Dss
from baig_topology.maps import FiniteMap, hom_map
from baig_topology.spaces import Subset
from bcktop_errors import MalformedTable, format_set
from module_core.homs import ModuleHom


@dataclass(frozen=True)
class TopologizedHom:
    hom: ModuleHom
    source_topology: BaigTopology
    target_topology: BaigTopology

    def __post_init__(self) -> None:
        if self.source_topology.module != self.hom.source:
            raise MalformedTable("topologized hom", "source chain is over a different module than the hom source")
        if self.target_topology.module != self.hom.target:
            raise MalformedTable("topologized hom", "target chain is over a different module than the hom target")

    @property
    def source_dss(self) -> Dss:
        return self.source_topology.dss

    @property
    def target_dss(self) -> Dss:
        return self.target_topology.dss

    @property
    def horizon(self) -> int:
        # дальше хвосты стабилизированы, равенства повторяются дословно
        return max(len(self.source_dss), len(self.target_dss))

    @property
    def finite_map(self) -> FiniteMap:
        return hom_map(self.hom, self.source_topology, self.target_topology)


def topologize(hom: ModuleHom, source_dss: Dss, target_dss: Dss) -> TopologizedHom:
    return TopologizedHom(hom=hom, source_topology=build_baig(source_dss), target_topology=build_baig(target_dss))


@dataclass(frozen=True)
class ChainWitness:
    """Failure at chain index n: `lhs` should be contained in / equal to `rhs`."""

    kind: str
    n: int
    lhs: Subset
    rhs: Subset

    def describe(self, target_labels=None) -> str:
        def fmt(s: Subset) -> str:
            return format_set([target_labels[v] for v in s] if target_labels is not None else s)

        n = self.n
        if self.kind == "strict":
            return f"n={n} f(M_{n})={fmt(self.lhs)} f(M)∩M'_{n}={fmt(self.rhs)}"
        return f"n={n} f(M_{n})={fmt(self.lhs)} M'_{n}={fmt(self.rhs)}"


def compatibility_witness(th: TopologizedHom) -> Optional[ChainWitness]:
    f = th.hom
    for n in range(1, th.horizon + 1):
        lhs = f.image_of(th.source_dss.member(n).elements)
        rhs = th.target_dss.member(n).members
        if not lhs <= rhs:
            return ChainWitness("compatible", n, lhs, frozenset(rhs))
    return None


def strictness_witness(th: TopologizedHom) -> Optional[ChainWitness]:
    f = th.hom
    f_m = f.image_of(f.source.elements)
    for n in range(1, th.horizon + 1):
        lhs = f.image_of(th.source_dss.member(n).elements)
        rhs = f_m & th.target_dss.member(n).members
        if lhs != rhs:
            return ChainWitness("strict", n, lhs, frozenset(rhs))
    return None


def is_compatible(th: TopologizedHom) -> bool:
    return compatibility_witness(th) is None


def is_strict(th: TopologizedHom) -> bool:
    return strictness_witness(th) is None
