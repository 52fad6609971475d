# file: src/morphisms/suite.py
from __future__ import annotations

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence

from algebra_core.algebra import chain_algebra
from baig_topology.baig import (
    BaigTopology,
    build_baig,
    factor_topology,
    induced_topology,
    is_connected,
    relative_opens,
)
from baig_topology.dss import Dss, enumerate_dss
from baig_topology.maps import (
    addition_map,
    characteristic_map,
    continuity_witness,
    is_bijective,
    is_continuous,
    is_continuous_at,
    is_homeomorphism,
    is_topological_module,
    negation_map,
    open_map_witness,
    open_onto_image_witness,
    scalar_map,
    translation_map,
)
from baig_topology.spaces import all_subsets, topology_axioms_failure, unions_of
from bcktop_env import suite_workers
from bcktop_errors import BckError, format_set
from module_core.groups import cyclic_group, klein_group, trivial_group
from module_core.homs import ModuleHom, enumerate_homs, hom_coset_image, image, is_surjective, kernel
from module_core.modules import BckModule, scalar_module_over_C2, self_module
from module_core.submodules import canonical_key, coset, enumerate_submodules, submodule_failure

from .exactness import exact_pair_check
from .quotient_maps import alpha_from_square, quotient_square
from .reports import VerdictReport
from .topologized import TopologizedHom, compatibility_witness, strictness_witness

log = logging.getLogger("bcktop.suite")


# -----------------------------
# Corpus
# -----------------------------

@dataclass(frozen=True)
class SpaceInstance:
    name: str
    topology: BaigTopology


@dataclass(frozen=True)
class HomInstance:
    name: str
    hom: ModuleHom


@dataclass(frozen=True)
class TopologizedInstance:
    name: str
    th: TopologizedHom


@dataclass
class Corpus:
    modules: Dict[str, BckModule] = field(default_factory=dict)
    spaces: List[SpaceInstance] = field(default_factory=list)
    homs: List[HomInstance] = field(default_factory=list)
    topologized: List[TopologizedInstance] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.modules) + len(self.spaces) + len(self.homs) + len(self.topologized)


def dss_label(dss: Dss) -> str:
    mod = dss.module
    return "[" + "|".join(format_set([mod.label(m) for m in sub.elements]) for sub in dss.chain) + "]"


def hom_label(src_name: str, dst_name: str, hom: ModuleHom) -> str:
    return f"{src_name}->{dst_name} ({','.join(str(v) for v in hom.table)})"


def corpus_from_modules(
    modules: Dict[str, BckModule],
    chains: Optional[Dict[str, Sequence[Dss]]] = None,
    homs: Optional[Sequence[tuple]] = None,
    max_length: int = 3,
) -> Corpus:
    """
    modules - имя -> модуль; chains - имя -> цепочки (по умолчанию все до max_length);
    homs - (src_name, dst_name, ModuleHom), по умолчанию все гомоморфизмы между модулями.
    """
    chains = dict(chains or {})
    for name, mod in modules.items():
        chains.setdefault(name, enumerate_dss(mod, max_length))

    corpus = Corpus(modules=dict(modules))
    topologies: Dict[str, List[BaigTopology]] = {}
    for name in modules:
        topologies[name] = [build_baig(d) for d in chains[name]]
        for t in topologies[name]:
            corpus.spaces.append(SpaceInstance(name=f"{name} {dss_label(t.dss)}", topology=t))

    if homs is None:
        homs = [
            (s, d, h)
            for s in modules
            for d in modules
            if modules[s].algebra == modules[d].algebra
            for h in enumerate_homs(modules[s], modules[d])
        ]

    for src_name, dst_name, h in homs:
        hname = hom_label(src_name, dst_name, h)
        corpus.homs.append(HomInstance(name=hname, hom=h))
        for ts in topologies[src_name]:
            for tt in topologies[dst_name]:
                th = TopologizedHom(hom=h, source_topology=ts, target_topology=tt)
                corpus.topologized.append(
                    TopologizedInstance(name=f"{hname} {dss_label(ts.dss)}->{dss_label(tt.dss)}", th=th)
                )

    log.info(
        "corpus: %d modules, %d spaces, %d homs, %d topologized homs",
        len(corpus.modules), len(corpus.spaces), len(corpus.homs), len(corpus.topologized),
    )
    return corpus


def default_modules() -> Dict[str, BckModule]:
    return {
        "M1": scalar_module_over_C2(trivial_group()),
        "M2": scalar_module_over_C2(cyclic_group(2)),
        "M4": scalar_module_over_C2(cyclic_group(4)),
        "K4": scalar_module_over_C2(klein_group()),
        "S2": self_module(chain_algebra(2)),
    }


def build_default_corpus(max_length: int = 3) -> Corpus:
    return corpus_from_modules(default_modules(), max_length=max_length)


# -----------------------------
# Claim helpers
# -----------------------------

class _Collector:
    def __init__(self, instance: str) -> None:
        self.instance = instance
        self.started = time.perf_counter()
        self.reports: List[VerdictReport] = []

    def add(self, claim: str, holds: bool, witness: Optional[str] = None, vacuous: bool = False) -> None:
        self.reports.append(
            VerdictReport(
                claim=claim,
                instance=self.instance,
                holds=holds,
                witness=None if holds else (witness or "unspecified"),
                vacuous=vacuous and holds,
                elapsed_ms=(time.perf_counter() - self.started) * 1000.0,
            )
        )

    def implies(self, claim: str, premise: bool, conclusion: bool, witness: Optional[str] = None) -> None:
        self.add(claim, (not premise) or conclusion, witness, vacuous=not premise)


def _first(items, pred) -> Optional[object]:
    return next((x for x in items if pred(x)), None)


# -----------------------------
# Claims per module / space / hom / topologized hom
# -----------------------------

def _module_reports(name: str, mod: BckModule) -> List[VerdictReport]:
    c = _Collector(name)
    listed = [s.elements for s in enumerate_submodules(mod)]
    oracle = sorted(
        (tuple(sorted(s)) for s in all_subsets(mod.size) if submodule_failure(mod, s) is None),
        key=canonical_key,
    )
    c.add("oracle-submodules", listed == oracle, f"listed={listed} oracle={oracle}")
    return c.reports


def _space_reports(inst: SpaceInstance) -> List[VerdictReport]:
    t = inst.topology
    mod = t.module
    c = _Collector(inst.name)
    subs = enumerate_submodules(mod)

    failure = topology_axioms_failure(t.points, t.opens)
    c.add("baig-axioms", failure is None, failure)

    bad_base = _first(t.base, lambda b: not t.satisfies_eq2(b))
    if bad_base is not None:
        c.add("baig-base", False, f"coset {format_set(bad_base)} violates the membership criterion")
    else:
        c.add("baig-base", unions_of(t.base) == t.open_set, "opens differ from unions of cosets")

    # независимый оракул: V открыто <=> V + M_k = V для последнего члена цепочки
    last = t.dss.last
    oracle = {s for s in all_subsets(t.points) if all(coset(mod, v, last) <= s for v in s)}
    c.add("oracle-baig", oracle == set(t.opens), f"oracle has {len(oracle)} opens, built {len(t.opens)}")

    # N открыт <=> N замкнут <=> M_k ⊆ N
    n = _first(subs, lambda s: not (t.is_open(s.elements) == t.is_closed(s.elements) == last.issubset(s)))
    c.add("sub-clopen", n is None, f"N={format_set(n.elements)}" if n is not None else None)

    n = _first(subs, lambda s: is_continuous(characteristic_map(t, s)) != t.is_clopen(s.elements))
    c.add("chi-cnt", n is None, f"N={format_set(n.elements)}" if n is not None else None)

    proper = _first(t.dss.chain, lambda s: len(s) < mod.size)
    c.implies("disconnected", proper is not None, not is_connected(t), "connected despite a proper chain entry")

    c.add("nu-homeo", is_homeomorphism(negation_map(t)), "negation")
    a = _first(mod.elements, lambda a: not is_homeomorphism(translation_map(t, a)))
    c.add("tau-homeo", a is None, f"a={a}")

    add_w = continuity_witness(addition_map(t))
    c.add("add-cnt", add_w is None, f"preimage of {format_set(add_w)} not open" if add_w is not None else None)
    x = _first(mod.algebra.elements, lambda x: not is_continuous(scalar_map(t, x)))
    c.add("mu-cnt", x is None, f"x={x}")
    c.add("topological-module", is_topological_module(t), "addition or scalar action not continuous")

    k = _first(subs, lambda k: induced_topology(t, k).opens != relative_opens(t, k))
    c.add("induced-relative", k is None, f"K={format_set(k.elements)}" if k is not None else None)

    def factor_ok(k) -> bool:
        ft = factor_topology(t, k)
        return topology_axioms_failure(ft.points, ft.opens) is None

    k = _first(subs, lambda k: not factor_ok(k))
    c.add("factor-baig", k is None, f"K={format_set(k.elements)}" if k is not None else None)

    for k in subs:
        c.reports.append(exact_pair_check(k, mod, t.dss, instance=f"{inst.name} K={format_set(k.elements)}"))
    return c.reports


def _hom_reports(inst: HomInstance) -> List[VerdictReport]:
    f = inst.hom
    c = _Collector(inst.name)

    witness = None
    for k in enumerate_submodules(f.source):
        for m in f.source.elements:
            try:
                hom_coset_image(f, k, m)
            except BckError as e:
                witness = f"K={format_set(k.elements)} m={m}: {e}"
                break
        if witness:
            break
    c.add("prp3", witness is None, witness)

    ker, im = kernel(f), image(f)
    c.add(
        "first-iso",
        len(ker) * len(im) == f.source.size,
        f"|Ker f|={len(ker)} |Im f|={len(im)} |M|={f.source.size}",
    )
    return c.reports


def _topologized_reports(inst: TopologizedInstance) -> List[VerdictReport]:
    th = inst.th
    c = _Collector(inst.name)
    labels = th.target_topology.module.labels
    fm = th.finite_map

    compat_w = compatibility_witness(th)
    strict_w = strictness_witness(th)
    compatible, strict = compat_w is None, strict_w is None
    cont_w = continuity_witness(fm)
    continuous = cont_w is None
    open_w = open_map_witness(fm)
    is_open = open_w is None
    onto_w = open_onto_image_witness(fm)
    image_open = th.target_topology.is_open(fm.image(fm.domain.carrier))

    at_zero = is_continuous_at(fm, 0)
    c.add("prp0", continuous == at_zero, f"continuous={continuous} continuous at 0={at_zero}")
    c.implies("st-cp", strict, compatible, compat_w.describe(labels) if compat_w is not None else None)
    # f(m + M_n) = f(M) ∩ (f(m) + M'_n): открыто в f(M), а в M' только если открыт f(M)
    c.implies("st-op", strict and image_open, is_open, f"image of {format_set(open_w)} not open" if open_w is not None else None)
    c.implies(
        "st-op-image",
        strict,
        onto_w is None,
        f"image of {format_set(onto_w)} not open in f(M)" if onto_w is not None else None,
    )
    c.implies("cp-cnt", compatible, continuous, f"preimage of {format_set(cont_w)} not open" if cont_w is not None else None)
    c.implies("st-cnt", strict, continuous, f"preimage of {format_set(cont_w)} not open" if cont_w is not None else None)
    bijective = is_bijective(fm)
    c.implies("stb-hom", bijective and strict, bijective and is_homeomorphism(fm), "strict isomorphism is not a homeomorphism")

    if not compatible:
        for claim in ("thm1", "crthm1", "thm2", "alpha-cnt-open"):
            c.add(claim, True, vacuous=True)
        return c.reports

    square_failure = None
    alpha_failure = None
    epi_failure_n = None
    for n in range(1, th.horizon + 1):
        try:
            square = quotient_square(th, n)
        except BckError as e:
            square_failure = f"n={n}: {e}"
            break
        try:
            alpha = alpha_from_square(th, square, n)
        except BckError as e:
            alpha_failure = f"n={n}: {e}"
            break
        if epi_failure_n is None and not is_surjective(alpha):
            epi_failure_n = n

    c.add("thm1", square_failure is None, square_failure)
    c.add("crthm1", square_failure is None and alpha_failure is None, square_failure or alpha_failure)
    epi_all = square_failure is None and alpha_failure is None and epi_failure_n is None
    c.add(
        "thm2",
        strict == epi_all,
        f"strict={strict} alpha epi for all n={epi_all}"
        + (f" ({strict_w.describe(labels)})" if strict_w else "")
        + (f" (alpha_{epi_failure_n} not onto)" if epi_failure_n else ""),
    )
    c.implies("alpha-cnt-open", epi_all, continuous and onto_w is None, "alpha_n epi for all n but not continuous and open onto f(M)")
    return c.reports


# -----------------------------
# Runner
# -----------------------------

def _run_task(task: Callable[[], List[VerdictReport]], name: str) -> List[VerdictReport]:
    try:
        return task()
    except Exception as e:
        log.exception("suite task failed on %s", name)
        return [VerdictReport(claim="error", instance=name, holds=False, witness=f"{type(e).__name__}: {e}")]


def run_theorem_suite(corpus: Corpus, non_vacuity: bool = False) -> List[VerdictReport]:
    """
    One VerdictReport per (claim, instance), sorted by (claim, instance).
    non_vacuity=True adds corpus-level checks that both truth values of
    strictness occur among compatible homs.
    """
    tasks: List[tuple] = []
    for name, mod in corpus.modules.items():
        tasks.append((name, lambda name=name, mod=mod: _module_reports(name, mod)))
    for s in corpus.spaces:
        tasks.append((s.name, lambda s=s: _space_reports(s)))
    for h in corpus.homs:
        tasks.append((h.name, lambda h=h: _hom_reports(h)))
    for th in corpus.topologized:
        tasks.append((th.name, lambda th=th: _topologized_reports(th)))

    started = time.perf_counter()
    workers = suite_workers()
    reports: List[VerdictReport] = []
    if workers > 1 and len(tasks) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for batch in pool.map(lambda nt: _run_task(nt[1], nt[0]), tasks):
                reports.extend(batch)
    else:
        for name, task in tasks:
            reports.extend(_run_task(task, name))

    if non_vacuity and corpus.topologized:
        reports.extend(_non_vacuity_reports(corpus))

    reports.sort(key=lambda r: r.sort_key)
    failed = [r for r in reports if not r.holds]
    for r in failed:
        log.warning("claim %s fails on %s: %s", r.claim, r.instance, r.witness)
    log.info(
        "suite finished: %d reports, %d failed, %.1fs (workers=%d)",
        len(reports), len(failed), time.perf_counter() - started, workers,
    )
    return reports


def _non_vacuity_reports(corpus: Corpus) -> List[VerdictReport]:
    c = _Collector("corpus")
    compatible_strict = None
    compatible_not_strict = None
    strict_not_open = None
    for inst in corpus.topologized:
        if compatibility_witness(inst.th) is not None:
            continue
        if strictness_witness(inst.th) is None:
            compatible_strict = compatible_strict or inst.name
            if strict_not_open is None and open_map_witness(inst.th.finite_map) is not None:
                strict_not_open = inst.name
        else:
            compatible_not_strict = compatible_not_strict or inst.name
        if compatible_strict and compatible_not_strict and strict_not_open:
            break
    c.add("compatible-not-strict", compatible_not_strict is not None, "no compatible but non-strict hom in corpus")
    c.add(
        "thm2-both-values",
        compatible_strict is not None and compatible_not_strict is not None,
        f"strict example={compatible_strict} non-strict example={compatible_not_strict}",
    )
    # без открытости f(M) строгий гомоморфизм не обязан быть открытым в M'
    c.add("strict-not-open", strict_not_open is not None, "every strict hom in the corpus is open")
    return c.reports
