# file: src/bcktop_cli/checks.py
"""
Свойства, которые можно спросить у CLI (check-map --props) или объявить
в файле блоком [check NAME].
"""
from __future__ import annotations

import time
from typing import TYPE_CHECKING, Dict, Optional, Tuple

from baig_topology.baig import build_baig, is_connected
from baig_topology.maps import continuity_witness, inverse, is_bijective, is_topological_module, open_map_witness
from bcktop_errors import BckError, InstanceValidationError, format_set
from morphisms.exactness import exact_pair_check
from morphisms.quotient_maps import alpha_epi_witness
from morphisms.reports import VerdictReport
from morphisms.topologized import TopologizedHom, compatibility_witness, strictness_witness

from .instance_format import CheckSection

if TYPE_CHECKING:
    from .loader import LoadedInstance

HOM_PROPS = ("compatible", "strict", "open", "continuous", "homeo", "alpha-epi")
SPACE_CLAIMS = ("connected", "topological-module")
SUBMODULE_CLAIMS = ("clopen", "exact")

Outcome = Tuple[bool, Optional[str]]


# -----------------------------
# Properties of a topologized hom
# -----------------------------

def _open_outcome(th: TopologizedHom) -> Outcome:
    fm = th.finite_map
    w = open_map_witness(fm)
    if w is None:
        return True, None
    return False, f"f({format_set(w)})={format_set(fm.image(w))} is not open"


def _continuous_outcome(th: TopologizedHom) -> Outcome:
    fm = th.finite_map
    w = continuity_witness(fm)
    if w is None:
        return True, None
    return False, f"f^-1({format_set(w)})={format_set(fm.preimage(w))} is not open"


def _homeo_outcome(th: TopologizedHom) -> Outcome:
    fm = th.finite_map
    if not is_bijective(fm):
        return False, "not bijective"
    ok, w = _continuous_outcome(th)
    if not ok:
        return False, w
    inv_w = continuity_witness(inverse(fm))
    if inv_w is not None:
        return False, f"inverse not continuous at {format_set(inv_w)}"
    return True, None


def evaluate_prop(th: TopologizedHom, prop: str) -> Outcome:
    labels = th.target_topology.module.labels
    if prop == "compatible":
        w = compatibility_witness(th)
        return w is None, w.describe(labels) if w is not None else None
    if prop == "strict":
        w = strictness_witness(th)
        return w is None, w.describe(labels) if w is not None else None
    if prop == "open":
        return _open_outcome(th)
    if prop == "continuous":
        return _continuous_outcome(th)
    if prop == "homeo":
        return _homeo_outcome(th)
    if prop == "alpha-epi":
        cw = compatibility_witness(th)
        if cw is not None:
            return False, "not compatible: " + cw.describe(labels)
        n = alpha_epi_witness(th)
        return n is None, f"alpha_{n} is not onto Ker f_{n}" if n is not None else None
    raise ValueError(f"unknown property {prop!r}")


def format_outcome(prop: str, outcome: Outcome) -> str:
    holds, witness = outcome
    line = f"{prop}={'true' if holds else 'false'}"
    if witness:
        line += f" witness={witness}"
    return line


# -----------------------------
# [check] blocks
# -----------------------------

def _required(claim: str) -> Tuple[str, ...]:
    if claim in HOM_PROPS:
        return ("hom", "source_dss", "target_dss")
    if claim in SPACE_CLAIMS:
        return ("dss",)
    if claim in SUBMODULE_CLAIMS:
        return ("dss", "submodule")
    return ()


def _bind(inst: "LoadedInstance", c: CheckSection) -> Dict[str, object]:
    known = HOM_PROPS + SPACE_CLAIMS + SUBMODULE_CLAIMS
    if c.claim not in known:
        raise InstanceValidationError(c.line, f"[check {c.name}] unknown claim {c.claim!r}; available: {', '.join(known)}")
    need = _required(c.claim)
    missing = [k for k in need if k not in c.bindings]
    if missing:
        raise InstanceValidationError(c.line, f"[check {c.name}] missing bindings: {', '.join(missing)}")
    extra = sorted(set(c.bindings) - set(need))
    if extra:
        raise InstanceValidationError(c.line, f"[check {c.name}] unexpected bindings: {', '.join(extra)}")

    b = c.bindings
    try:
        if c.claim in HOM_PROPS:
            h = inst.hom_named(b["hom"])
            return {
                "hom": h.hom,
                "source_dss": h.source.dss_named(b["source_dss"]),
                "target_dss": h.target.dss_named(b["target_dss"]),
            }
        out: Dict[str, object] = {"dss": inst.dss_named(b["dss"])}
        if "submodule" in need:
            out["submodule"] = inst.submodule_named(b["submodule"])
        return out
    except BckError as e:
        raise InstanceValidationError(c.line, f"[check {c.name}] {e}") from e


def validate_check(inst: "LoadedInstance", c: CheckSection) -> None:
    _bind(inst, c)


def _evaluate(inst: "LoadedInstance", c: CheckSection) -> Outcome:
    b = _bind(inst, c)
    if c.claim in HOM_PROPS:
        th = TopologizedHom(
            hom=b["hom"],
            source_topology=build_baig(b["source_dss"]),
            target_topology=build_baig(b["target_dss"]),
        )
        return evaluate_prop(th, c.claim)

    t = build_baig(b["dss"])
    if c.claim == "connected":
        return is_connected(t), "a proper chain entry is clopen"
    if c.claim == "topological-module":
        return is_topological_module(t), "addition or a scalar map is not continuous"
    sub = b["submodule"]
    if c.claim == "clopen":
        return t.is_clopen(sub.elements), f"{format_set(sub.elements)} is not clopen"
    report = exact_pair_check(sub, inst.module, b["dss"])
    return report.holds, report.witness


def evaluate_check(inst: "LoadedInstance", c: CheckSection) -> VerdictReport:
    started = time.perf_counter()
    value, witness = _evaluate(inst, c)
    holds = value == c.expect
    if not holds and value:
        witness = f"{c.claim} holds, expected false"
    return VerdictReport(
        claim=f"check:{c.claim}",
        instance=f"{inst.name}:{c.name}",
        holds=holds,
        witness=None if holds else (witness or "unspecified"),
        elapsed_ms=(time.perf_counter() - started) * 1000.0,
    )
