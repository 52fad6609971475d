# file: src/morphisms/exactness.py
from __future__ import annotations

import time

from baig_topology.baig import build_baig, factor_dss, induced_dss
from baig_topology.dss import Dss
from baig_topology.maps import is_open_map, open_map_witness, open_onto_image_witness
from bcktop_errors import DssViolation, format_set
from module_core.homs import image, inclusion_hom, kernel
from module_core.modules import BckModule
from module_core.quotients import natural_projection
from module_core.submodules import Submodule, ensure_submodule_of

from .reports import VerdictReport
from .topologized import TopologizedHom, strictness_witness


def exact_pair_check(k: Submodule, m: BckModule, dss: Dss, instance: str = "") -> VerdictReport:
    """
    K --i--> M --f--> M/K: Im i = Ker f; i strict for (K ∩ M_n) vs (M_n),
    f strict for (M_n) vs ((M_n + K)/K); f open, i open onto K
    (i is open into M only when K is open there, i.e. M_k ⊆ K).
    """
    started = time.perf_counter()
    ensure_submodule_of(k, m)
    if dss.module != m:
        raise DssViolation(0, "chain is over a different module")

    i = inclusion_hom(k)
    q, fdss = factor_dss(dss, k)
    f = natural_projection(q)

    t = build_baig(dss)
    th_i = TopologizedHom(hom=i, source_topology=build_baig(induced_dss(dss, k)), target_topology=t)
    th_f = TopologizedHom(hom=f, source_topology=t, target_topology=build_baig(fdss))

    witness = None
    im_i, ker_f = image(i), kernel(f)
    if im_i.elements != ker_f.elements:
        witness = f"Im i={format_set(im_i.elements)} Ker f={format_set(ker_f.elements)}"
    elif strictness_witness(th_i) is not None:
        witness = "i not strict: " + strictness_witness(th_i).describe()
    elif strictness_witness(th_f) is not None:
        witness = "f not strict: " + strictness_witness(th_f).describe()
    elif open_onto_image_witness(th_i.finite_map) is not None:
        witness = f"i not open onto K at {format_set(open_onto_image_witness(th_i.finite_map))}"
    elif not is_open_map(th_f.finite_map):
        witness = f"f not open at {format_set(open_map_witness(th_f.finite_map))}"

    return VerdictReport(
        claim="exact",
        instance=instance or f"K={format_set(k.elements)}",
        holds=witness is None,
        witness=witness,
        elapsed_ms=(time.perf_counter() - started) * 1000.0,
    )
