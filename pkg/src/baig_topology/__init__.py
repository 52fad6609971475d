"""
Baig topology of a decreasing sequence of submodules.

- dss.py - цепочки M_1 ⊇ M_2 ⊇ ... и их перебор;
- spaces.py - конечные пространства по базе, дискретное/антидискретное, произведение;
- baig.py - build_baig, связность, индуцированная и факторная топологии;
- maps.py - отображения (ν, τ_a, μ_x, χ_N, +) и непрерывность/открытость.
"""
from .baig import (
    BaigTopology,
    baig_base,
    build_baig,
    clopen_sets,
    factor_dss,
    factor_topology,
    induced_dss,
    induced_topology,
    is_connected,
    relative_opens,
)
from .dss import Dss, enumerate_dss, make_dss
from .maps import (
    FiniteMap,
    addition_map,
    characteristic_map,
    continuity_at_witness,
    continuity_witness,
    hom_map,
    inverse,
    is_bijective,
    is_continuous,
    is_continuous_at,
    is_homeomorphism,
    is_open_map,
    is_open_onto_image,
    is_topological_module,
    negation_map,
    open_map_witness,
    open_onto_image_witness,
    scalar_map,
    table_map,
    translation_map,
)
from .spaces import (
    FiniteTopology,
    all_subsets,
    discrete_topology,
    indiscrete_topology,
    product_topology,
    sort_subsets,
    topology_axioms_failure,
    unions_of,
)

__all__ = [
    "BaigTopology",
    "Dss",
    "FiniteMap",
    "FiniteTopology",
    "addition_map",
    "all_subsets",
    "baig_base",
    "build_baig",
    "characteristic_map",
    "clopen_sets",
    "continuity_at_witness",
    "continuity_witness",
    "discrete_topology",
    "enumerate_dss",
    "factor_dss",
    "factor_topology",
    "hom_map",
    "indiscrete_topology",
    "induced_dss",
    "induced_topology",
    "inverse",
    "is_bijective",
    "is_connected",
    "is_continuous",
    "is_continuous_at",
    "is_homeomorphism",
    "is_open_map",
    "is_open_onto_image",
    "is_topological_module",
    "make_dss",
    "negation_map",
    "open_map_witness",
    "open_onto_image_witness",
    "product_topology",
    "relative_opens",
    "scalar_map",
    "sort_subsets",
    "table_map",
    "topology_axioms_failure",
    "translation_map",
    "unions_of",
]
