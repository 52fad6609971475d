"""
Compatible and strict X-homomorphisms between Baig-topologized modules.

- topologized.py - TopologizedHom, совместимость / строгость со свидетелями;
- quotient_maps.py - f_n: M/M_n -> M'/M'_n, коммутативный квадрат, α_n;
- exactness.py - K -> M -> M/K: точность, строгость и открытость i, f;
- reports.py - VerdictReport (pydantic);
- suite.py - корпус экземпляров и прогон всех утверждений.
"""
from .exactness import exact_pair_check
from .quotient_maps import (
    QuotientSquare,
    alpha_epi_witness,
    alpha_from_square,
    alpha_n,
    induced_quotient_map,
    is_alpha_epi_all_n,
    quotient_square,
)
from .reports import ClaimSummary, VerdictReport, summarize
from .suite import (
    Corpus,
    HomInstance,
    SpaceInstance,
    TopologizedInstance,
    build_default_corpus,
    corpus_from_modules,
    default_modules,
    dss_label,
    hom_label,
    run_theorem_suite,
)
from .topologized import (
    ChainWitness,
    TopologizedHom,
    compatibility_witness,
    is_compatible,
    is_strict,
    strictness_witness,
    topologize,
)

__all__ = [
    "ChainWitness",
    "ClaimSummary",
    "Corpus",
    "HomInstance",
    "QuotientSquare",
    "SpaceInstance",
    "TopologizedHom",
    "TopologizedInstance",
    "VerdictReport",
    "alpha_epi_witness",
    "alpha_from_square",
    "alpha_n",
    "build_default_corpus",
    "compatibility_witness",
    "corpus_from_modules",
    "default_modules",
    "dss_label",
    "exact_pair_check",
    "hom_label",
    "induced_quotient_map",
    "is_alpha_epi_all_n",
    "is_compatible",
    "is_strict",
    "quotient_square",
    "run_theorem_suite",
    "strictness_witness",
    "summarize",
    "topologize",
]
