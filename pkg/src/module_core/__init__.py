"""
BCK-modules over finite BCK-algebras.

Модули пакета:
- groups.py - абелевы группы таблицами (cyclic, klein, direct_product);
- modules.py - BckModule, проверка M1..M4, scalar_module_over_C2, self_module;
- submodules.py - решётка подмодулей, смежные классы, подмодуль как модуль;
- homs.py - X-гомоморфизмы, ядро/образ, перебор гомоморфизмов;
- quotients.py - фактор-модули M/N.
"""
from .groups import AbelianGroup, cyclic_group, direct_product, group_from_table, klein_group, trivial_group
from .homs import (
    ModuleHom,
    compose,
    enumerate_homs,
    enumerate_homs_brute_force,
    hom_coset_image,
    identity_hom,
    image,
    inclusion_hom,
    is_injective,
    is_isomorphism,
    is_surjective,
    kernel,
    module_hom,
    zero_hom,
)
from .modules import BckModule, module_from_tables, scalar_module_over_C2, self_module
from .quotients import QuotientModule, natural_projection, project_submodule, quotient
from .submodules import (
    Submodule,
    canonical_key,
    coset,
    enumerate_submodules,
    intersect_submodules,
    span,
    submodule,
    submodule_as_module,
    submodule_failure,
    sum_submodules,
    whole,
    zero_submodule,
)

__all__ = [
    "AbelianGroup",
    "BckModule",
    "ModuleHom",
    "QuotientModule",
    "Submodule",
    "canonical_key",
    "compose",
    "coset",
    "cyclic_group",
    "direct_product",
    "enumerate_homs",
    "enumerate_homs_brute_force",
    "enumerate_submodules",
    "group_from_table",
    "hom_coset_image",
    "identity_hom",
    "image",
    "inclusion_hom",
    "intersect_submodules",
    "is_injective",
    "is_isomorphism",
    "is_surjective",
    "kernel",
    "klein_group",
    "module_from_tables",
    "module_hom",
    "natural_projection",
    "project_submodule",
    "quotient",
    "scalar_module_over_C2",
    "self_module",
    "span",
    "submodule",
    "submodule_as_module",
    "submodule_failure",
    "sum_submodules",
    "trivial_group",
    "whole",
    "zero_hom",
    "zero_submodule",
]
