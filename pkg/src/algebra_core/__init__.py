"""
Finite BCK-algebras as operation tables.

- algebra.py - BckAlgebra, проверка BCK1..BCK5, chain_algebra, meet/leq и предикаты.
"""
from .algebra import (
    BckAlgebra,
    algebra_from_table,
    chain_algebra,
    count_bck_algebras,
    first_axiom_violation,
    greatest_element,
    is_bounded,
    is_commutative,
    is_implicative,
    iter_tables,
    join,
    leq,
    meet,
)

__all__ = [
    "BckAlgebra",
    "algebra_from_table",
    "chain_algebra",
    "count_bck_algebras",
    "first_axiom_violation",
    "greatest_element",
    "is_bounded",
    "is_commutative",
    "is_implicative",
    "iter_tables",
    "join",
    "leq",
    "meet",
]
