import itertools

import pytest

from algebra_core.algebra import (
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
from bcktop_errors import AxiomViolation, MalformedTable


def _oracle_is_bck(size, t):
    # независимая проверка, без порядка сканирования
    els = range(size)
    return (
        all(t[t[t[a][b]][t[a][c]]][t[c][b]] == 0 for a, b, c in itertools.product(els, repeat=3))
        and all(t[t[a][t[a][b]]][b] == 0 for a, b in itertools.product(els, repeat=2))
        and all(t[a][a] == 0 for a in els)
        and all(t[0][a] == 0 for a in els)
        and all(not (t[a][b] == 0 and t[b][a] == 0) or a == b for a, b in itertools.product(els, repeat=2))
    )


# -----------------------------
# algebra_from_table
# -----------------------------

def test_trivial_algebra_is_valid():
    alg = algebra_from_table(1, [[0]])
    assert alg.size == 1
    assert alg.top == 0


def test_two_chain_table_is_valid_and_bounded():
    alg = algebra_from_table(2, [[0, 0], [1, 0]], one=1)
    assert alg.top == 1
    assert is_bounded(alg)


def test_xor_table_fails_bck4_first():
    with pytest.raises(AxiomViolation) as ei:
        algebra_from_table(2, [[0, 1], [1, 0]])
    assert ei.value.axiom == "BCK4"
    assert ei.value.witnesses == (1,)


def test_declared_one_must_be_greatest():
    with pytest.raises(AxiomViolation) as ei:
        algebra_from_table(2, [[0, 0], [1, 0]], one=0)
    assert ei.value.axiom == "bounded"


@pytest.mark.parametrize(
    "size, star",
    [
        (2, [[0, 0]]),
        (2, [[0, 0], [1]]),
        (2, [[0, 0], [2, 0]]),
        (0, []),
    ],
)
def test_malformed_tables(size, star):
    with pytest.raises(MalformedTable):
        algebra_from_table(size, star)


# -----------------------------
# chain_algebra
# -----------------------------

def test_chain_tables():
    assert chain_algebra(1).star == ((0,),)
    assert chain_algebra(2).star == ((0, 0), (1, 0))
    assert chain_algebra(4).star[3] == (3, 2, 1, 0)


@pytest.mark.parametrize("n", range(1, 9))
def test_chain_passes_validation(n):
    c = chain_algebra(n)
    alg = algebra_from_table(n, c.star, one=n - 1)
    assert alg == c


def test_chain_rejects_non_positive():
    with pytest.raises(MalformedTable):
        chain_algebra(0)


# -----------------------------
# meet / leq / join
# -----------------------------

def test_meet_on_four_chain():
    alg = chain_algebra(4)
    assert meet(alg, 2, 3) == 2
    for a in alg.elements:
        assert meet(alg, a, a) == a
        assert meet(alg, 0, a) == 0


def test_leq_on_three_chain():
    alg = chain_algebra(3)
    assert leq(alg, 1, 2)
    assert not leq(alg, 2, 1)
    assert all(leq(alg, a, a) for a in alg.elements)


def test_join_is_max_on_chain():
    alg = chain_algebra(4)
    for u, v in itertools.product(alg.elements, repeat=2):
        assert join(alg, u, v) == max(u, v)


def test_join_needs_bounded_algebra():
    # 0 < 1, 0 < 2, 1 и 2 несравнимы: ограниченного элемента нет
    alg = algebra_from_table(3, [[0, 0, 0], [1, 0, 1], [2, 2, 0]])
    assert greatest_element(alg) is None
    assert not is_bounded(alg)
    with pytest.raises(ValueError):
        join(alg, 1, 2)


# -----------------------------
# predicates
# -----------------------------

def test_predicates_on_two_chain():
    alg = chain_algebra(2)
    assert (is_bounded(alg), is_commutative(alg), is_implicative(alg)) == (True, True, True)


def test_predicates_on_four_chain():
    alg = chain_algebra(4)
    assert (is_bounded(alg), is_commutative(alg), is_implicative(alg)) == (True, True, False)
    # 1*(2*1) = 1*1 = 0 != 1
    assert alg.op(1, alg.op(2, 1)) == 0


def test_predicates_on_trivial_algebra():
    alg = chain_algebra(1)
    assert is_bounded(alg) and is_commutative(alg) and is_implicative(alg)


# -----------------------------
# exhaustive classification
# -----------------------------

def test_exactly_one_two_element_algebra():
    assert count_bck_algebras(2) == 1


@pytest.mark.parametrize("size", [2, 3])
def test_checker_agrees_with_oracle(size):
    checked = 0
    for t in iter_tables(size):
        assert (first_axiom_violation(size, t) is None) == _oracle_is_bck(size, t)
        checked += 1
    assert checked == size ** (size * size)


def test_every_valid_three_table_is_a_poset():
    for t in iter_tables(3):
        if first_axiom_violation(3, t) is not None:
            continue
        alg = algebra_from_table(3, t)
        for a, b in itertools.product(alg.elements, repeat=2):
            if leq(alg, a, b) and leq(alg, b, a):
                assert a == b
            if is_bounded(alg) and is_commutative(alg):
                m = meet(alg, a, b)
                assert m == meet(alg, b, a)
                assert leq(alg, m, a) and leq(alg, m, b)
