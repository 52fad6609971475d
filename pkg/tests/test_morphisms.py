import pytest

from baig_topology.dss import make_dss
from baig_topology.maps import is_continuous, is_open_map, is_open_onto_image
from bcktop_errors import DssViolation, MalformedTable, NotCompatible
from module_core.groups import cyclic_group
from module_core.homs import identity_hom, module_hom, zero_hom
from module_core.modules import scalar_module_over_C2
from module_core.submodules import submodule, submodule_as_module, whole, zero_submodule
from morphisms.exactness import exact_pair_check
from morphisms.quotient_maps import alpha_epi_witness, alpha_n, induced_quotient_map, is_alpha_epi_all_n, quotient_square
from morphisms.topologized import compatibility_witness, is_compatible, is_strict, strictness_witness, topologize


@pytest.fixture(scope="module")
def mod2(m4, m2, m4_split, m2_split):
    """f(m) = m mod 2: (M4,[M4,{0,2}]) -> (M2,[M2,{0}])"""
    return topologize(module_hom(m4, m2, [0, 1, 0, 1]), m4_split, m2_split)


@pytest.fixture(scope="module")
def embed(m2, m4, m2_split, m4_whole):
    """g(1) = 2: (M2,[M2,{0}]) -> (M4,[M4])"""
    return topologize(module_hom(m2, m4, [0, 2]), m2_split, m4_whole)


# -----------------------------
# compatible / strict
# -----------------------------

def test_mod_two_is_strict(mod2):
    assert is_compatible(mod2)
    assert is_strict(mod2)


def test_embedding_is_compatible_not_strict(embed):
    assert is_compatible(embed)
    w = strictness_witness(embed)
    assert w is not None
    assert w.describe() == "n=2 f(M_2)={0} f(M)∩M'_2={0,2}"


def test_zero_hom_is_always_compatible(m4, m4_split, m4_whole, m4_discrete):
    assert is_compatible(topologize(zero_hom(m4, m4), m4_split, m4_discrete))
    assert is_compatible(topologize(zero_hom(m4, m4), m4_whole, m4_discrete))


def test_identity_with_equal_chains_is_strict(m4, m4_split):
    assert is_strict(topologize(identity_hom(m4), m4_split, m4_split))


def test_incompatible_witness(m4, m4_whole, m4_split):
    th = topologize(identity_hom(m4), m4_whole, m4_split)
    w = compatibility_witness(th)
    assert (w.n, w.lhs, w.rhs) == (2, frozenset(range(4)), frozenset({0, 2}))
    assert w.describe() == "n=2 f(M_2)={0,1,2,3} M'_2={0,2}"
    assert not is_strict(th)


def test_topologize_checks_modules(m4, m2, m4_split):
    with pytest.raises(MalformedTable):
        topologize(identity_hom(m4), m4_split, make_dss(m2, [range(2)]))


def test_compatible_and_strict_above_the_carrier_cap(monkeypatch):
    monkeypatch.delenv("BCKTOP_MAX_CARRIER", raising=False)
    z32 = scalar_module_over_C2(cyclic_group(32))
    chain = make_dss(z32, [range(32), range(0, 32, 2)])
    double = topologize(module_hom(z32, z32, [2 * m % 32 for m in range(32)]), chain, chain)
    assert is_compatible(double)
    w = strictness_witness(double)
    assert (w.n, w.lhs, w.rhs) == (2, frozenset(range(0, 32, 4)), frozenset(range(0, 32, 2)))
    assert is_strict(topologize(identity_hom(z32), chain, chain))


def test_submodule_module_is_not_confused_with_an_equal_table(m2, m4, m2_split):
    k = submodule_as_module(submodule(m4, [0, 2]))
    assert k != m2
    with pytest.raises(MalformedTable):
        topologize(identity_hom(k), m2_split, m2_split)
    induced_quotient_map(topologize(identity_hom(m2), m2_split, m2_split), 2)
    k_split = make_dss(k, [range(2), [0]])
    f_2 = induced_quotient_map(topologize(identity_hom(k), k_split, k_split), 2)
    assert f_2.source.labels == (0, 2)


def test_horizon_uses_the_longer_chain(mod2, m4, m4_discrete, m4_split):
    assert mod2.horizon == 2
    assert topologize(identity_hom(m4), m4_discrete, m4_split).horizon == 3


# -----------------------------
# quotient maps / alpha
# -----------------------------

def test_induced_quotient_map_commutes(mod2):
    sq = quotient_square(mod2, 1)
    assert sq.commutes()
    f1 = induced_quotient_map(mod2, 1)
    assert f1.table == (0,)
    f2 = induced_quotient_map(mod2, 2)
    # M4/{0,2} -> M2/{0}: очевидная биекция
    assert f2.table == (0, 1)


def test_identity_and_zero_induce_identity_and_zero(m4, m4_split):
    th = topologize(identity_hom(m4), m4_split, m4_split)
    assert induced_quotient_map(th, 2).table == (0, 1)
    z = topologize(zero_hom(m4, m4), m4_split, m4_split)
    assert induced_quotient_map(z, 2).table == (0, 0)


def test_quotient_square_needs_compatibility(m4, m4_whole, m4_split):
    th = topologize(identity_hom(m4), m4_whole, m4_split)
    with pytest.raises(NotCompatible) as ei:
        quotient_square(th, 1)
    assert ei.value.n == 2


def test_alpha_on_strict_hom(mod2):
    a2 = alpha_n(mod2, 2)
    assert a2.source.labels == (0, 2)
    assert a2.table == (0, 0)
    assert is_alpha_epi_all_n(mod2)


def test_alpha_on_embedding(embed):
    assert alpha_n(embed, 1).table == (0,)
    assert alpha_epi_witness(embed) == 2
    assert not is_alpha_epi_all_n(embed)


def test_alpha_on_identity(m4, m4_discrete):
    assert is_alpha_epi_all_n(topologize(identity_hom(m4), m4_discrete, m4_discrete))


# -----------------------------
# open / continuous
# -----------------------------

def test_strict_hom_onto_open_image_is_open(mod2):
    fm = mod2.finite_map
    assert is_open_map(fm)
    assert is_continuous(fm)


def test_strict_zero_hom_is_open_only_onto_its_image(m4, m4_discrete, m4_split):
    th = topologize(zero_hom(m4, m4), m4_discrete, m4_split)
    assert is_strict(th)
    assert not is_open_map(th.finite_map)
    assert is_open_onto_image(th.finite_map)


# -----------------------------
# exact pairs
# -----------------------------

@pytest.mark.parametrize("k", [[0], [0, 2], [0, 1, 2, 3]])
def test_exact_pair_on_m4(m4, m4_split, k):
    r = exact_pair_check(submodule(m4, k), m4, m4_split)
    assert r.holds, r.witness
    assert r.claim == "exact"


def test_exact_pair_on_discrete_chain(m4, m4_discrete):
    for k in (zero_submodule(m4), whole(m4)):
        assert exact_pair_check(k, m4, m4_discrete, instance="M4").holds


def test_exact_pair_rejects_foreign_chain(m4, m2_split):
    with pytest.raises(DssViolation):
        exact_pair_check(zero_submodule(m4), m4, m2_split)

