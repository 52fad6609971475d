# tests/test_laws.py
from hypothesis import given, settings, strategies as st

from algebra_core.algebra import chain_algebra, leq, meet
from baig_topology.baig import build_baig
from baig_topology.dss import enumerate_dss
from module_core.groups import cyclic_group, klein_group
from module_core.homs import enumerate_homs
from module_core.modules import scalar_module_over_C2
from module_core.submodules import coset, enumerate_submodules, span

MODULES = {
    "M2": scalar_module_over_C2(cyclic_group(2)),
    "M4": scalar_module_over_C2(cyclic_group(4)),
    "K4": scalar_module_over_C2(klein_group()),
    "M8": scalar_module_over_C2(cyclic_group(8)),
}
SPACES = [build_baig(d) for mod in MODULES.values() for d in enumerate_dss(mod, 3)]

modules = st.sampled_from(sorted(MODULES)).map(MODULES.get)
spaces = st.sampled_from(SPACES)


@st.composite
def space_and_subset(draw):
    t = draw(spaces)
    s = draw(st.frozensets(st.integers(0, t.points - 1)))
    return t, s


# 1. chain meet is the minimum and a lower bound
@given(st.integers(1, 8), st.data())
def test_chain_meet_is_min(n, data):
    alg = chain_algebra(n)
    a = data.draw(st.integers(0, n - 1))
    b = data.draw(st.integers(0, n - 1))
    m = meet(alg, a, b)
    assert m == min(a, b)
    assert leq(alg, m, a) and leq(alg, m, b)


# 2. V open <=> V + M_k = V
@given(space_and_subset())
def test_open_iff_saturated_by_last_entry(ts):
    t, s = ts
    last = t.dss.last
    saturated = all(coset(t.module, v, last) <= s for v in s)
    assert t.is_open(s) == saturated


# 3. opens are closed under union and intersection
@settings(max_examples=60)
@given(spaces, st.data())
def test_opens_form_a_lattice(t, data):
    u = data.draw(st.sampled_from(t.opens))
    v = data.draw(st.sampled_from(t.opens))
    assert t.is_open(u | v)
    assert t.is_open(u & v)


# 4. translation preserves openness
@given(space_and_subset(), st.data())
def test_translates_of_opens_are_open(ts, data):
    t, s = ts
    a = data.draw(st.integers(0, t.points - 1))
    shifted = frozenset(t.module.plus(a, v) for v in s)
    assert t.is_open(shifted) == t.is_open(s)


# 5. span is the least submodule containing its generators
@given(modules, st.data())
def test_span_is_least(mod, data):
    gens = data.draw(st.frozensets(st.integers(0, mod.size - 1), max_size=3))
    sp = span(mod, gens)
    assert gens <= sp.members
    for s in enumerate_submodules(mod):
        if gens <= s.members:
            assert sp.issubset(s)


# 6. homs preserve + and the action on random inputs
@given(st.sampled_from([("M4", "M2"), ("M8", "M4"), ("K4", "K4"), ("M2", "M8")]), st.data())
def test_homs_are_additive(pair, data):
    src, dst = MODULES[pair[0]], MODULES[pair[1]]
    for f in enumerate_homs(src, dst):
        a = data.draw(st.integers(0, src.size - 1))
        b = data.draw(st.integers(0, src.size - 1))
        x = data.draw(st.integers(0, src.algebra.size - 1))
        assert f(src.plus(a, b)) == dst.plus(f(a), f(b))
        assert f(src.act(x, a)) == dst.act(x, f(a))
