import pytest
from hypothesis import given, settings, strategies as st

from altdimap.census import corpus_up_to
from altdimap.core import is_isomorphic
from altdimap.errors import MultiSemiloop
from altdimap.reductions import EdgeClass, ReductionKind, classify_edge, edge_flags, reduce, subdivide
from altdimap.triality import compose_kinds, trial, trial2, trial_class, trial_power

CORPUS = corpus_up_to(4)
PLANAR = [d for d in CORPUS if d.stats().total_genus == 0]
KINDS = (ReductionKind.ONE, ReductionKind.OMEGA, ReductionKind.OMEGA2)


def test_ultraloop_class(ultraloop):
    assert classify_edge(ultraloop, "e") is EdgeClass.ULTRALOOP
    for kind in KINDS:
        assert len(reduce(ultraloop, "e", kind)) == 0


def test_digon_edges_are_proper_one_loops(digon):
    assert {classify_edge(digon, e) for e in digon.edges} == {EdgeClass.PROPER_1_LOOP}


def test_multi_type_semiloop_needs_precedence(torus):
    with pytest.raises(MultiSemiloop) as info:
        classify_edge(torus, "a")
    assert info.value.flags == ("1", "omega", "omega2")
    assert classify_edge(torus, "a", precedence=True) is EdgeClass.PROPER_1_SEMILOOP


def test_kind_parse():
    assert ReductionKind.parse("w2") is ReductionKind.OMEGA2
    assert ReductionKind.parse("*") is ReductionKind.STAR


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(CORPUS), st.data())
def test_every_reduction_drops_one_edge(d, data):
    e = data.draw(st.sampled_from(d.edges))
    kind = data.draw(st.sampled_from(KINDS))
    r = reduce(d, e, kind)
    assert len(r) == len(d) - 1
    assert e not in r.edges


def test_subdivide_adds_degree_two_vertex(digon):
    s = subdivide(digon, "a")
    assert len(s) == 3 and len(s.vertices) == 3
    assert edge_flags(s, "a").one_loop


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(CORPUS))
def test_trial_has_order_three(d):
    assert is_isomorphic(trial(trial(trial(d))), d)
    assert is_isomorphic(trial2(d), trial(trial(d)))


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(CORPUS))
def test_trial_rotates_statistics(d):
    a, b = d.stats(), trial(d).stats()
    assert (b.is_, b.af, b.cf) == (a.cf, a.is_, a.af)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(PLANAR), st.data())
def test_trial_commutes_with_reduction(d, data):
    e = data.draw(st.sampled_from(d.edges))
    power = data.draw(st.integers(0, 2))
    nu = data.draw(st.sampled_from(KINDS))
    lhs = reduce(trial_power(d, power), e, nu)
    rhs = trial_power(reduce(d, e, compose_kinds(KINDS[power], nu)), power)
    assert is_isomorphic(lhs, rhs)


def test_trial_class_cycles():
    c = EdgeClass.PROPER_1_LOOP
    assert trial_class(trial_class(trial_class(c))) is c
    assert trial_class(EdgeClass.ULTRALOOP) is EdgeClass.ULTRALOOP
    assert trial_class(EdgeClass.PROPER_EDGE) is EdgeClass.PROPER_EDGE
