import pytest
from hypothesis import given, settings, strategies as st

from altdimap.census import corpus_up_to
from altdimap.core import (
    AlternatingDimap,
    canonical_form,
    from_triple,
    index_pair,
    is_isomorphic,
    is_subdimap,
    triple_from_index,
)
from altdimap.errors import AlternationViolation, DanglingHalfEdge, InputError
from altdimap.formats import parse_adm

CORPUS = corpus_up_to(4)


def test_ultraloop_stats(ultraloop):
    st_ = ultraloop.stats()
    assert (st_.k, st_.is_, st_.af, st_.cf, st_.genus) == (1, 1, 1, 1, (0,))


def test_digon_stats(digon):
    st_ = digon.stats()
    assert (st_.k, st_.is_, st_.af, st_.cf) == (1, 2, 1, 1)


def test_torus_genus(torus):
    assert torus.stats().genus == (1,)


def test_faces_of_digon(digon):
    cw, acw = digon.faces()
    assert len(cw) == 1 and len(acw) == 1
    assert sorted(cw[0].boundary) == ["a", "b"]


def test_non_alternating_rotation_rejected():
    with pytest.raises(AlternationViolation):
        AlternatingDimap.from_rotation({"v": ["+e", "+f", "-e", "-f"]},
                                       {"e": ("v", "v"), "f": ("v", "v")})


def test_missing_slot_rejected():
    text = ('{"format":"adm-v1","vertices":[{"id":"v","rot":["+e","-e"]}],'
            '"edges":[{"id":"e","tail":"v","head":"v"},{"id":"f","tail":"v","head":"v"}]}')
    with pytest.raises(DanglingHalfEdge):
        parse_adm(text)
    with pytest.raises(InputError):
        parse_adm(text)


def test_triple_round_trip():
    for d in CORPUS:
        assert is_isomorphic(from_triple(d.to_triple()), d)
        s, l = index_pair(d)
        assert is_isomorphic(from_triple(triple_from_index(s, l)), d)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(CORPUS), st.randoms(use_true_random=False))
def test_canonical_form_ignores_labels(d, rnd):
    names = [f"n{i}" for i in range(len(d))]
    rnd.shuffle(names)
    relabelled = d.relabel(dict(zip(d.edges, names)), {v: "q" + v for v in d.vertices})
    assert canonical_form(relabelled).code == canonical_form(d).code


def test_distinct_classes_have_distinct_codes():
    codes = [canonical_form(d).code for d in CORPUS]
    assert len(set(codes)) == len(codes)


def test_subdimap(digon, ultraloop):
    assert is_subdimap(digon, digon)
    assert not is_subdimap(digon, ultraloop)
