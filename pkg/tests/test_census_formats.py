import json

import pytest
from hypothesis import given, settings, strategies as st

from altdimap.algebra import PARAMS, ParamSeq16
from altdimap.census import corpus_up_to, enumerate_dimaps, load_corpus, save_corpus
from altdimap.core import is_isomorphic
from altdimap.errors import FormatError, SizeBoundExceeded
from altdimap.formats import (
    emit_adm,
    emit_params,
    emit_pg,
    emit_trin,
    parse_adm,
    parse_params,
    parse_pg,
    parse_trin,
)
from altdimap.invariants import gallery, tutte_plane

from conftest import U_TEXT

CORPUS = corpus_up_to(4)


@pytest.mark.parametrize("m, total, connected, planar", [
    (1, 1, 1, 1), (2, 4, 3, 3), (3, 11, 7, 6), (4, 43, 26, 20), (5, 161, 97, 60),
])
def test_census_counts(m, total, connected, planar):
    assert len(enumerate_dimaps(m)) == total
    assert len(enumerate_dimaps(m, connected_only=True)) == connected
    assert len(enumerate_dimaps(m, connected_only=True, planar_only=True)) == planar


def test_census_bound():
    with pytest.raises(SizeBoundExceeded):
        enumerate_dimaps(9)


def test_corpus_round_trip(tmp_path):
    c = enumerate_dimaps(3)
    path = tmp_path / "c.jsonl"
    save_corpus(c, path)
    lines = path.read_text().splitlines()
    assert len(lines) == len(c)
    assert set(json.loads(lines[0])) == {"m", "sigma1", "sigmaw"}
    assert load_corpus(path).pairs == c.pairs


def test_ultraloop_document_validates():
    assert len(parse_adm(U_TEXT)) == 1


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(CORPUS))
def test_adm_round_trip_is_byte_stable(d):
    text = emit_adm(d)
    assert emit_adm(parse_adm(text)) == text
    assert is_isomorphic(parse_adm(text), d)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(CORPUS))
def test_trin_round_trip(d):
    t = d.to_triple()
    assert parse_trin(emit_trin(t)) == t


def test_pg_round_trip():
    for g in gallery().values():
        text = emit_pg(g)
        assert emit_pg(parse_pg(text)) == text
        assert tutte_plane(parse_pg(text)) == tutte_plane(g)


mixed = st.fixed_dictionaries({}, optional={
    n: st.one_of(st.just(n), st.integers(-5, 5), st.fractions(max_denominator=7))
    for n in PARAMS})


@given(mixed)
def test_params_round_trip(values):
    p = ParamSeq16(values)
    assert parse_params(emit_params(p)).as_dict() == p.as_dict()


def test_params_mixing_numbers_and_symbols():
    p = parse_params('{"w": 1, "x": 0, "y": "y", "z": "z"}')
    assert p["w"] == 1 and p["x"] == 0 and p.is_symbolic("y")


def test_syntax_error_reports_line():
    with pytest.raises(FormatError) as info:
        parse_adm('{\n"format": "adm-v1",\n "vertices": [,\n}')
    assert info.value.line == 3


def test_missing_field_is_named():
    with pytest.raises(FormatError, match="vertices"):
        parse_adm('{"format":"adm-v1","edges":[]}')


def test_wrong_format_tag():
    with pytest.raises(FormatError):
        parse_adm('{"format":"pg-v1","vertices":[],"edges":[]}')
