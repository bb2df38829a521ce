import random

import pytest

from altdimap.algebra import BIVARS, PARAMS, ParamSeq16, parse_poly
from altdimap.census import corpus_up_to
from altdimap.errors import ConditionsViolated, NotWellDefined
from altdimap.invariants import (
    alt_a,
    alt_c,
    atutte,
    ctutte,
    ctutte_all_orderings,
    ctutte_zeta,
    eti_all_orderings,
    eti_closed_form,
    eti_derived,
    gallery,
    tutte_plane,
)
from altdimap.minors import excluded_library
from altdimap.triality import trial, trial_params
from altdimap.verify import random_admissible_params, random_violating_params


def bi(text):
    return parse_poly(text, BIVARS)


def test_ultraloop_eti_is_w(ultraloop):
    assert eti_derived(ultraloop).render() == "w"


def test_digon_ctutte_is_x(digon):
    assert ctutte(digon) == bi("x")
    assert atutte(digon) == bi("x")


def test_g13_distinct_values():
    values = {v.render() for v in eti_all_orderings(excluded_library()["g13"]).values}
    assert values == {"w*y*z", "a*w^2 + b*w*y + c*w*z"}


def test_witness_orderings_reproduce_their_values():
    d = excluded_library()["g24"]
    derived = eti_all_orderings(d)
    for value, order in derived.witnesses.items():
        assert eti_derived(d, order) == value


def test_single_raises_when_ordering_dependent():
    with pytest.raises(NotWellDefined):
        eti_all_orderings(excluded_library()["g13"]).single()


def test_closed_form_on_admissible_params():
    rng = random.Random(7)
    p = random_admissible_params(rng)
    for d in corpus_up_to(3, planar_only=True):
        assert set(eti_all_orderings(d, p).witnesses) == {eti_closed_form(d, p)}


def test_closed_form_rejects_violations(ultraloop):
    with pytest.raises(ConditionsViolated):
        eti_closed_form(ultraloop, random_violating_params(random.Random(1)))


def test_trial_eti_identity():
    d = excluded_library()["g23c"]
    base = ParamSeq16.symbolic()
    for order in (["e", "p", "q"], ["q", "e", "p"]):
        assert eti_derived(d, order, base) == eti_derived(trial(d), order, trial_params(base, 1))


@pytest.mark.parametrize("name, expected", [
    ("P3", "x^3"),
    ("C3", "x^2 + x + y"),
    ("theta", "x + y + y^2"),
    ("bouquet3", "y^3"),
    ("K4", "x^3 + 3*x^2 + 2*x + 4*x*y + 2*y + 3*y^2 + y^3"),
])
def test_gallery_tutte(name, expected):
    g = gallery()[name]
    assert tutte_plane(g) == bi(expected)
    assert ctutte(alt_c(g)) == bi(expected)
    assert atutte(alt_a(g)) == bi(expected)


def test_ctutte_of_non_c_alternating_is_ordering_dependent():
    with pytest.raises(NotWellDefined):
        ctutte(excluded_library()["g23c"])


def test_g23c_witnesses():
    assert set(ctutte_all_orderings(excluded_library()["g23c"]).values) == {bi("x*y"), bi("1")}


def test_zeta_value_is_a_unit(digon):
    v = ctutte_zeta(digon, 1)
    assert v * v.conjugate() == 1


def test_params_cover_sixteen_names():
    assert len(PARAMS) == 16 and len(set(PARAMS)) == 16
