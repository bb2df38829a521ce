"""Acceptance suite: one check per criterion, each reported as a PASS/FAIL line.

Run under pytest (the lines appear in the terminal summary) or directly with
``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import random
import sys
import time
from concurrent.futures import ThreadPoolExecutor

import pytest

from altdimap.algebra import BIVARS, Cyclotomic6, parse_poly
from altdimap.census import _classes, corpus_up_to, enumerate_dimaps
from altdimap.core import AlternatingDimap, validate
from altdimap.invariants import (
    DEGENERATE_REGIMES,
    alt_c,
    ctutte,
    ctutte_all_orderings,
    eti_all_orderings,
    eti_closed_form,
    eti_degenerate,
    gallery,
    plane_graphs,
    tutte_plane,
    zeta_point,
)
from altdimap.minors import excluded_library
from altdimap.structure import a_corners, c_union, is_c_alternating, multiloops, tutte_match
from altdimap.verify import (
    all_triloops,
    check_excluded_minors,
    check_plane_tutte,
    check_subdimap_reduction,
    check_trial_eti,
    check_triality,
    check_zeta,
    is_planar,
    random_admissible_params,
    random_regime_params,
    random_subdimap_pairs,
)

RESULTS: dict[int, tuple[bool, str, float]] = {}
BUDGET = {1: 1, 2: 1, 3: 300, 4: 120, 5: 600, 6: 300, 7: 60, 8: 600, 9: 300, 10: 120, 11: 600, 12: 60}


def polys(*texts, variables=None):
    if variables:
        return {parse_poly(t, variables) for t in texts}
    return {parse_poly(t) for t in texts}


def bipolys(*texts):
    return polys(*texts, variables=BIVARS)


def run(number, fn):
    start = time.perf_counter()
    ok, detail = fn()
    elapsed = time.perf_counter() - start
    if elapsed > BUDGET[number]:
        ok, detail = False, f"{detail}; over budget ({elapsed:.1f}s > {BUDGET[number]}s)"
    RESULTS[number] = (ok, detail, elapsed)
    return ok, detail


def report_lines() -> list[str]:
    return [f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  ({t:.1f}s)  {detail}"
            for n, (ok, detail, t) in sorted(RESULTS.items())]


# ---------------------------------------------------------------------------

def c1_derived_values():
    lib = excluded_library()
    expected = {
        "g13": polys("w*y*z", "a*w^2 + b*w*y + c*w*z"),
        "g23a": polys("w*x*z", "d*w*z + e*w*x + f*w^2"),
        "g23c": polys("w*x*y", "g*w*y + h*w^2 + i*w*x"),
    }
    got = {n: set(eti_all_orderings(lib[n]).values) for n in expected}
    bad = [n for n in expected if got[n] != expected[n]]
    return not bad, "all three sets exact" if not bad else f"mismatch on {bad}"


def c2_g24_values():
    values = set(eti_all_orderings(excluded_library()["g24"]).values)
    required = polys("w*x*y*z", "j*w*y*z + k*w*x*y + l*w*x*z", "a*w^2*x + b*w*x*y + c*w*x*z",
                     "d*w*y*z + e*w*x*y + f*w^2*y", "g*w*y*z + h*w^2*z + i*w*x*z")
    missing = [p.render() for p in required - values]
    ok = len(values) == 12 and not missing
    return ok, f"{len(values)} distinct polynomials (expected 12); missing {missing or 'none'}"


def c3_closed_form():
    rng = random.Random(3)
    params = [random_admissible_params(rng) for _ in range(20)]
    corpus = corpus_up_to(5, connected_only=True)
    bad_planar = bad_other = 0
    for d in corpus:
        for p in params:
            values = set(eti_all_orderings(d, p, precedence=True).witnesses)
            if values != {eti_closed_form(d, p)}:
                if is_planar(d):
                    bad_planar += 1
                else:
                    bad_other += 1
                break
    planar = sum(is_planar(d) for d in corpus)
    detail = (f"planar {planar - bad_planar}/{planar} classes agree; "
              f"higher genus {len(corpus) - planar - bad_other}/{len(corpus) - planar} agree")
    return bad_planar == bad_other == 0, detail


def c4_degenerate():
    rng = random.Random(4)
    corpus = corpus_up_to(4)
    fails = {True: 0, False: 0}
    checks = {True: 0, False: 0}
    for zeros in DEGENERATE_REGIMES:
        for _ in range(5):
            p = random_regime_params(rng, zeros)
            for d in corpus:
                planar = is_planar(d)
                checks[planar] += 1
                values = set(eti_all_orderings(d, p, precedence=True).witnesses)
                if values != {eti_degenerate(d, p)}:
                    fails[planar] += 1
    detail = (f"planar {checks[True] - fails[True]}/{checks[True]} agree; "
              f"higher genus {checks[False] - fails[False]}/{checks[False]} agree")
    return not fails[True] and not fails[False], detail


def c5_triloop_well_definedness():
    corpus = corpus_up_to(5)
    bad = {True: 0, False: 0}
    for d in corpus:
        if eti_all_orderings(d, precedence=True).well_defined != all_triloops(d):
            bad[is_planar(d)] += 1
    planar = sum(is_planar(d) for d in corpus)
    detail = (f"planar {planar - bad[True]}/{planar} agree; "
              f"higher genus {len(corpus) - planar - bad[False]}/{len(corpus) - planar} agree")
    return not bad[True] and not bad[False], detail


def c6_triality():
    corpus = corpus_up_to(4)
    res = check_triality(corpus).merge(check_trial_eti(corpus))
    return res.ok, res.line()


def c7_plane_tutte():
    graphs = plane_graphs(4) + list(gallery().values())
    res = check_plane_tutte(graphs)
    k4 = tutte_plane(gallery()["K4"]) == parse_poly("x^3 + 3*x^2 + 2*x + 4*x*y + 2*y + 3*y^2 + y^3", BIVARS)
    return res.ok and k4, f"{res.line()}; K4 {'matches' if k4 else 'differs'}"


def c8_ctutte_well_definedness():
    planar = corpus_up_to(5, planar_only=True)
    agree = sum(ctutte_all_orderings(d).well_defined == is_c_alternating(d) for d in planar)
    lib = excluded_library()
    g351 = set(ctutte_all_orderings(lib["g351"]).values)
    g23c = set(ctutte_all_orderings(lib["g23c"]).values)
    ok351 = g351 == bipolys("x^2 + x*y", "x^2 + x + y")
    ok23c = g23c == bipolys("x*y", "1")
    detail = (f"recognizer agrees on {agree}/{len(planar)}; "
              f"G351 witnesses {sorted(p.render() for p in g351)}; "
              f"G23c witnesses {sorted(p.render() for p in g23c)}")
    return agree == len(planar) and ok351 and ok23c, detail


def c9_zeta():
    res = check_zeta(corpus_up_to(5), precedence=True)
    a, b = zeta_point(1)
    identity = a * b == Cyclotomic6(1) and a + b == Cyclotomic6(1)
    return res.ok and identity, f"{res.line()}; alpha*beta = alpha+beta = 1: {identity}"


def _cycle(m):
    rot = {f"v{i}": [f"+e{i}", f"-e{(i - 1) % m}"] for i in range(m)}
    ends = {f"e{i}": (f"v{i}", f"v{(i + 1) % m}") for i in range(m)}
    return AlternatingDimap.from_rotation(rot, ends)


def c10_structure():
    x = parse_poly("x", BIVARS)
    y = parse_poly("y", BIVARS)
    cycles_ok = all(ctutte(_cycle(m)) == x ** (m - 1) for m in range(1, 8))

    family = [d for d in corpus_up_to(4, connected_only=True)
              if len(d.vertices) == 1 and is_c_alternating(d)
              and [len(ml) for ml in multiloops(d) if ml.kind == "c"] == [len(d)]]
    loops_ok = all(ctutte(d) == y ** (len(d) - d.stats().cf) for d in family)

    rng = random.Random(10)
    pool = [d for d in corpus_up_to(3, connected_only=True) if is_c_alternating(d)]
    unions_ok = 0
    for _ in range(50):
        s1, s2 = rng.choice(pool), rng.choice(pool)
        s2 = s2.relabel({e: e + "'" for e in s2.edges}, {v: v + "'" for v in s2.vertices})
        v1, v2 = rng.choice(s1.vertices), rng.choice(s2.vertices)
        u = c_union(s1, v1, s2, v2, (rng.choice(a_corners(s1, v1)), rng.choice(a_corners(s2, v2))))
        unions_ok += ctutte(u) == ctutte(s1) * ctutte(s2)

    graphs = plane_graphs(4) + list(gallery().values())
    rng.shuffle(graphs)
    matches = sum(tutte_match(g, alt_c(g)).agree for g in graphs[:20])

    ok = cycles_ok and loops_ok and unions_ok == 50 and matches == 20
    detail = (f"cycles {'ok' if cycles_ok else 'bad'}; {len(family)} multiloops "
              f"{'ok' if loops_ok else 'bad'}; c-unions {unions_ok}/50; tutte_match {matches}/20")
    return ok, detail


def c11_minors():
    corpus = corpus_up_to(5)
    planar = [d for d in corpus if is_planar(d)]
    minors = check_excluded_minors(corpus)
    planar_minors = check_excluded_minors(planar)
    sub = check_subdimap_reduction(random_subdimap_pairs(corpus, random.Random(11), 100))
    detail = f"full corpus {minors.line()}; planar {planar_minors.line()}; {sub.line()}"
    return minors.ok and sub.ok, detail


def c12_census():
    m1 = len(enumerate_dimaps(1))
    m2 = len(enumerate_dimaps(2, connected_only=True))
    first = [enumerate_dimaps(m).pairs for m in range(1, 6)]
    valid = True
    for d in corpus_up_to(5):
        validate(d.as_embedded())
        valid &= all(isinstance(g, int) and g >= 0 for g in d.stats().genus)
    _classes.cache_clear()
    with ThreadPoolExecutor(max_workers=4) as pool:
        again = list(pool.map(lambda m: enumerate_dimaps(m).pairs, range(1, 6)))
    stable = first == again
    ok = m1 == 1 and m2 == 3 and valid and stable
    return ok, f"m=1: {m1}; m=2 connected: {m2}; valid genus: {valid}; reproducible: {stable}"


CRITERIA = {
    1: c1_derived_values, 2: c2_g24_values, 3: c3_closed_form, 4: c4_degenerate,
    5: c5_triloop_well_definedness, 6: c6_triality, 7: c7_plane_tutte, 8: c8_ctutte_well_definedness,
    9: c9_zeta, 10: c10_structure, 11: c11_minors, 12: c12_census,
}


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    ok, detail = run(number, CRITERIA[number])
    assert ok, detail


if __name__ == "__main__":
    for n in sorted(CRITERIA):
        run(n, CRITERIA[n])
        print(report_lines()[-1], flush=True)
    sys.exit(0 if all(ok for ok, _, _ in RESULTS.values()) else 1)
