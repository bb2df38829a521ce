"""Property-replay suites over the census, shared by the CLI and the test suite.

Every check returns a :class:`SuiteResult` counting passes and keeping the
first few failures for the report.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import PARAMS, ParamSeq16, check_eti_conditions
from .census import corpus_up_to
from .core import AlternatingDimap, is_isomorphic
from .errors import MultiSemiloop
from .invariants import (
    DEGENERATE_REGIMES,
    alt_a,
    alt_c,
    atutte_all_orderings,
    atutte_derived,
    atutte_zeta,
    ctutte_all_orderings,
    ctutte_derived,
    ctutte_zeta,
    eti_all_orderings,
    eti_closed_form,
    eti_degenerate,
    eti_derived,
    gallery,
    plane_graphs,
    tutte_plane,
    zeta_point,
)
from .minors import excluded_library, minors_up_to, reduce_to_subdimap
from .reductions import EdgeClass, ReductionKind, classify_edge, edge_flags, reduce
from .structure import is_a_alternating, is_c_alternating, standalone
from .triality import compose_kinds, trial, trial_class, trial_params, trial_power

TRILOOPS = {EdgeClass.ULTRALOOP, EdgeClass.PROPER_1_LOOP, EdgeClass.PROPER_OMEGA_LOOP,
            EdgeClass.PROPER_OMEGA2_LOOP}
KINDS = (ReductionKind.ONE, ReductionKind.OMEGA, ReductionKind.OMEGA2)


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    failures: list = field(default_factory=list)

    def check(self, ok: bool, detail=None) -> bool:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.failures) < 5:
                self.failures.append(detail)
        return ok

    def merge(self, other: "SuiteResult") -> "SuiteResult":
        self.passed += other.passed
        self.failed += other.failed
        self.failures.extend(other.failures[: max(0, 5 - len(self.failures))])
        return self

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def line(self) -> str:
        return f"{self.name}: {self.passed} passed, {self.failed} failed"


def is_planar(d: AlternatingDimap) -> bool:
    return len(d) == 0 or d.stats().total_genus == 0


def all_triloops(d: AlternatingDimap) -> bool:
    return all(edge_flags(d, e).triloop for e in d.edges)


# ---------------------------------------------------------------------------
# parameter generators

def _nonzero(rng: random.Random, lo=-6, hi=6) -> Fraction:
    v = 0
    while v == 0:
        v = rng.randint(lo, hi)
    return Fraction(v, rng.choice((1, 1, 2, 3)))


def _any(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-6, 6), rng.choice((1, 1, 2, 3)))


def random_admissible_params(rng: random.Random) -> ParamSeq16:
    """Random rational sequence with w, x, y, z nonzero satisfying all four identities."""
    v = {n: _any(rng) for n in PARAMS}
    for n in "wxyz":
        v[n] = _nonzero(rng)
    w, x, y, z = (v[n] for n in "wxyz")
    v["l"] = (x * y * z - v["j"] * y * z - v["k"] * x * y) / (x * z)
    v["a"] = (y * z - v["b"] * y - v["c"] * z) / w
    v["f"] = (x * z - v["d"] * z - v["e"] * x) / w
    v["h"] = (x * y - v["g"] * y - v["i"] * x) / w
    return ParamSeq16(v)


def random_violating_params(rng: random.Random) -> ParamSeq16:
    """Like :func:`random_admissible_params` but with one identity broken."""
    p = random_admissible_params(rng).as_dict()
    target = rng.choice("lafh")
    p[target] = p[target] + _nonzero(rng)
    return ParamSeq16(p)


def random_regime_params(rng: random.Random, zeros: frozenset) -> ParamSeq16:
    must_vanish, identity = DEGENERATE_REGIMES[zeros]
    v = {n: _any(rng) for n in PARAMS}
    v["w"] = _nonzero(rng)
    for n in "xyz":
        v[n] = Fraction(0) if n in zeros else _nonzero(rng)
    for n in must_vanish:
        v[n] = Fraction(0)
    w, x, y, z = (v[n] for n in "wxyz")
    if identity == "yz":
        v["a"] = (y * z - v["b"] * y - v["c"] * z) / w
    elif identity == "xz":
        v["f"] = (x * z - v["d"] * z - v["e"] * x) / w
    elif identity == "xy":
        v["h"] = (x * y - v["g"] * y - v["i"] * x) / w
    return ParamSeq16(v)


# ---------------------------------------------------------------------------
# ETI

def check_closed_form(dimaps, params_list, name="eti closed form") -> SuiteResult:
    res = SuiteResult(name)
    for d in dimaps:
        for p in params_list:
            try:
                values = set(eti_all_orderings(d, p).witnesses)
            except MultiSemiloop as err:
                res.check(False, (d, f"multi-type semiloop {err.edge}"))
                break
            expected = eti_closed_form(d, p)
            if not res.check(values == {expected}, (d, p, values, expected)):
                break
    return res


def check_violations_detected(dimaps, params_list, name="eti violations") -> SuiteResult:
    """Each inadmissible sequence makes some dimap ordering-dependent."""
    res = SuiteResult(name)
    dimaps = list(dimaps)
    for p in params_list:
        hit = any(not eti_all_orderings(d, p).well_defined for d in dimaps)
        res.check(hit, p)
    return res


def check_triloop_well_definedness(dimaps, name="triloop well-definedness") -> SuiteResult:
    res = SuiteResult(name)
    for d in dimaps:
        try:
            wd = eti_all_orderings(d).well_defined
        except MultiSemiloop as err:
            res.check(False, (d, f"multi-type semiloop {err.edge}"))
            continue
        res.check(wd == all_triloops(d), (d, wd))
    return res


def check_degenerate(dimaps, rng: random.Random, draws: int = 5, name="degenerate regimes") -> SuiteResult:
    res = SuiteResult(name)
    dimaps = list(dimaps)
    for zeros in DEGENERATE_REGIMES:
        for _ in range(draws):
            p = random_regime_params(rng, zeros)
            for d in dimaps:
                try:
                    values = set(eti_all_orderings(d, p).witnesses)
                except MultiSemiloop as err:
                    res.check(False, (d, f"multi-type semiloop {err.edge}"))
                    continue
                res.check(values == {eti_degenerate(d, p)}, (d, sorted(zeros), values))
    return res


def suite_eti(max_edges: int = 4, seed: int = 0, draws: int = 5) -> SuiteResult:
    rng = random.Random(seed)
    planar = [d for d in corpus_up_to(max_edges, connected_only=True) if is_planar(d)]
    admissible = [random_admissible_params(rng) for _ in range(draws)]
    violating = [random_violating_params(rng) for _ in range(draws)]
    res = SuiteResult("eti")
    res.merge(check_closed_form(planar, admissible))
    # the j, k, l identity only shows on four edges, so the witnesses join the pool
    witnesses = [excluded_library()[n] for n in ("g13", "g23a", "g23c", "g24")]
    res.merge(check_violations_detected(planar + witnesses, violating))
    res.merge(check_triloop_well_definedness([d for d in corpus_up_to(max_edges) if is_planar(d)]))
    res.merge(check_degenerate([d for d in corpus_up_to(min(max_edges, 4)) if is_planar(d)], rng, 2))
    return res


# ---------------------------------------------------------------------------
# triality

def check_triality(dimaps, name="triality") -> SuiteResult:
    res = SuiteResult(name)
    for d in dimaps:
        t = trial(d)
        st, ts = d.stats(), t.stats()
        res.check((ts.is_, ts.af, ts.cf, ts.k) == (st.cf, st.is_, st.af, st.k), (d, "statistics"))
        res.check(is_isomorphic(trial(trial(t)), d), (d, "order three"))
        for e in d.edges:
            try:
                res.check(classify_edge(t, e) == trial_class(classify_edge(d, e)), (d, e, "class"))
            except MultiSemiloop:
                flags_d, flags_t = edge_flags(d, e), edge_flags(t, e)
                res.check((flags_t.omega_loop, flags_t.omega2_loop, flags_t.one_loop)
                          == (flags_d.one_loop, flags_d.omega_loop, flags_d.omega2_loop), (d, e, "flags"))
            for power, mu in enumerate(KINDS):
                dm = trial_power(d, power)
                for nu in KINDS:
                    lhs = reduce(dm, e, nu)
                    rhs = trial_power(reduce(d, e, compose_kinds(mu, nu)), power)
                    res.check(is_isomorphic(lhs, rhs), (d, e, mu, nu))
    return res


def check_trial_eti(dimaps, name="trial eti") -> SuiteResult:
    """F(D, O; P) = F(D^w, O; P^w) = F(D^w2, O; P^w2) for every ordering, symbolically."""
    res = SuiteResult(name)
    base = ParamSeq16.symbolic()
    p1, p2 = trial_params(base, 1), trial_params(base, 2)
    for d in dimaps:
        if not is_planar(d):
            continue
        t1, t2 = trial(d), trial_power(d, 2)
        for order in itertools.permutations(d.edges):
            v = eti_derived(d, order, base)
            res.check(v == eti_derived(t1, order, p1) and v == eti_derived(t2, order, p2), (d, order))
    return res


def suite_triality(max_edges: int = 4, seed: int = 0) -> SuiteResult:
    dimaps = corpus_up_to(max_edges)
    res = SuiteResult("triality")
    res.merge(check_triality(dimaps))
    res.merge(check_trial_eti(dimaps))
    return res


# ---------------------------------------------------------------------------
# c-Tutte

def check_plane_tutte(graphs, name="plane tutte") -> SuiteResult:
    res = SuiteResult(name)
    for g in graphs:
        t = tutte_plane(g)
        res.check(t == tutte_plane(g, "last") == ctutte_derived(alt_c(g)) == atutte_derived(alt_a(g)), g)
    return res


def check_ctutte_recognizer(dimaps, name="c-tutte well-definedness") -> SuiteResult:
    res = SuiteResult(name)
    for d in dimaps:
        res.check(ctutte_all_orderings(d).well_defined == is_c_alternating(d), (d, "c"))
        res.check(atutte_all_orderings(d).well_defined == is_a_alternating(d), (d, "a"))
    return res


def check_zeta(dimaps, precedence: bool = True, name="zeta values") -> SuiteResult:
    res = SuiteResult(name)
    for d in dimaps:
        for sign in (1, -1):
            x, y = zeta_point(sign)
            vc = set(ctutte_all_orderings(d, x, y, precedence=precedence).witnesses)
            va = set(atutte_all_orderings(d, x, y, precedence=precedence).witnesses)
            res.check(vc == {ctutte_zeta(d, sign)}, (d, sign, "c"))
            res.check(va == {atutte_zeta(d, sign)}, (d, sign, "a"))
    return res


def suite_ctutte(max_edges: int = 4, seed: int = 0) -> SuiteResult:
    res = SuiteResult("ctutte")
    res.merge(check_plane_tutte(plane_graphs(min(max_edges, 4)) + list(gallery().values())))
    res.merge(check_ctutte_recognizer([d for d in corpus_up_to(max_edges) if is_planar(d)]))
    res.merge(check_zeta(corpus_up_to(max_edges)))
    return res


# ---------------------------------------------------------------------------
# minors

def check_excluded_minors(dimaps, name="excluded minors") -> SuiteResult:
    from .core import canonical_form

    lib = excluded_library()
    codes = {n: canonical_form(lib[n]).code for n in ("g13", "g23a", "g23c")}
    res = SuiteResult(name)
    for d in dimaps:
        flags = [edge_flags(d, e) for e in d.edges]
        if all(f.triloop for f in flags):
            continue
        found = set(minors_up_to(d, 3))
        res.check(any(c in found for c in codes.values()), (d, "G13 or G23"))
        if any(f.one_semiloop and not f.triloop for f in flags):
            res.check(codes["g13"] in found, (d, "G13"))
    return res


def random_subdimap_pairs(dimaps, rng: random.Random, count: int):
    dimaps = list(dimaps)
    pairs = []
    while len(pairs) < count:
        g = rng.choice(dimaps)
        keep = [e for e in g.edges if rng.random() < 0.6]
        if not keep:
            continue
        h = standalone(g, keep)
        if h is not None:
            pairs.append((g, h))
    return pairs


def check_subdimap_reduction(pairs, name="subdimap reduction") -> SuiteResult:
    res = SuiteResult(name)
    for g, h in pairs:
        try:
            y, z, oy, oz = reduce_to_subdimap(g, h)
            res.check(True)
        except Exception as err:  # surfaced in the report
            res.check(False, (g, h, err))
    return res


def suite_minors(max_edges: int = 4, seed: int = 0) -> SuiteResult:
    rng = random.Random(seed)
    planar = [d for d in corpus_up_to(max_edges) if is_planar(d)]
    res = SuiteResult("minors")
    res.merge(check_excluded_minors(planar))
    res.merge(check_subdimap_reduction(random_subdimap_pairs(corpus_up_to(max_edges), rng, 50)))
    return res


SUITES = {"eti": suite_eti, "triality": suite_triality, "ctutte": suite_ctutte, "minors": suite_minors}


def run_suites(names, max_edges: int, seed: int = 0) -> list[SuiteResult]:
    if "all" in names:
        names = list(SUITES)
    return [SUITES[n](max_edges=max_edges, seed=seed) for n in names]


def check_eti_conditions_report(p: ParamSeq16) -> list[str]:
    return [n for n, ok in check_eti_conditions(p).items() if not ok]
