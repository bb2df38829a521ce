"""Extended Tutte invariants, c-/a-Tutte invariants and plane-graph Tutte polynomials."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .algebra import BIVARS, PARAMS, Cyclotomic6, ParamSeq16, Poly, as_scalar, bipoly_var, check_eti_conditions
from .core import AlternatingDimap, HalfEdge, index_pair
from .errors import (
    ConditionsViolated,
    NoMatchingRegime,
    NotWellDefined,
    PreconditionError,
    RegimeConstraintViolated,
    SizeBoundExceeded,
)
from .reductions import EdgeClass, ReductionKind, classify_index, reduce_index

ONE, OMEGA, OMEGA2, STAR = ReductionKind.ONE, ReductionKind.OMEGA, ReductionKind.OMEGA2, ReductionKind.STAR

# class -> list of (factor, reduction); a factor is a parameter name or the integer 1
ETI_RULES = {
    EdgeClass.ULTRALOOP: [("w", STAR)],
    EdgeClass.PROPER_1_LOOP: [("x", ONE)],
    EdgeClass.PROPER_OMEGA_LOOP: [("y", OMEGA)],
    EdgeClass.PROPER_OMEGA2_LOOP: [("z", OMEGA2)],
    EdgeClass.PROPER_1_SEMILOOP: [("a", ONE), ("b", OMEGA), ("c", OMEGA2)],
    EdgeClass.PROPER_OMEGA_SEMILOOP: [("d", ONE), ("e", OMEGA), ("f", OMEGA2)],
    EdgeClass.PROPER_OMEGA2_SEMILOOP: [("g", ONE), ("h", OMEGA), ("i", OMEGA2)],
    EdgeClass.PROPER_EDGE: [("j", ONE), ("k", OMEGA), ("l", OMEGA2)],
}

CTUTTE_RULES = {
    EdgeClass.ULTRALOOP: [(1, STAR)],
    EdgeClass.PROPER_1_LOOP: [("x", OMEGA2)],
    EdgeClass.PROPER_OMEGA_SEMILOOP: [("x", OMEGA2)],
    EdgeClass.PROPER_OMEGA_LOOP: [("y", ONE)],
    EdgeClass.PROPER_1_SEMILOOP: [("y", ONE)],
    EdgeClass.PROPER_OMEGA2_LOOP: [(1, OMEGA)],
    EdgeClass.PROPER_OMEGA2_SEMILOOP: [(1, OMEGA)],
    EdgeClass.PROPER_EDGE: [(1, ONE), (1, OMEGA2)],
}

ATUTTE_RULES = {
    EdgeClass.ULTRALOOP: [(1, STAR)],
    EdgeClass.PROPER_1_LOOP: [("x", OMEGA)],
    EdgeClass.PROPER_OMEGA2_SEMILOOP: [("x", OMEGA)],
    EdgeClass.PROPER_OMEGA2_LOOP: [("y", ONE)],
    EdgeClass.PROPER_1_SEMILOOP: [("y", ONE)],
    EdgeClass.PROPER_OMEGA_LOOP: [(1, OMEGA2)],
    EdgeClass.PROPER_OMEGA_SEMILOOP: [(1, OMEGA2)],
    EdgeClass.PROPER_EDGE: [(1, ONE), (1, OMEGA)],
}

DEFAULT_ORDER_BOUND = 7


class Recursion:
    """Memoized first-edge recursion for one rule table and one set of values.

    States are index pairs ``(s, l)``; edge 0 is always the next to reduce.
    """

    def __init__(self, rules, values: Mapping[str, object], precedence: bool = False):
        self.rules = rules
        self.values = dict(values)
        self.precedence = precedence
        self.one = _ring_one(self.values.values())
        self.memo: dict = {}

    def __call__(self, s, l):
        key = (s, l)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        if not s:
            value = self.one
        else:
            cls = classify_index(s, l, 0, self.precedence)
            value = None
            for factor, kind in self.rules[cls]:
                coef = self.one if factor == 1 else self.values[factor]
                if coef == 0:
                    continue
                s2, l2 = reduce_index(s, l, 0, kind)
                term = coef * self(s2, l2)
                value = term if value is None else value + term
            if value is None:
                value = self.one * 0
        self.memo[key] = value
        return value


def _ring_one(values):
    values = list(values)
    for v in values:
        if isinstance(v, Poly):
            return Poly.constant(v.variables, 1)
    if any(isinstance(v, Cyclotomic6) for v in values):
        return Cyclotomic6(1)
    return Fraction(1)


def _eti_values(params: ParamSeq16 | None) -> dict:
    return (params or ParamSeq16.symbolic()).values()


def _bivalues(x=None, y=None) -> dict:
    return {"x": bipoly_var("x") if x is None else as_scalar(x),
            "y": bipoly_var("y") if y is None else as_scalar(y)}


def _ordered(d: AlternatingDimap, order: Sequence[str] | None) -> tuple:
    order = list(order) if order is not None else d.edges
    if sorted(order) != d.edges:
        raise ValueError("ordering must list every edge exactly once")
    return index_pair(d, order)


def eti_derived(d: AlternatingDimap, order: Sequence[str] | None = None,
                params: ParamSeq16 | None = None, precedence: bool = False):
    """Derived polynomial (or number, for numeric parameters) of D under one ordering."""
    return Recursion(ETI_RULES, _eti_values(params), precedence)(*_ordered(d, order))


def ctutte_derived(d: AlternatingDimap, order: Sequence[str] | None = None, x=None, y=None,
                   precedence: bool = False):
    return Recursion(CTUTTE_RULES, _bivalues(x, y), precedence)(*_ordered(d, order))


def atutte_derived(d: AlternatingDimap, order: Sequence[str] | None = None, x=None, y=None,
                   precedence: bool = False):
    return Recursion(ATUTTE_RULES, _bivalues(x, y), precedence)(*_ordered(d, order))


@dataclass(frozen=True)
class DerivedSet:
    """Distinct derived values over all orderings, each with one witness ordering."""

    witnesses: Mapping  # value -> ordering (tuple of edge names)

    @property
    def values(self) -> list:
        return sorted(self.witnesses, key=_value_sort_key)

    def __len__(self):
        return len(self.witnesses)

    def __contains__(self, value):
        return value in self.witnesses

    @property
    def well_defined(self) -> bool:
        return len(self.witnesses) == 1

    def single(self):
        if not self.well_defined:
            raise NotWellDefined(self.witness_pair())
        return next(iter(self.witnesses))

    def witness_pair(self):
        if self.well_defined:
            return None
        (v1, o1), (v2, o2) = list(self.witnesses.items())[:2]
        return (o1, v1), (o2, v2)


def _value_sort_key(value):
    if isinstance(value, Poly):
        return (0, value.render())
    return (1, str(value))


def _all_orderings(d: AlternatingDimap, rec: Recursion, bound: int) -> DerivedSet:
    if len(d) > bound:
        raise SizeBoundExceeded(f"{len(d)} edges exceeds the ordering bound {bound}")
    found: dict = {}
    for order in itertools.permutations(d.edges):
        value = rec(*index_pair(d, order))
        if value not in found:
            found[value] = order
    return DerivedSet(found)


def eti_all_orderings(d: AlternatingDimap, params: ParamSeq16 | None = None,
                      bound: int = DEFAULT_ORDER_BOUND, precedence: bool = False) -> DerivedSet:
    return _all_orderings(d, Recursion(ETI_RULES, _eti_values(params), precedence), bound)


def ctutte_all_orderings(d: AlternatingDimap, x=None, y=None, bound: int = DEFAULT_ORDER_BOUND,
                         precedence: bool = False) -> DerivedSet:
    return _all_orderings(d, Recursion(CTUTTE_RULES, _bivalues(x, y), precedence), bound)


def atutte_all_orderings(d: AlternatingDimap, x=None, y=None, bound: int = DEFAULT_ORDER_BOUND,
                         precedence: bool = False) -> DerivedSet:
    return _all_orderings(d, Recursion(ATUTTE_RULES, _bivalues(x, y), precedence), bound)


def eti_well_defined(d: AlternatingDimap, params: ParamSeq16 | None = None,
                     bound: int = DEFAULT_ORDER_BOUND, precedence: bool = False):
    """(True, None) or (False, ((ordering, value), (ordering, value)))."""
    derived = eti_all_orderings(d, params, bound, precedence)
    return derived.well_defined, derived.witness_pair()


def _closed(d: AlternatingDimap, entries: Mapping[str, object]):
    st = d.stats()
    w, x, y, z = (entries[n] for n in "wxyz")
    one = _ring_one([w, x, y, z])
    return (one * w ** st.k * x ** (st.is_ - st.k) * y ** (st.af - st.k) * z ** (st.cf - st.k))


def eti_closed_form(d: AlternatingDimap, params: ParamSeq16):
    """w^k x^(is-k) y^(af-k) z^(cf-k) for an admissible numeric sequence."""
    report = check_eti_conditions(params)
    failing = [name for name, ok in report.items() if not ok]
    zeros = [n for n in "wxyz" if params[n] == 0]
    if zeros:
        failing += [f"{n}!=0" for n in zeros]
    if failing:
        raise ConditionsViolated(failing)
    return _closed(d, params.as_dict())


# zero set -> (parameters that must vanish, identity that must hold or None)
DEGENERATE_REGIMES = {
    frozenset("xyz"): ("afh", None),
    frozenset("xy"): ("acdfh", None),
    frozenset("xz"): ("abfgh", None),
    frozenset("yz"): ("aefhi", None),
    frozenset("x"): ("dfghj", "yz"),
    frozenset("y"): ("achil", "xz"),
    frozenset("z"): ("abefk", "xy"),
}

_STAT_OF = {"x": "is_", "y": "af", "z": "cf"}


def regime_name(zeros) -> str:
    return "=".join(sorted(zeros)) + "=0"


def eti_degenerate(d: AlternatingDimap, params: ParamSeq16):
    """Closed value for a parameter sequence with some of x, y, z equal to zero."""
    report = check_eti_conditions(params)
    p = params.as_dict()
    if p["w"] == 0:
        raise NoMatchingRegime("w must be nonzero")
    zeros = frozenset(n for n in "xyz" if p[n] == 0)
    if zeros not in DEGENERATE_REGIMES:
        raise NoMatchingRegime("no degenerate regime: x, y and z are all nonzero")
    must_vanish, identity = DEGENERATE_REGIMES[zeros]
    name = regime_name(zeros)
    for n in must_vanish:
        if p[n] != 0:
            raise RegimeConstraintViolated(name, f"{n}=0")
    if identity and not report[identity]:
        raise RegimeConstraintViolated(name, identity)
    st = d.stats()
    if any(getattr(st, _STAT_OF[n]) != st.k for n in zeros):
        return _ring_one(p.values()) * 0
    value = _ring_one(p.values()) * p["w"] ** st.k
    for n in "xyz":
        if n not in zeros:
            value = value * p[n] ** (getattr(st, _STAT_OF[n]) - st.k)
    return value


def ctutte_as_eti_params(alpha, beta) -> ParamSeq16:
    """ETI parameters that reproduce the c-Tutte recursion at (alpha, beta)."""
    values = {n: 0 for n in PARAMS}
    values.update(x=alpha, f=alpha, y=beta, a=beta, w=1, z=1, h=1, j=1, l=1)
    return ParamSeq16(values)


def ctutte(d: AlternatingDimap, force: bool = False, bound: int = DEFAULT_ORDER_BOUND):
    """The c-Tutte polynomial of a c-alternating dimap.

    Recognition is structural; ``force`` instead checks every ordering and
    raises NotWellDefined when they disagree.
    """
    from .structure import is_c_alternating

    if not force and is_c_alternating(d):
        return ctutte_derived(d)
    return ctutte_all_orderings(d, bound=bound).single()


def atutte(d: AlternatingDimap, force: bool = False, bound: int = DEFAULT_ORDER_BOUND):
    from .structure import is_a_alternating

    if not force and is_a_alternating(d):
        return atutte_derived(d)
    return atutte_all_orderings(d, bound=bound).single()


def ctutte_zeta(d: AlternatingDimap, sign: int = 1) -> Cyclotomic6:
    """T_c at (zeta, conj zeta) for sign +1, or (conj zeta, zeta) for -1."""
    st = d.stats()
    return Cyclotomic6.zeta() ** (sign * (st.is_ - st.af)) if sign > 0 else \
        Cyclotomic6.zeta().conjugate() ** (st.is_ - st.af)


def atutte_zeta(d: AlternatingDimap, sign: int = 1) -> Cyclotomic6:
    st = d.stats()
    base = Cyclotomic6.zeta() if sign > 0 else Cyclotomic6.zeta().conjugate()
    return base ** (st.is_ - st.cf)


def zeta_point(sign: int = 1) -> tuple[Cyclotomic6, Cyclotomic6]:
    z = Cyclotomic6.zeta()
    return (z, z.conjugate()) if sign > 0 else (z.conjugate(), z)


# ---------------------------------------------------------------------------
# plane graphs

@dataclass(frozen=True)
class PlaneGraph:
    """Undirected embedded graph: rotation of (edge, end) slots per vertex.

    End 0 of an edge sits at ``ends[e][0]`` and end 1 at ``ends[e][1]``.
    Vertices may have empty rotations.
    """

    rotation: Mapping[str, tuple[tuple[str, int], ...]]
    ends: Mapping[str, tuple[str, str]]

    @classmethod
    def from_rotation(cls, rotation: Mapping[str, Sequence[str]]) -> "PlaneGraph":
        """Rotations list edge names; each edge must occur exactly twice overall."""
        seen: dict[str, list[str]] = {}
        slots = {}
        for v in rotation:
            seq = []
            for e in rotation[v]:
                end = len(seen.setdefault(e, []))
                if end > 1:
                    raise ValueError(f"edge {e} occurs more than twice")
                seen[e].append(v)
                seq.append((e, end))
            slots[v] = tuple(seq)
        for e, vs in seen.items():
            if len(vs) != 2:
                raise ValueError(f"edge {e} must occur exactly twice")
        return cls(slots, {e: (vs[0], vs[1]) for e, vs in seen.items()})

    @property
    def vertices(self) -> list[str]:
        return sorted(self.rotation)

    @property
    def edges(self) -> list[str]:
        return sorted(self.ends)

    def genus_and_components(self) -> tuple[int, list[int]]:
        from .reductions import embedding_genus

        names = sorted(self.rotation)
        rots = [[(e, end == 0) for e, end in self.rotation[v]] for v in names]
        return embedding_genus(rots, dict(self.ends))


def _alt(g: PlaneGraph, clockwise: bool) -> AlternatingDimap:
    rotation = {}
    ends = {}
    for e, (u, v) in g.ends.items():
        ends[e + "+"] = (u, v)
        ends[e + "-"] = (v, u)
    for vtx, seq in g.rotation.items():
        rot = []
        for e, end in seq:
            fwd, back = e + "+", e + "-"
            out_edge, in_edge = (fwd, back) if end == 0 else (back, fwd)
            pair = [HalfEdge(in_edge, False), HalfEdge(out_edge, True)]
            rot.extend(pair if clockwise else pair[::-1])
        if rot:
            rotation[vtx] = tuple(rot)
    return AlternatingDimap(rotation, ends)


def alt_c(g: PlaneGraph) -> AlternatingDimap:
    """Each edge becomes two opposite directed edges bounding a clockwise digon."""
    return _alt(g, True)


def alt_a(g: PlaneGraph) -> AlternatingDimap:
    """Each edge becomes two opposite directed edges bounding an anticlockwise digon."""
    return _alt(g, False)


def tutte_plane(g: PlaneGraph, pivot: str = "first") -> Poly:
    """Tutte polynomial by deletion and contraction on the abstract multigraph."""
    names = sorted(g.ends)
    if pivot == "last":
        names.reverse()
    edges = tuple((g.ends[e][0], g.ends[e][1]) for e in names)
    return _tutte(edges, {})


def _connected(edges, a, b) -> bool:
    adj: dict = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    stack, seen = [a], {a}
    while stack:
        u = stack.pop()
        if u == b:
            return True
        for v in adj.get(u, ()):
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return False


def _tutte(edges, memo) -> Poly:
    if edges in memo:
        return memo[edges]
    if not edges:
        result = Poly.constant(BIVARS, 1)
    else:
        (u, v), rest = edges[0], edges[1:]
        if u == v:
            result = bipoly_var("y") * _tutte(rest, memo)
        else:
            merged = tuple((u if a == v else a, u if b == v else b) for a, b in rest)
            if not _connected(rest, u, v):
                result = bipoly_var("x") * _tutte(merged, memo)
            else:
                result = _tutte(rest, memo) + _tutte(merged, memo)
    memo[edges] = result
    return result


def plane_graphs(max_edges: int) -> list[PlaneGraph]:
    """All connected plane graphs with 1..max_edges edges, one per isomorphism class.

    Embeddings are enumerated as dart permutations; genus-0 connected ones are
    kept and deduplicated through the canonical form of their alt_c image.
    """
    from .core import canonical_form

    found = {}
    for n in range(1, max_edges + 1):
        for sigma in itertools.permutations(range(2 * n)):
            g = _graph_from_darts(sigma, n)
            if g is None:
                continue
            key = canonical_form(alt_c(g)).code
            if key not in found:
                found[key] = g
    return list(found.values())


def _graph_from_darts(sigma, n):
    seen = [False] * (2 * n)
    rotation = {}
    vertex_of = {}
    for start in range(2 * n):
        if seen[start] or start != min(_cycle(sigma, start)):
            continue
        cyc = _cycle(sigma, start)
        name = f"v{len(rotation) + 1}"
        for dart in cyc:
            seen[dart] = True
            vertex_of[dart] = name
        rotation[name] = tuple((f"g{d // 2 + 1}", d % 2) for d in cyc)
    ends = {f"g{i + 1}": (vertex_of[2 * i], vertex_of[2 * i + 1]) for i in range(n)}
    g = PlaneGraph(rotation, ends)
    k, genus = g.genus_and_components()
    if k != 1 or genus[0] != 0:
        return None
    return g


def _cycle(sigma, start):
    cyc = [start]
    x = sigma[start]
    while x != start:
        cyc.append(x)
        x = sigma[x]
    return cyc


def gallery() -> dict[str, PlaneGraph]:
    """Named plane graphs used as fixed test cases."""
    def path(n):
        rot = {"p0": ["a1"]}
        for i in range(1, n):
            rot[f"p{i}"] = [f"a{i}", f"a{i + 1}"]
        rot[f"p{n}"] = [f"a{n}"]
        return PlaneGraph.from_rotation(rot)

    def cycle(n):
        rot = {f"c{i}": [f"a{i}", f"a{(i % n) + 1}"] for i in range(1, n + 1)}
        return PlaneGraph.from_rotation(rot)

    graphs = {f"P{n}": path(n) for n in range(1, 5)}
    graphs.update({f"C{n}": cycle(n) for n in range(2, 6)})
    graphs["theta"] = PlaneGraph.from_rotation({"u": ["a", "b", "c"], "v": ["c", "b", "a"]})
    graphs["bouquet3"] = PlaneGraph.from_rotation({"v": ["a", "a", "b", "b", "c", "c"]})
    graphs["K4"] = PlaneGraph.from_rotation({
        "1": ["a", "b", "c"],
        "2": ["a", "e", "d"],
        "3": ["b", "d", "f"],
        "4": ["c", "f", "e"],
    })
    return graphs

