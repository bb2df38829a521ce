"""Minors: breadth-first reduction closure, containment, the excluded-minor
gallery and reduction of a dimap onto one of its subdimaps."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .core import AlternatingDimap, canonical_index, index_pair, is_isomorphic, is_subdimap
from .errors import NotFound, SizeBoundExceeded
from .invariants import PlaneGraph, alt_c
from .reductions import ReductionKind, reduce, reduce_index, subdivide
from .triality import trial

DEFAULT_MINOR_BOUND = 8
KINDS = (ReductionKind.ONE, ReductionKind.OMEGA, ReductionKind.OMEGA2)


@dataclass(frozen=True)
class ReductionTrace:
    steps: tuple  # ((edge, ReductionKind), ...)

    def replay(self, d: AlternatingDimap) -> AlternatingDimap:
        for e, kind in self.steps:
            d = reduce(d, e, kind)
        return d

    def as_json(self) -> list:
        return [[e, kind.value] for e, kind in self.steps]

    def __len__(self):
        return len(self.steps)


def _successors(s, l, labels):
    """Distinct (edge, kind, result) reductions of an index-form dimap."""
    for i, e in enumerate(labels):
        seen = set()
        for kind in KINDS:
            s2, l2 = reduce_index(s, l, i, kind)
            if (s2, l2) in seen:
                continue
            seen.add((s2, l2))
            yield e, kind, s2, l2, labels[:i] + labels[i + 1:]


def minors_up_to(d: AlternatingDimap, target_size: int = 0, bound: int = DEFAULT_MINOR_BOUND) -> dict:
    """Every minor with at least ``target_size`` edges, keyed by canonical code.

    Values are ``(size, ReductionTrace)``; D itself is included with the empty trace.
    """
    if len(d) > bound:
        raise SizeBoundExceeded(f"{len(d)} edges exceeds the minor bound {bound}")
    labels = d.edges
    s, l = index_pair(d, labels)
    found = {canonical_index(s, l)[0]: (len(d), ReductionTrace(()))}
    frontier = [(s, l, labels, ())]
    while frontier:
        nxt = []
        for s, l, labels, steps in frontier:
            if len(labels) <= target_size:
                continue
            for e, kind, s2, l2, labels2 in _successors(s, l, labels):
                code = canonical_index(s2, l2)[0]
                if code in found:
                    continue
                trace = steps + ((e, kind),)
                found[code] = (len(labels2), ReductionTrace(trace))
                nxt.append((s2, l2, labels2, trace))
        frontier = nxt
    return found


def has_minor(d: AlternatingDimap, h: AlternatingDimap, bound: int = DEFAULT_MINOR_BOUND):
    """(True, trace) when some sequence of reductions turns D into a copy of H."""
    if len(h) > len(d):
        return False, None
    code = canonical_index(*index_pair(h))[0]
    hit = minors_up_to(d, len(h), bound).get(code)
    return (True, hit[1]) if hit else (False, None)


# ---------------------------------------------------------------------------
# named instances

def g13() -> AlternatingDimap:
    """One vertex, three loops: an omega-loop, an omega2-loop and a 1-semiloop between them."""
    return AlternatingDimap.from_rotation({"v": ["+e", "-e", "+f", "-g", "+g", "-f"]},
                                          {"e": ("v", "v"), "f": ("v", "v"), "g": ("v", "v")})


def g23c() -> AlternatingDimap:
    """A digon with an omega-loop in its clockwise corner: one clockwise face of size three."""
    return AlternatingDimap.from_rotation({"v": ["+e", "-e", "+p", "-q"], "u": ["-p", "+q"]},
                                          {"e": ("v", "v"), "p": ("v", "u"), "q": ("u", "v")})


def g23a() -> AlternatingDimap:
    d = trial(g13())
    return d.relabel(vertex_map={v: n for v, n in zip(d.vertices, ("v", "u"))})


def g24() -> AlternatingDimap:
    """Two loops p, q at u and a digon n, o to v."""
    return AlternatingDimap.from_rotation(
        {"u": ["-p", "+o", "-q", "+q", "-n", "+p"], "v": ["-o", "+n"]},
        {"n": ("v", "u"), "o": ("u", "v"), "p": ("u", "u"), "q": ("u", "u")})


def two_cycle_graph() -> PlaneGraph:
    return PlaneGraph.from_rotation({"u": ["a", "b"], "v": ["b", "a"]})


def g351() -> AlternatingDimap:
    """alt_c of the 2-cycle plane multigraph with one edge subdivided."""
    return subdivide(alt_c(two_cycle_graph()), "a+")


def excluded_library() -> dict[str, AlternatingDimap]:
    return {"g13": g13(), "g23a": g23a(), "g23c": g23c(), "g351": g351(), "g24": g24()}


# ---------------------------------------------------------------------------
# reduction onto a subdimap

def reduce_to_subdimap(g: AlternatingDimap, h: AlternatingDimap, bound: int = DEFAULT_MINOR_BOUND):
    """Sets Y, Z with G[w]Y[w2]Z isomorphic to H.

    Tries every split of E(G) - E(H) into Y and Z and every order within each.
    Returns ``(Y, Z, order_y, order_z)``.
    """
    if not is_subdimap(h, g):
        raise ValueError("H is not a subdimap of G")
    if len(g) > bound:
        raise SizeBoundExceeded(f"{len(g)} edges exceeds the bound {bound}")
    rest = sorted(set(g.edges) - set(h.edges))
    for size in range(len(rest) + 1):
        for y in itertools.combinations(rest, size):
            z = [e for e in rest if e not in y]
            for oy in itertools.permutations(y):
                for oz in itertools.permutations(z):
                    if is_isomorphic(_apply(g, oy, oz), h):
                        return set(y), set(z), list(oy), list(oz)
    raise NotFound("no omega/omega2 reduction sequence reaches the subdimap")


def _apply(g: AlternatingDimap, oy: Sequence[str], oz: Sequence[str]) -> AlternatingDimap:
    for e in oy:
        g = reduce(g, e, ReductionKind.OMEGA)
    for e in oz:
        g = reduce(g, e, ReductionKind.OMEGA2)
    return g
