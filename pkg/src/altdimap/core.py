"""Embedded digraphs, alternating dimaps and their permutation triples.

Conventions (fixed here, locked by tests):

* Rotations list the half-edges around a vertex anticlockwise.
* The right successor r(e) is the outgoing edge whose slot immediately follows
  e's incoming slot anticlockwise at head(e); following right successors walks
  a clockwise face. The left successor l(e) is the outgoing edge whose slot
  immediately precedes e's incoming slot; it walks an anticlockwise face.
* sigma1(e) is the next incoming edge after e, anticlockwise, at head(e).
* sigma_omega = l and sigma_omega2 = r, and the three satisfy
  sigma_omega2 = sigma_omega o sigma1, i.e. the product
  sigma_omega2^-1 o sigma_omega o sigma1 is the identity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple, Sequence

from .errors import (
    AlternationViolation,
    DanglingHalfEdge,
    DuplicateSlot,
    IsolatedVertex,
    NonIntegerGenus,
    OddDegree,
    ProductNotIdentity,
)


class HalfEdge(NamedTuple):
    edge: str
    out: bool  # True: the tail slot; False: the head slot

    def __str__(self):
        return ("+" if self.out else "-") + self.edge

    @classmethod
    def parse(cls, text: str) -> "HalfEdge":
        if len(text) < 2 or text[0] not in "+-":
            raise ValueError(f"half-edge must look like '+e' or '-e', got {text!r}")
        return cls(text[1:], text[0] == "+")


def _slot_key(h: HalfEdge):
    return (h.edge, not h.out)


def normalize_rotation(rot: Sequence[HalfEdge]) -> tuple[HalfEdge, ...]:
    """Rotate a cyclic sequence to start at its least half-edge."""
    if not rot:
        return ()
    start = min(range(len(rot)), key=lambda n: _slot_key(rot[n]))
    return tuple(rot[start:]) + tuple(rot[:start])


def cycles(perm: Mapping) -> list[tuple]:
    """Cycles of a permutation, each starting at its least element, sorted."""
    seen = set()
    out = []
    for start in sorted(perm):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        nxt = perm[start]
        while nxt != start:
            cyc.append(nxt)
            seen.add(nxt)
            nxt = perm[nxt]
        out.append(tuple(cyc))
    return out


def inverse(perm: Mapping) -> dict:
    return {v: k for k, v in perm.items()}


def compose(outer: Mapping, inner: Mapping) -> dict:
    """outer o inner: apply inner first."""
    return {k: outer[v] for k, v in inner.items()}


@dataclass(frozen=True)
class EmbeddedDigraph:
    """A directed graph with an anticlockwise rotation of half-edges at each vertex.

    Nothing is checked on construction; see :func:`validate`.
    """

    rotation: Mapping[str, tuple[HalfEdge, ...]]
    ends: Mapping[str, tuple[str, str]]  # edge -> (tail, head)

    @property
    def vertices(self) -> list[str]:
        return sorted(self.rotation)

    @property
    def edges(self) -> list[str]:
        return sorted(self.ends)


@dataclass(frozen=True)
class Face:
    kind: str  # "clockwise" or "anticlockwise"
    boundary: tuple[str, ...]

    def __len__(self):
        return len(self.boundary)


@dataclass(frozen=True)
class PermutationTriple:
    """(sigma1, sigma_omega, sigma_omega2) on a finite edge set."""

    sigma1: Mapping[str, str]
    sigmaw: Mapping[str, str]
    sigmaw2: Mapping[str, str]

    @property
    def edges(self) -> list[str]:
        return sorted(self.sigma1)

    @classmethod
    def from_pair(cls, sigma1: Mapping[str, str], sigmaw: Mapping[str, str]) -> "PermutationTriple":
        return cls(dict(sigma1), dict(sigmaw), compose(sigmaw, sigma1))

    def check(self) -> None:
        universe = set(self.sigma1)
        for name, p in (("sigma1", self.sigma1), ("sigmaw", self.sigmaw), ("sigmaw2", self.sigmaw2)):
            if set(p) != universe or set(p.values()) != universe:
                raise ProductNotIdentity(f"{name} is not a permutation of the edge set")
        if compose(self.sigmaw, self.sigma1) != dict(self.sigmaw2):
            raise ProductNotIdentity("sigmaw2 differs from sigmaw o sigma1")


@dataclass(frozen=True)
class DimapStats:
    k: int
    is_: int
    af: int
    cf: int
    edge_count: int
    genus: tuple[int, ...]  # one entry per component, components sorted by least edge

    @property
    def total_genus(self) -> int:
        return sum(self.genus)

    def as_dict(self) -> dict:
        return {"k": self.k, "is": self.is_, "af": self.af, "cf": self.cf,
                "edges": self.edge_count, "genus": list(self.genus)}


class AlternatingDimap:
    """A validated alternating dimap. Immutable.

    Build one with :func:`validate`, :func:`from_triple` or :meth:`from_rotation`.
    """

    __slots__ = ("rotation", "tail", "head", "_sigma1", "_left", "_right", "_stats")

    def __init__(self, rotation: Mapping[str, Sequence[HalfEdge]], ends: Mapping[str, tuple[str, str]]):
        self.rotation = {v: normalize_rotation(r) for v, r in rotation.items()}
        self.tail = {e: t for e, (t, h) in ends.items()}
        self.head = {e: h for e, (t, h) in ends.items()}
        s, l, r = {}, {}, {}
        for rot in self.rotation.values():
            n = len(rot)
            for pos, slot in enumerate(rot):
                if slot.out:
                    continue
                e = slot.edge
                r[e] = rot[(pos + 1) % n].edge
                l[e] = rot[(pos - 1) % n].edge
                s[e] = rot[(pos + 2) % n].edge
        self._sigma1, self._left, self._right = s, l, r
        self._stats = None

    @classmethod
    def from_rotation(cls, rotation: Mapping[str, Iterable[str]], ends: Mapping[str, tuple[str, str]]) -> "AlternatingDimap":
        """Validate a rotation given as text half-edges like ``["+e", "-e"]``."""
        raw = EmbeddedDigraph({v: tuple(HalfEdge.parse(h) for h in rot) for v, rot in rotation.items()},
                              {e: tuple(te) for e, te in ends.items()})
        return validate(raw)

    @classmethod
    def empty(cls) -> "AlternatingDimap":
        return cls({}, {})

    # basic structure
    @property
    def vertices(self) -> list[str]:
        return sorted(self.rotation)

    @property
    def edges(self) -> list[str]:
        return sorted(self.head)

    def __len__(self):
        return len(self.head)

    def ends(self) -> dict[str, tuple[str, str]]:
        return {e: (self.tail[e], self.head[e]) for e in self.head}

    def as_embedded(self) -> EmbeddedDigraph:
        return EmbeddedDigraph(dict(self.rotation), self.ends())

    def degree(self, v: str) -> int:
        return len(self.rotation[v])

    def sigma1(self, e: str) -> str:
        return self._sigma1[e]

    def left(self, e: str) -> str:
        """Left successor: next edge around e's anticlockwise face."""
        return self._left[e]

    def right(self, e: str) -> str:
        """Right successor: next edge around e's clockwise face."""
        return self._right[e]

    def to_triple(self) -> PermutationTriple:
        return PermutationTriple(dict(self._sigma1), dict(self._left), dict(self._right))

    def faces(self) -> tuple[list[Face], list[Face]]:
        clockwise = [Face("clockwise", c) for c in cycles(self._right)]
        anticlockwise = [Face("anticlockwise", c) for c in cycles(self._left)]
        return clockwise, anticlockwise

    def components(self) -> list[list[str]]:
        """Edge sets of the connected components, sorted by least edge."""
        parent = {e: e for e in self.head}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in self.head:
            for f in (self._sigma1[e], self._left[e]):
                a, b = find(e), find(f)
                if a != b:
                    parent[a] = b
        groups: dict[str, list[str]] = {}
        for e in sorted(self.head):
            groups.setdefault(find(e), []).append(e)
        return sorted(groups.values())

    def stats(self) -> DimapStats:
        if self._stats is None:
            self._stats = _stats_of(self._sigma1, self._left, self._right, self.components())
        return self._stats

    # comparisons
    def __eq__(self, other):
        if not isinstance(other, AlternatingDimap):
            return NotImplemented
        return self.rotation == other.rotation and self.ends() == other.ends()

    def __hash__(self):
        return hash((frozenset(self.rotation.items()), frozenset(self.ends().items())))

    def __repr__(self):
        rot = "; ".join(f"{v}: {' '.join(map(str, self.rotation[v]))}" for v in self.vertices)
        return f"AlternatingDimap({rot})"

    # derived constructions
    def restrict(self, keep: Iterable[str]) -> EmbeddedDigraph:
        """Keep only the given edges; rotations are induced, bare vertices dropped."""
        keep = set(keep)
        rotation = {}
        for v, rot in self.rotation.items():
            sub = tuple(h for h in rot if h.edge in keep)
            if sub:
                rotation[v] = sub
        return EmbeddedDigraph(rotation, {e: (self.tail[e], self.head[e]) for e in keep})

    def relabel(self, edge_map: Mapping[str, str] | None = None,
                vertex_map: Mapping[str, str] | None = None) -> "AlternatingDimap":
        em = edge_map or {e: e for e in self.head}
        vm = vertex_map or {v: v for v in self.rotation}
        rotation = {vm[v]: tuple(HalfEdge(em[h.edge], h.out) for h in rot) for v, rot in self.rotation.items()}
        ends = {em[e]: (vm[self.tail[e]], vm[self.head[e]]) for e in self.head}
        return AlternatingDimap(rotation, ends)


def _stats_of(s, l, r, comps) -> DimapStats:
    is_ = len(cycles(s))
    af = len(cycles(l))
    cf = len(cycles(r))
    genus = []
    for comp in comps:
        cs = set(comp)
        n_is = len(cycles({e: s[e] for e in cs}))
        n_af = len(cycles({e: l[e] for e in cs}))
        n_cf = len(cycles({e: r[e] for e in cs}))
        twice = 2 - (n_is + n_af + n_cf - len(cs))
        if twice % 2 or twice < 0:
            raise NonIntegerGenus(f"component {sorted(cs)} has Euler defect {twice}")
        genus.append(twice // 2)
    return DimapStats(len(comps), is_, af, cf, len(s), tuple(genus))


def validate(raw: EmbeddedDigraph) -> AlternatingDimap:
    """Check every alternating-dimap invariant and wrap the input."""
    seen: dict[HalfEdge, str] = {}
    for v in sorted(raw.rotation):
        rot = raw.rotation[v]
        if not rot:
            raise IsolatedVertex(v)
        for h in rot:
            if h.edge not in raw.ends:
                raise DanglingHalfEdge(h.edge, f"half-edge {h} at {v} names no edge")
            if h in seen:
                raise DuplicateSlot(h.edge, f"half-edge {h} occurs twice")
            seen[h] = v
    for e in sorted(raw.ends):
        tail, head = raw.ends[e]
        if seen.get(HalfEdge(e, True)) != tail or seen.get(HalfEdge(e, False)) != head:
            raise DanglingHalfEdge(e, f"edge {e} is missing a slot at its tail or head")
    for v in sorted(raw.rotation):
        rot = raw.rotation[v]
        if len(rot) % 2:
            raise OddDegree(v)
        for n, h in enumerate(rot):
            if h.out == rot[(n + 1) % len(rot)].out:
                raise AlternationViolation(v)
    return AlternatingDimap(raw.rotation, raw.ends)


def from_triple(triple: PermutationTriple, vertex_names: Mapping[tuple, str] | None = None) -> AlternatingDimap:
    """Build the rotation system of a permutation triple.

    Vertices are the sigma1 cycles. They are named ``v1, v2, ...`` in order of
    their least edge unless ``vertex_names`` maps a cycle (as returned by
    :func:`cycles`) to a name.
    """
    triple.check()
    s, r = triple.sigma1, triple.sigmaw2
    rotation = {}
    head = {}
    for n, cyc in enumerate(cycles(s), start=1):
        name = vertex_names[cyc] if vertex_names else f"v{n}"
        rot = []
        for e in cyc:
            rot.append(HalfEdge(e, False))
            rot.append(HalfEdge(r[e], True))
            head[e] = name
        rotation[name] = tuple(rot)
    r_inv = inverse(r)
    ends = {e: (head[r_inv[e]], head[e]) for e in s}
    return AlternatingDimap(rotation, ends)


def disjoint_union(d1: AlternatingDimap, d2: AlternatingDimap) -> AlternatingDimap:
    if set(d1.head) & set(d2.head) or set(d1.rotation) & set(d2.rotation):
        raise ValueError("disjoint union needs distinct edge and vertex names")
    rotation = dict(d1.rotation)
    rotation.update(d2.rotation)
    ends = d1.ends()
    ends.update(d2.ends())
    return AlternatingDimap(rotation, ends)


# ---------------------------------------------------------------------------
# index form and canonical labelling

def index_pair(d: AlternatingDimap, order: Sequence[str] | None = None) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(sigma1, sigma_omega) as tuples over 0..m-1, edges numbered by ``order``."""
    order = list(order) if order is not None else d.edges
    pos = {e: n for n, e in enumerate(order)}
    s = tuple(pos[d.sigma1(e)] for e in order)
    l = tuple(pos[d.left(e)] for e in order)
    return s, l


def triple_from_index(s: Sequence[int], l: Sequence[int], labels: Sequence[str] | None = None) -> PermutationTriple:
    labels = list(labels) if labels is not None else [f"e{n + 1}" for n in range(len(s))]
    sigma1 = {labels[n]: labels[s[n]] for n in range(len(s))}
    sigmaw = {labels[n]: labels[l[n]] for n in range(len(l))}
    return PermutationTriple.from_pair(sigma1, sigmaw)


def _component_code(s, l, comp) -> tuple[tuple, list[int]]:
    best = None
    best_order = None
    for start in comp:
        label = {start: 0}
        order = [start]
        n = 0
        while n < len(order):
            x = order[n]
            for y in (s[x], l[x]):
                if y not in label:
                    label[y] = len(order)
                    order.append(y)
            n += 1
        code = tuple((label[s[x]], label[l[x]]) for x in order)
        if best is None or code < best:
            best, best_order = code, order
    return best, best_order


def _index_components(s, l) -> list[list[int]]:
    m = len(s)
    comp_of = [-1] * m
    comps = []
    for start in range(m):
        if comp_of[start] >= 0:
            continue
        stack = [start]
        comp_of[start] = len(comps)
        members = []
        while stack:
            x = stack.pop()
            members.append(x)
            for y in (s[x], l[x]):
                if comp_of[y] < 0:
                    comp_of[y] = len(comps)
                    stack.append(y)
        comps.append(sorted(members))
    return comps


def canonical_index(s, l) -> tuple[tuple, tuple[int, ...], tuple[int, ...]]:
    """Canonical code and relabelled pair for an index-form dimap."""
    parts = []
    for comp in _index_components(s, l):
        code, order = _component_code(s, l, comp)
        parts.append((code, order))
    parts.sort()
    new_label = {}
    for code, order in parts:
        base = len(new_label)
        for n, x in enumerate(order):
            new_label[x] = base + n
    m = len(s)
    cs = [0] * m
    cl = [0] * m
    for x in range(m):
        cs[new_label[x]] = new_label[s[x]]
        cl[new_label[x]] = new_label[l[x]]
    return tuple(code for code, _ in parts), tuple(cs), tuple(cl)


@dataclass(frozen=True)
class CanonicalForm:
    code: tuple  # sorted component codes
    triple: PermutationTriple = field(compare=False)

    @property
    def component_signature(self) -> tuple:
        return self.code


def canonical_form(d: AlternatingDimap) -> CanonicalForm:
    s, l = index_pair(d)
    code, cs, cl = canonical_index(s, l)
    return CanonicalForm(code, triple_from_index(cs, cl))


def canonical_dimap(d: AlternatingDimap) -> AlternatingDimap:
    return from_triple(canonical_form(d).triple)


def is_isomorphic(d1: AlternatingDimap, d2: AlternatingDimap) -> bool:
    if len(d1) != len(d2) or len(d1.rotation) != len(d2.rotation):
        return False
    return canonical_form(d1).code == canonical_form(d2).code


def is_subdimap(h: AlternatingDimap, d: AlternatingDimap) -> bool:
    """Identifier-level containment with rotations induced by edge deletion."""
    if not set(h.rotation) <= set(d.rotation) or not set(h.head) <= set(d.head):
        return False
    for e in h.head:
        if (h.tail[e], h.head[e]) != (d.tail[e], d.head[e]):
            return False
    induced = d.restrict(h.head)
    if set(induced.rotation) != set(h.rotation):
        return False
    return all(normalize_rotation(induced.rotation[v]) == h.rotation[v] for v in h.rotation)
