"""Edge classification and the three reduction operations.

The heavy lifting happens on an index form: a dimap with m edges is a pair
``(s, l)`` of tuples over ``0..m-1`` holding sigma1 and the left successor.
Reductions remove one index and shift later indices down by one, so the
position of every surviving edge in an ordering is preserved. When an
omega-type reduction replaces two edges by a new one, the new edge takes over
the identity (and ordering position) of the successor it replaces.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .core import (
    AlternatingDimap,
    EmbeddedDigraph,
    HalfEdge,
    from_triple,
    index_pair,
    triple_from_index,
)
from .errors import FaceOfSizeOne, MultiSemiloop, NotSuccessorPair, PreconditionError


class EdgeClass(Enum):
    ULTRALOOP = "ultraloop"
    PROPER_1_LOOP = "proper 1-loop"
    PROPER_OMEGA_LOOP = "proper omega-loop"
    PROPER_OMEGA2_LOOP = "proper omega2-loop"
    PROPER_1_SEMILOOP = "proper 1-semiloop"
    PROPER_OMEGA_SEMILOOP = "proper omega-semiloop"
    PROPER_OMEGA2_SEMILOOP = "proper omega2-semiloop"
    PROPER_EDGE = "proper edge"


class ReductionKind(Enum):
    ONE = "1"
    OMEGA = "w"
    OMEGA2 = "w2"
    STAR = "*"

    @classmethod
    def parse(cls, text: str) -> "ReductionKind":
        aliases = {"1": cls.ONE, "one": cls.ONE, "w": cls.OMEGA, "omega": cls.OMEGA,
                   "w2": cls.OMEGA2, "omega2": cls.OMEGA2, "*": cls.STAR, "star": cls.STAR}
        try:
            return aliases[text.lower()]
        except KeyError:
            raise ValueError(f"unknown reduction {text!r}") from None


@dataclass(frozen=True)
class EdgeFlags:
    one_loop: bool
    omega_loop: bool
    omega2_loop: bool
    one_semiloop: bool
    omega_semiloop: bool
    omega2_semiloop: bool

    @property
    def triloop(self) -> bool:
        return self.one_loop or self.omega_loop or self.omega2_loop


# ---------------------------------------------------------------------------
# index kernel

def right_of(s, l) -> tuple[int, ...]:
    return tuple(l[s[i]] for i in range(len(s)))


def _inverse(p) -> list[int]:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return inv


def _drop(p: Sequence[int], e: int) -> tuple[int, ...]:
    """Remove index e from a permutation that does not touch e elsewhere."""
    return tuple(x - (x > e) for i, x in enumerate(p) if i != e)


def _splice(p: Sequence[int], e: int) -> list[int]:
    q = list(p)
    if q[e] != e:
        q[q.index(e)] = q[e]
        q[e] = e
    return q


def heads(s) -> list[int]:
    """Vertex number (index of its sigma1 cycle) for each edge's head."""
    m = len(s)
    head = [-1] * m
    n = 0
    for start in range(m):
        if head[start] >= 0:
            continue
        x = start
        while head[x] < 0:
            head[x] = n
            x = s[x]
        n += 1
    return head


def index_flags(s, l, e: int) -> EdgeFlags:
    r = right_of(s, l)
    head = heads(s)
    l_inv = _inverse(l)
    semi1 = head[l_inv[e]] == head[e]
    if r[e] == e:
        semi_w = True
    else:
        semi_w = _pair_separates(s, l, e, r[e])
    if l[e] == e:
        semi_w2 = True
    else:
        semi_w2 = _pair_separates(s, l, e, l[e])
    return EdgeFlags(s[e] == e, l[e] == e, r[e] == e, semi1, semi_w, semi_w2)


def classify_index(s, l, e: int, precedence: bool = False) -> EdgeClass:
    r_e = l[s[e]]
    loops = (s[e] == e, l[e] == e, r_e == e)
    if all(loops):
        return EdgeClass.ULTRALOOP
    if loops[0]:
        return EdgeClass.PROPER_1_LOOP
    if loops[1]:
        return EdgeClass.PROPER_OMEGA_LOOP
    if loops[2]:
        return EdgeClass.PROPER_OMEGA2_LOOP
    f = index_flags(s, l, e)
    found = [name for name, flag in (("1", f.one_semiloop), ("omega", f.omega_semiloop),
                                     ("omega2", f.omega2_semiloop)) if flag]
    if len(found) > 1 and not precedence:
        raise MultiSemiloop(e, found)
    if not found:
        return EdgeClass.PROPER_EDGE
    return {"1": EdgeClass.PROPER_1_SEMILOOP, "omega": EdgeClass.PROPER_OMEGA_SEMILOOP,
            "omega2": EdgeClass.PROPER_OMEGA2_SEMILOOP}[found[0]]


def index_rotations(s, l) -> list[list[tuple[int, bool]]]:
    """Anticlockwise rotation of (edge, is_out) slots per vertex."""
    r = right_of(s, l)
    head = heads(s)
    rots: list[list[tuple[int, bool]]] = [[] for _ in range(max(head, default=-1) + 1)]
    done = [False] * len(s)
    for start in range(len(s)):
        if done[start]:
            continue
        x = start
        rot = rots[head[start]]
        while not done[x]:
            done[x] = True
            rot.append((x, False))
            rot.append((r[x], True))
            x = s[x]
    return rots


def embedding_genus(rotation: Sequence[Sequence], ends: dict) -> tuple[int, list[int]]:
    """Components and per-component genus of a rotation system.

    ``rotation`` lists slot sequences per vertex (empty for a bare vertex); a
    slot is ``(edge, is_out)``. Faces are traced on darts, ignoring direction.
    """
    where = {}
    for v, rot in enumerate(rotation):
        for pos, slot in enumerate(rot):
            where[slot] = (v, pos)
    parent = list(range(len(rotation)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in ends:
        a, b = find(where[(e, True)][0]), find(where[(e, False)][0])
        parent[a] = b
    faces_of: dict[int, int] = {}
    seen = set()
    for slot in where:
        if slot in seen:
            continue
        x = slot
        while x not in seen:
            seen.add(x)
            partner = (x[0], not x[1])
            v, pos = where[partner]
            rot = rotation[v]
            x = tuple(rot[(pos + 1) % len(rot)])
        root = find(where[slot][0])
        faces_of[root] = faces_of.get(root, 0) + 1
    verts: dict[int, int] = {}
    edges: dict[int, int] = {}
    for v in range(len(rotation)):
        root = find(v)
        verts[root] = verts.get(root, 0) + 1
    for e in ends:
        root = find(where[(e, True)][0])
        edges[root] = edges.get(root, 0) + 1
    genus = []
    for root in sorted(verts):
        faces = faces_of.get(root, 1)  # a bare vertex bounds one face
        twice = 2 - (verts[root] - edges.get(root, 0) + faces)
        genus.append(twice // 2)
    return len(verts), genus


def _pair_separates(s, l, e: int, f: int) -> bool:
    rots = index_rotations(s, l)
    ends = {x: None for x in range(len(s))}
    k0, g0 = embedding_genus(rots, ends)
    cut = [[slot for slot in rot if slot[0] not in (e, f)] for rot in rots]
    del ends[e]
    ends.pop(f, None)
    k1, g1 = embedding_genus(cut, ends)
    return k1 > k0 or sum(g1) < sum(g0)


def reduce_index(s, l, e: int, kind: ReductionKind) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Reduce edge e; the result is indexed with e removed."""
    r_e = l[s[e]]
    if l[e] == e or r_e == e:
        return _drop(_splice(s, e), e), _drop(_splice(l, e), e)
    if kind is ReductionKind.STAR:
        if s[e] != e:
            raise PreconditionError("the star reduction applies only to triloops")
        kind = ReductionKind.ONE
    if kind is ReductionKind.OMEGA:
        return _drop(_splice(s, e), e), _drop(_splice(l, e), e)
    if kind is ReductionKind.OMEGA2:
        s2 = _splice(s, e)
        r2 = _splice(right_of(s, l), e)
        s2_inv = _inverse(s2)
        l2 = [r2[s2_inv[i]] for i in range(len(s))]
        return _drop(s2, e), _drop(l2, e)
    # contraction, or the vertex split of a 1-semiloop
    l2 = _splice(l, e)
    s2 = list(s)
    if s[e] != e:
        x = _inverse(right_of(s, l))[e]
        s_inv_e = s2.index(e)
        s2[x], s2[s_inv_e] = s[e], s[x]
        s2[e] = e
    return _drop(s2, e), _drop(l2, e)


# ---------------------------------------------------------------------------
# public API on AlternatingDimap

def _rebuild(d: AlternatingDimap, order: Sequence[str], s, l, removed: str) -> AlternatingDimap:
    labels = [x for x in order if x != removed]
    triple = triple_from_index(s, l, labels)
    result = from_triple(triple)
    # keep the old vertex names where a vertex's least in-edge kept its head
    names = {}
    used = set()
    for v in result.vertices:
        ins = sorted(h.edge for h in result.rotation[v] if not h.out)
        name = d.head.get(ins[0], v)
        while name in used:
            name += "'"
        used.add(name)
        names[v] = name
    return result.relabel(vertex_map=names)


def edge_flags(d: AlternatingDimap, e: str) -> EdgeFlags:
    order = d.edges
    s, l = index_pair(d, order)
    return index_flags(s, l, order.index(e))


def classify_edge(d: AlternatingDimap, e: str, precedence: bool = False) -> EdgeClass:
    """Eight-way class of e; MultiSemiloop unless ``precedence`` opts in."""
    order = d.edges
    s, l = index_pair(d, order)
    try:
        return classify_index(s, l, order.index(e), precedence)
    except MultiSemiloop as err:
        raise MultiSemiloop(e, err.flags) from None


def reduce(d: AlternatingDimap, e: str, kind: ReductionKind) -> AlternatingDimap:
    order = d.edges
    s, l = index_pair(d, order)
    s2, l2 = reduce_index(s, l, order.index(e), kind)
    return _rebuild(d, order, s2, l2, e)


def reduce_first(d: AlternatingDimap, order: Sequence[str], kind: ReductionKind) -> tuple[AlternatingDimap, list[str]]:
    """Reduce the first edge of ``order``; the rest of the order is kept as is."""
    order = list(order)
    if sorted(order) != d.edges or not order:
        raise ValueError("order must list every edge of a nonempty dimap once")
    s, l = index_pair(d, order)
    s2, l2 = reduce_index(s, l, 0, kind)
    return _rebuild(d, order, s2, l2, order[0]), order[1:]


def delete_pair(d: AlternatingDimap, e: str, f: str) -> EmbeddedDigraph:
    """Drop both slots of e and f; f must be a successor of e. Bare vertices stay."""
    if f not in (d.left(e), d.right(e)):
        raise NotSuccessorPair(f"{f} is not a successor of {e}")
    rotation = {v: tuple(h for h in rot if h.edge not in (e, f)) for v, rot in d.rotation.items()}
    ends = {x: te for x, te in d.ends().items() if x not in (e, f)}
    return EmbeddedDigraph(rotation, ends)


def components_and_genus(g: EmbeddedDigraph) -> tuple[int, list[int]]:
    """k and per-component genus of an embedded digraph, bare vertices included."""
    names = sorted(g.rotation)
    rots = [[(h.edge, h.out) for h in g.rotation[v]] for v in names]
    return embedding_genus(rots, dict(g.ends))


def subdivide(d: AlternatingDimap, e: str) -> AlternatingDimap:
    """Replace e by a directed 2-path through a new degree-2 vertex.

    The first half keeps the name e; the second half gets a fresh name.
    """
    new_edge = e + "'"
    while new_edge in d.head:
        new_edge += "'"
    mid = "s_" + e
    while mid in d.rotation:
        mid += "'"
    rotation = {}
    for v, rot in d.rotation.items():
        rotation[v] = tuple(HalfEdge(new_edge, False) if h == HalfEdge(e, False) else h for h in rot)
    rotation[mid] = (HalfEdge(e, False), HalfEdge(new_edge, True))
    ends = d.ends()
    ends[new_edge] = (mid, d.head[e])
    ends[e] = (d.tail[e], mid)
    return AlternatingDimap(rotation, ends)


def _contract_faces_to_digons(d: AlternatingDimap, clockwise: bool) -> AlternatingDimap:
    while True:
        faces = d.faces()[0 if clockwise else 1]
        if any(len(f) == 1 for f in faces):
            raise FaceOfSizeOne("a face of size one cannot be stretched to a digon")
        big = [f for f in faces if len(f) > 2]
        if not big:
            return d
        target = big[0].boundary
        candidates = [x for x in target if d.tail[x] != d.head[x]]
        if not candidates:
            raise PreconditionError(f"face {list(target)} consists of loops only")
        d = reduce(d, candidates[0], ReductionKind.ONE)


def contract_cfaces_to_digons(d: AlternatingDimap) -> AlternatingDimap:
    return _contract_faces_to_digons(d, True)


def contract_afaces_to_digons(d: AlternatingDimap) -> AlternatingDimap:
    return _contract_faces_to_digons(d, False)
