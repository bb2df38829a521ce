"""Blocks, nesting, cycle blocks, multiloops and the c-/a-alternating classes.

Nesting is read off rotation corners. At a vertex of a block B, the corner
between an incoming slot -x and the next outgoing slot +y of B lies on the
clockwise face of B through x; the corner between +y and the next -x lies on
B's anticlockwise face through x. Recognition assumes genus zero and reports
False for other inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import networkx as nx

from .core import AlternatingDimap, Face, HalfEdge, is_isomorphic, validate
from .errors import ClockwiseCorner, DifferentComponents, InputError, NotCAlternating
from .invariants import PlaneGraph, alt_c, ctutte, tutte_plane


@dataclass(frozen=True)
class Block:
    edges: frozenset
    vertices: frozenset
    is_loop: bool

    def key(self):
        return tuple(sorted(self.edges))

    def __lt__(self, other):
        return self.key() < other.key()


@dataclass(frozen=True)
class Multiloop:
    vertex: str
    loops: tuple  # edge names, sorted
    kind: str  # "c" or "a"
    face_sizes: tuple  # sizes of the faces made only of these loops

    def __len__(self):
        return len(self.loops)


@dataclass(frozen=True)
class CBlockGraph:
    graph: nx.Graph  # nodes ("cut", v) and ("block", edges)

    @property
    def cutvertices(self) -> list:
        return sorted(n[1] for n in self.graph if n[0] == "cut")

    @property
    def blocks(self) -> list:
        return sorted(n[1] for n in self.graph if n[0] == "block")

    def is_tree(self) -> bool:
        return self.graph.number_of_nodes() > 0 and nx.is_tree(self.graph)


def blocks(d: AlternatingDimap) -> list[Block]:
    """Blocks of the underlying graph; every loop is a block of its own."""
    g = nx.Graph()
    out = []
    for e in d.edges:
        t, h = d.tail[e], d.head[e]
        if t == h:
            out.append(Block(frozenset([e]), frozenset([t]), True))
        else:
            g.add_edge(t, h)
    for verts in nx.biconnected_components(g):
        edges = frozenset(e for e in d.edges if d.tail[e] != d.head[e]
                          and d.tail[e] in verts and d.head[e] in verts)
        out.append(Block(edges, frozenset(verts), False))
    return sorted(out)


def cutvertices(d: AlternatingDimap) -> set:
    count: dict = {}
    for b in blocks(d):
        for v in b.vertices:
            count[v] = count.get(v, 0) + 1
    return {v for v, n in count.items() if n > 1}


def standalone(d: AlternatingDimap, edges: Iterable[str]) -> AlternatingDimap | None:
    """The subdimap on the given edges, or None if the induced rotation fails to alternate."""
    try:
        return validate(d.restrict(edges))
    except InputError:
        return None


def _corner(rot, inside: set, pos: int):
    """B-slots just before and after position pos, walking around the rotation."""
    n = len(rot)
    before = next(rot[(pos - k) % n] for k in range(1, n + 1) if rot[(pos - k) % n].edge in inside)
    after = next(rot[(pos + k) % n] for k in range(1, n + 1) if rot[(pos + k) % n].edge in inside)
    return before, after


def _corner_face(block_dimap: AlternatingDimap, before: HalfEdge, after: HalfEdge) -> Face:
    cw, acw = block_dimap.faces()
    if not before.out:  # -x then +y: clockwise face through x
        return next(f for f in cw if before.edge in f.boundary)
    return next(f for f in acw if after.edge in f.boundary)


def _planar(d: AlternatingDimap) -> bool:
    return len(d) == 0 or d.stats().total_genus == 0


def _block_cut_tree(d: AlternatingDimap, bs: list[Block]) -> nx.Graph:
    t = nx.Graph()
    cuts = set()
    seen: dict = {}
    for b in bs:
        for v in b.vertices:
            seen.setdefault(v, []).append(b)
    for v, owners in seen.items():
        if len(owners) > 1:
            cuts.add(v)
    for b in bs:
        t.add_node(("block", b.key()))
        for v in b.vertices:
            if v in cuts:
                t.add_edge(("cut", v), ("block", b.key()))
    return t


def c_block_graph(d: AlternatingDimap) -> CBlockGraph:
    if not is_c_alternating(d):
        raise NotCAlternating("the c-block graph needs a c-alternating dimap")
    return CBlockGraph(_block_cut_tree(d, blocks(d)))


def within_face(d: AlternatingDimap, b1: Block, b2: Block, face: Face) -> bool:
    """Whether b1 lies inside the face ``face`` of b2 (a face of b2 on its own)."""
    bs = blocks(d)
    tree = _block_cut_tree(d, bs)
    n1, n2 = ("block", b1.key()), ("block", b2.key())
    try:
        path = nx.shortest_path(tree, n2, n1)
    except nx.NetworkXNoPath:
        raise DifferentComponents("the blocks lie in different components") from None
    v = path[1][1]
    # slots at v that lead towards b1: those not belonging to b2
    rot = d.rotation[v]
    far_side = _side_edges(tree, path[1], path[2], bs)
    pos = next(p for p, h in enumerate(rot) if h.edge in far_side)
    b2d = standalone(d, b2.edges)
    before, after = _corner(rot, set(b2.edges), pos)
    return _corner_face(b2d, before, after).boundary == face.boundary


def _side_edges(tree: nx.Graph, cut_node, toward, bs: list[Block]) -> set:
    """Edges of every block reachable from ``toward`` without passing ``cut_node``."""
    sub = tree.copy()
    sub.remove_node(cut_node)
    comp = nx.node_connected_component(sub, toward)
    return {e for node in comp if node[0] == "block" for e in node[1]}


def _is_cycle(b: AlternatingDimap) -> bool:
    st = b.stats()
    return st.af == 1 and st.cf == 1 and len(b.vertices) == len(b)


def cycle_blocks(d: AlternatingDimap, clockwise: bool = True) -> list[Block]:
    """Blocks that are directed cycles bounding a face of D of the given kind by themselves.

    A loop qualifies when it alone bounds such a face.
    """
    faces = {frozenset(f.boundary) for f in d.faces()[0 if clockwise else 1]}
    out = []
    for b in blocks(d):
        if b.edges not in faces:
            continue
        if b.is_loop:
            out.append(b)
            continue
        sub = standalone(d, b.edges)
        if sub is not None and _is_cycle(sub):
            out.append(b)
    return out


def c_cycle_blocks(d: AlternatingDimap) -> list[Block]:
    return cycle_blocks(d, True)


def a_cycle_blocks(d: AlternatingDimap) -> list[Block]:
    return cycle_blocks(d, False)


def _loop_groups(d: AlternatingDimap) -> list[tuple[str, list[str]]]:
    """Loops at each vertex, linked when they share a face made only of loops."""
    loops = {e for e in d.edges if d.tail[e] == d.head[e]}
    parent = {e: e for e in loops}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    cw, acw = d.faces()
    for f in cw + acw:
        if set(f.boundary) <= loops:
            first = f.boundary[0]
            for e in f.boundary[1:]:
                parent[find(e)] = find(first)
    groups: dict = {}
    for e in sorted(loops):
        groups.setdefault(find(e), []).append(e)
    return sorted(((d.head[g[0]], g) for g in groups.values()), key=lambda t: t[1])


def _foreign_corners_ok(d: AlternatingDimap, inner: set, outer: set, v: str, want_out_before: bool) -> bool:
    """Slots of ``inner`` at v all sit in corners of ``outer`` of the wanted type."""
    rot = d.rotation[v]
    for pos, h in enumerate(rot):
        if h.edge in inner:
            before, after = _corner(rot, outer, pos)
            if before.out != want_out_before or after.out == want_out_before:
                return False
    return True


def multiloops(d: AlternatingDimap) -> list[Multiloop]:
    """Maximal multiloops. Kind "c" when they sit in anticlockwise corners of every
    non-loop block at their vertex (or there is none), else "a"."""
    nonloop = [b for b in blocks(d) if not b.is_loop]
    out = []
    for v, group in _loop_groups(d):
        members = set(group)
        kind = "c"
        for b in nonloop:
            if v in b.vertices and not _foreign_corners_ok(d, members, set(b.edges), v, True):
                kind = "a"
        cw, acw = d.faces()
        sizes = tuple(sorted(len(f) for f in cw + acw if set(f.boundary) <= members))
        out.append(Multiloop(v, tuple(group), kind, sizes))
    return out


def _is_alt_image(b: AlternatingDimap, clockwise: bool) -> bool:
    return all(len(f) == 2 for f in b.faces()[0 if clockwise else 1])


def _is_alternating_class(d: AlternatingDimap, clockwise: bool) -> bool:
    if not _planar(d):
        return False
    bs = blocks(d)
    for b in bs:
        if b.is_loop:
            continue
        sub = standalone(d, b.edges)
        if sub is None or not (_is_cycle(sub) or _is_alt_image(sub, clockwise)):
            return False
        inside = set(b.edges)
        for v in b.vertices:
            others = {h.edge for h in d.rotation[v]} - inside
            if others and not _foreign_corners_ok(d, others, inside, v, clockwise):
                return False
    return True


def is_c_alternating(d: AlternatingDimap) -> bool:
    """Non-loop blocks are cycles or alt_c images, everything else at their
    vertices sits in their anticlockwise corners; loops form c-multiloops."""
    return _is_alternating_class(d, True)


def is_a_alternating(d: AlternatingDimap) -> bool:
    return _is_alternating_class(d, False)


def is_c_simple(d: AlternatingDimap) -> bool:
    return all(d.tail[e] != d.head[e] for e in d.edges) and is_c_alternating(d)


def is_a_simple(d: AlternatingDimap) -> bool:
    return all(d.tail[e] != d.head[e] for e in d.edges) and is_a_alternating(d)


def _image_witness(d: AlternatingDimap, clockwise: bool) -> PlaneGraph | None:
    faces = d.faces()[0 if clockwise else 1]
    if any(len(f) != 2 for f in faces):
        return None
    name_of = {}
    for f in faces:
        for e in f.boundary:
            name_of[e] = f.boundary[0]
    rotation = {}
    ends: dict = {}
    for v in d.vertices:
        seq = []
        for h in d.rotation[v]:
            # one plane-graph slot per (-x, +succ(x)) pair; take it at the In slot
            if h.out:
                continue
            g_edge = name_of[h.edge]
            end = len(ends.setdefault(g_edge, []))
            ends[g_edge].append(v)
            seq.append((g_edge, end))
        rotation[v] = tuple(seq)
    return PlaneGraph(rotation, {e: (vs[0], vs[1]) for e, vs in ends.items()})


def is_alt_c_image(d: AlternatingDimap) -> PlaneGraph | None:
    """The plane graph G with alt_c(G) isomorphic to D, if every clockwise face is a digon."""
    return _image_witness(d, True)


def is_alt_a_image(d: AlternatingDimap) -> PlaneGraph | None:
    return _image_witness(d, False)


# ---------------------------------------------------------------------------
# c-unions

def a_corners(d: AlternatingDimap, v: str) -> list[int]:
    """Positions of outgoing slots at v whose following corner is anticlockwise."""
    return [p for p, h in enumerate(d.rotation[v]) if h.out]


def c_union(s1: AlternatingDimap, v1: str | None, s2: AlternatingDimap, v2: str | None,
            corner: tuple[int, int] = (None, None)) -> AlternatingDimap:
    """Glue s2 into s1 at v1 = v2, each inside an anticlockwise corner of the other.

    ``corner`` gives, for each side, the position of the slot that opens the
    chosen corner (defaults: the first outgoing slot). With both vertices None
    the result is the disjoint union.
    """
    if set(s1.edges) & set(s2.edges) or (set(s1.vertices) & set(s2.vertices)) - {v1} - ({v2} if v1 == v2 else set()):
        raise ValueError("c_union needs distinct edge and vertex names")
    rotation = dict(s1.rotation)
    rotation.update(s2.rotation)
    ends = s1.ends()
    ends.update(s2.ends())
    if v1 is None and v2 is None:
        return AlternatingDimap(rotation, ends)
    rot1, rot2 = s1.rotation[v1], s2.rotation[v2]
    p1 = corner[0] if corner[0] is not None else a_corners(s1, v1)[0]
    p2 = corner[1] if corner[1] is not None else a_corners(s2, v2)[0]
    if not rot1[p1].out or not rot2[p2].out:
        raise ClockwiseCorner("the chosen corner lies on a clockwise face")
    # s2 enters s1's corner starting at the In slot after its own opening Out slot
    inserted = rot2[p2 + 1:] + rot2[:p2 + 1]
    merged = rot1[:p1 + 1] + inserted + rot1[p1 + 1:]
    del rotation[v2]
    rotation[v1] = merged
    for e, (t, h) in list(ends.items()):
        ends[e] = (v1 if t == v2 else t, v1 if h == v2 else h)
    return AlternatingDimap(rotation, ends)


# ---------------------------------------------------------------------------
# matching against plane-graph Tutte polynomials

@dataclass(frozen=True)
class MatchReport:
    polynomial_match: bool
    structural_match: bool
    bridges_expected: int
    bridges_found: int
    loops_expected: int
    loops_found: int
    core_isomorphic: bool

    @property
    def agree(self) -> bool:
        return self.polynomial_match == self.structural_match


def _strip_graph(g: PlaneGraph) -> tuple[PlaneGraph, int, int]:
    """Remove loops and bridges; returns (G', bridge count, loop count)."""
    multi = nx.MultiGraph()
    multi.add_nodes_from(g.rotation)
    loops = [e for e, (u, v) in g.ends.items() if u == v]
    for e, (u, v) in g.ends.items():
        if u != v:
            multi.add_edge(u, v, key=e)
    bridges = set()
    for e, (u, v) in g.ends.items():
        if u == v or multi.number_of_edges(u, v) > 1:
            continue
        h = multi.copy()
        h.remove_edge(u, v, key=e)
        if not nx.has_path(h, u, v):
            bridges.add(e)
    drop = bridges | set(loops)
    rotation = {v: tuple(s for s in seq if s[0] not in drop) for v, seq in g.rotation.items()}
    ends = {e: uv for e, uv in g.ends.items() if e not in drop}
    return PlaneGraph(rotation, ends), len(bridges), len(loops)


def tutte_match(g: PlaneGraph, d: AlternatingDimap) -> MatchReport:
    """Compare T(G) with T_c(D) directly and through the block structure of D."""
    if not is_c_alternating(d):
        raise NotCAlternating("tutte_match needs a c-alternating dimap")
    poly = tutte_plane(g) == ctutte(d)
    g_core, n_bridges, n_loops = _strip_graph(g)
    cyc = [b for b in c_cycle_blocks(d) if not b.is_loop]
    groups = _loop_groups(d)
    bridges_found = sum(len(b.edges) - 1 for b in cyc)
    loops_found = 0
    for _, group in groups:
        sub = standalone(d, group)
        loops_found += len(group) - sub.stats().cf
    removed = set().union(*[b.edges for b in cyc], *[set(gr) for _, gr in groups]) if (cyc or groups) else set()
    core = standalone(d, set(d.edges) - removed)
    core_iso = core is not None and is_isomorphic(core, alt_c(g_core))
    structural = core_iso and bridges_found == n_bridges and loops_found == n_loops
    return MatchReport(poly, structural, n_bridges, bridges_found, n_loops, loops_found, core_iso)
