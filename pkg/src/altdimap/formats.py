"""JSON file formats: adm-v1 (dimaps), pg-v1 (plane graphs), trin-v1 (triples),
params-v1 (parameter sequences). corpus-v1 lives in the census module."""

from __future__ import annotations

import json
from fractions import Fraction

from .algebra import PARAMS, ParamSeq16
from .core import AlternatingDimap, EmbeddedDigraph, HalfEdge, PermutationTriple, cycles, validate
from .errors import FormatError
from .invariants import PlaneGraph


def _load(text: str) -> dict:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as err:
        raise FormatError(f"invalid JSON: {err.msg}", err.lineno) from None
    if not isinstance(obj, dict):
        raise FormatError("top level must be a JSON object")
    return obj


def _expect_format(obj: dict, name: str) -> None:
    if obj.get("format") != name:
        raise FormatError(f"expected \"format\": \"{name}\"")


def _field(item, key, kind, where):
    if not isinstance(item, dict) or key not in item:
        raise FormatError(f"{where}: missing field {key!r}")
    value = item[key]
    if not isinstance(value, kind):
        raise FormatError(f"{where}: field {key!r} has the wrong type")
    return value


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# adm-v1

def parse_adm_raw(text: str) -> EmbeddedDigraph:
    obj = _load(text)
    _expect_format(obj, "adm-v1")
    rotation = {}
    for n, item in enumerate(_field(obj, "vertices", list, "document")):
        where = f"vertices[{n}]"
        vid = _field(item, "id", str, where)
        if vid in rotation:
            raise FormatError(f"{where}: duplicate vertex {vid!r}")
        slots = []
        for h in _field(item, "rot", list, where):
            try:
                slots.append(HalfEdge.parse(h))
            except (ValueError, TypeError):
                raise FormatError(f"{where}: bad half-edge {h!r}") from None
        rotation[vid] = tuple(slots)
    ends = {}
    for n, item in enumerate(_field(obj, "edges", list, "document")):
        where = f"edges[{n}]"
        eid = _field(item, "id", str, where)
        if eid in ends:
            raise FormatError(f"{where}: duplicate edge {eid!r}")
        tail, head = _field(item, "tail", str, where), _field(item, "head", str, where)
        for v in (tail, head):
            if v not in rotation:
                raise FormatError(f"{where}: unknown vertex {v!r}")
        ends[eid] = (tail, head)
    return EmbeddedDigraph(rotation, ends)


def parse_adm(text: str) -> AlternatingDimap:
    return validate(parse_adm_raw(text))


def emit_adm(d: AlternatingDimap) -> str:
    return _dump({
        "format": "adm-v1",
        "vertices": [{"id": v, "rot": [str(h) for h in d.rotation[v]]} for v in d.vertices],
        "edges": [{"id": e, "tail": d.tail[e], "head": d.head[e]} for e in d.edges],
    })


# pg-v1

def parse_pg(text: str) -> PlaneGraph:
    obj = _load(text)
    _expect_format(obj, "pg-v1")
    rotation = {}
    for n, item in enumerate(_field(obj, "vertices", list, "document")):
        where = f"vertices[{n}]"
        vid = _field(item, "id", str, where)
        rot = _field(item, "rot", list, where)
        if not all(isinstance(e, str) for e in rot):
            raise FormatError(f"{where}: rotation entries must be edge names")
        rotation[vid] = rot
    try:
        return PlaneGraph.from_rotation(dict(sorted(rotation.items())))
    except ValueError as err:
        raise FormatError(str(err)) from None


def emit_pg(g: PlaneGraph) -> str:
    return _dump({
        "format": "pg-v1",
        "vertices": [{"id": v, "rot": [e for e, _ in g.rotation[v]]} for v in g.vertices],
    })


# trin-v1

def parse_trin(text: str) -> PermutationTriple:
    obj = _load(text)
    _expect_format(obj, "trin-v1")
    edges = _field(obj, "edges", list, "document")
    perms = []
    for name in ("sigma1", "sigmaw", "sigmaw2"):
        perm = {}
        for cyc in _field(obj, name, list, "document"):
            if not isinstance(cyc, list) or not cyc or any(x not in edges for x in cyc):
                raise FormatError(f"{name}: malformed cycle {cyc!r}")
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                if a in perm:
                    raise FormatError(f"{name}: edge {a!r} repeated")
                perm[a] = b
        if set(perm) != set(edges):
            raise FormatError(f"{name}: must cover every edge once")
        perms.append(perm)
    t = PermutationTriple(*perms)
    t.check()
    return t


def emit_trin(t: PermutationTriple) -> str:
    return _dump({
        "format": "trin-v1",
        "edges": t.edges,
        "sigma1": [list(c) for c in cycles(t.sigma1)],
        "sigmaw": [list(c) for c in cycles(t.sigmaw)],
        "sigmaw2": [list(c) for c in cycles(t.sigmaw2)],
    })


# params-v1

def parse_params(text: str) -> ParamSeq16:
    obj = _load(text)
    obj.pop("format", None)
    unknown = set(obj) - set(PARAMS)
    if unknown:
        raise FormatError(f"unknown parameters: {sorted(unknown)}")
    values = {}
    for name, v in obj.items():
        if isinstance(v, bool) or not isinstance(v, (int, str)):
            raise FormatError(f"parameter {name}: expected an integer, a fraction string or its own name")
        if isinstance(v, str) and v != name:
            try:
                v = Fraction(v)
            except ValueError:
                raise FormatError(f"parameter {name}: {v!r} is neither a number nor {name!r}") from None
        values[name] = v
    return ParamSeq16(values)


def emit_params(p: ParamSeq16) -> str:
    out = {}
    for name in PARAMS:
        v = p[name]
        if isinstance(v, str):
            out[name] = v
        elif isinstance(v, Fraction) and v.denominator == 1:
            out[name] = v.numerator
        else:
            out[name] = str(v)
    return _dump(out)
