"""Enumeration of alternating dimaps up to isomorphism, and corpus files."""

from __future__ import annotations

import functools
import itertools
import json
from dataclasses import dataclass, field
from pathlib import Path

from .core import (
    AlternatingDimap,
    PermutationTriple,
    canonical_index,
    cycles,
    from_triple,
    index_pair,
    triple_from_index,
)
from .errors import FormatError, SizeBoundExceeded

DEFAULT_CENSUS_BOUND = 6


@dataclass(frozen=True)
class Corpus:
    m: int
    pairs: tuple  # canonical (sigma1, sigma_omega) index pairs, sorted by canonical code
    connected_only: bool = False
    planar_only: bool = False
    _codes: tuple = field(default=(), compare=False, repr=False)

    def __len__(self):
        return len(self.pairs)

    def triples(self) -> list[PermutationTriple]:
        return [triple_from_index(s, l) for s, l in self.pairs]

    def dimaps(self) -> list[AlternatingDimap]:
        return [from_triple(t) for t in self.triples()]


@functools.lru_cache(maxsize=None)
def _classes(m: int) -> tuple:
    found = {}
    for s in itertools.permutations(range(m)):
        for l in itertools.permutations(range(m)):
            code, cs, cl = canonical_index(s, l)
            if code not in found:
                found[code] = (cs, cl)
    return tuple(sorted(found.items()))


def enumerate_dimaps(m: int, connected_only: bool = False, planar_only: bool = False,
                     bound: int = DEFAULT_CENSUS_BOUND) -> Corpus:
    """All dimaps with m edges up to isomorphism, from (sigma1, sigma_omega) pairs."""
    if m > bound:
        raise SizeBoundExceeded(f"census of {m} edges exceeds the bound {bound}")
    pairs, codes = [], []
    for code, (s, l) in _classes(m):
        if connected_only and len(code) != 1:
            continue
        if planar_only and from_triple(triple_from_index(s, l)).stats().total_genus:
            continue
        pairs.append((s, l))
        codes.append(code)
    return Corpus(m, tuple(pairs), connected_only, planar_only, tuple(codes))


def corpus_up_to(max_edges: int, connected_only: bool = False, planar_only: bool = False) -> list[AlternatingDimap]:
    """Every class with 1..max_edges edges, concatenated in census order."""
    out = []
    for m in range(1, max_edges + 1):
        out.extend(enumerate_dimaps(m, connected_only, planar_only).dimaps())
    return out


def _label_cycles(perm, m):
    names = [f"e{n + 1}" for n in range(m)]
    return [[names[x] for x in cyc] for cyc in cycles({n: perm[n] for n in range(m)})]


def corpus_line(m: int, s, l) -> str:
    return json.dumps({"m": m, "sigma1": _label_cycles(s, m), "sigmaw": _label_cycles(l, m)})


def save_corpus(c: Corpus, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for s, l in c.pairs:
            fh.write(corpus_line(c.m, s, l) + "\n")


def _parse_cycles(raw, m, line, name):
    labels = {f"e{n + 1}": n for n in range(m)}
    perm = [None] * m
    if not isinstance(raw, list):
        raise FormatError(f"{name} must be a list of cycles", line)
    for cyc in raw:
        if not isinstance(cyc, list) or not cyc:
            raise FormatError(f"{name} has a malformed cycle", line)
        try:
            idx = [labels[x] for x in cyc]
        except (KeyError, TypeError):
            raise FormatError(f"{name} names an unknown edge", line) from None
        for a, b in zip(idx, idx[1:] + idx[:1]):
            if perm[a] is not None:
                raise FormatError(f"{name} repeats an edge", line)
            perm[a] = b
    if None in perm:
        raise FormatError(f"{name} misses an edge", line)
    return tuple(perm)


def parse_corpus_line(text: str, line: int | None = None) -> tuple[int, tuple, tuple]:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as err:
        raise FormatError(f"invalid JSON: {err.msg}", line) from None
    if not isinstance(obj, dict) or not isinstance(obj.get("m"), int) or obj["m"] < 0:
        raise FormatError("expected an object with a non-negative integer m", line)
    m = obj["m"]
    return m, _parse_cycles(obj.get("sigma1"), m, line, "sigma1"), _parse_cycles(obj.get("sigmaw"), m, line, "sigmaw")


def load_corpus(path) -> Corpus:
    pairs, codes = [], []
    m = None
    for n, text in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), start=1):
        if not text.strip():
            continue
        lm, s, l = parse_corpus_line(text, n)
        if m is None:
            m = lm
        elif lm != m:
            raise FormatError(f"edge count {lm} differs from {m}", n)
        code, cs, cl = canonical_index(s, l)
        pairs.append((cs, cl))
        codes.append(code)
    return Corpus(m or 0, tuple(pairs), _codes=tuple(codes))


def census_entry(d: AlternatingDimap) -> tuple:
    """Canonical index pair of a dimap, as stored in a corpus."""
    _, cs, cl = canonical_index(*index_pair(d))
    return cs, cl
