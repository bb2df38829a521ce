"""Alternating dimaps: reductions, triality and Tutte-type invariants."""

from .algebra import Cyclotomic6, ParamSeq16, Poly, parse_poly
from .census import enumerate_dimaps, load_corpus, save_corpus
from .core import (
    AlternatingDimap,
    PermutationTriple,
    canonical_form,
    from_triple,
    is_isomorphic,
    is_subdimap,
    validate,
)
from .errors import DimapError, InputError, NotWellDefined, PreconditionError
from .formats import emit_adm, parse_adm
from .invariants import (
    atutte,
    ctutte,
    eti_all_orderings,
    eti_closed_form,
    eti_derived,
    tutte_plane,
)
from .minors import excluded_library, has_minor
from .reductions import EdgeClass, ReductionKind, classify_edge, reduce
from .triality import trial, trial2

__version__ = "0.1.0"

__all__ = [
    "AlternatingDimap", "Cyclotomic6", "DimapError", "EdgeClass", "InputError",
    "NotWellDefined", "ParamSeq16", "PermutationTriple", "Poly", "PreconditionError",
    "ReductionKind", "atutte", "canonical_form", "classify_edge", "ctutte",
    "emit_adm", "enumerate_dimaps", "eti_all_orderings", "eti_closed_form",
    "eti_derived", "excluded_library", "from_triple", "has_minor", "is_isomorphic",
    "is_subdimap", "load_corpus", "parse_adm", "parse_poly", "reduce", "save_corpus",
    "trial", "trial2", "tutte_plane", "validate",
]
