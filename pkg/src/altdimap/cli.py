"""Command-line interface.

Exit codes: 0 success, 1 bad input, 2 invariant not well defined,
3 precondition or regime violation, 4 internal self-check failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .algebra import ParamSeq16, Poly
from .census import enumerate_dimaps, save_corpus
from .errors import (
    DimapError,
    InputError,
    MultiSemiloop,
    NotFound,
    NotWellDefined,
    PreconditionError,
    SizeBoundExceeded,
)
from .formats import emit_adm, parse_adm, parse_params, parse_pg
from .invariants import (
    alt_a,
    alt_c,
    atutte,
    atutte_all_orderings,
    atutte_zeta,
    ctutte,
    ctutte_all_orderings,
    ctutte_zeta,
    eti_all_orderings,
    eti_derived,
    tutte_plane,
)
from .minors import excluded_library, has_minor
from .reductions import ReductionKind, classify_edge, edge_flags, reduce
from .structure import is_a_alternating, is_alt_c_image, is_c_alternating, is_c_simple
from .triality import trial, trial2
from .verify import SUITES, run_suites

EXIT_OK, EXIT_INPUT, EXIT_NOT_WELL_DEFINED, EXIT_PRECONDITION, EXIT_SELF_CHECK = 0, 1, 2, 3, 4


def render(value) -> str:
    if isinstance(value, Poly):
        return value.render()
    return str(value)


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as err:
        raise InputError(f"cannot read {path}: {err.strerror}") from None


def _dimap(path: str):
    return parse_adm(_read(path))


class Output:
    def __init__(self, as_json: bool):
        self.as_json = as_json

    def emit(self, text: str, data) -> None:
        if self.as_json:
            print(json.dumps(data, indent=2, sort_keys=True))
        else:
            print(text)


def cmd_validate(args, out):
    d = _dimap(args.file)
    out.emit(f"valid: {len(d.vertices)} vertices, {len(d)} edges",
             {"valid": True, "vertices": len(d.vertices), "edges": len(d)})


def cmd_stats(args, out):
    st = _dimap(args.file).stats()
    genus = " ".join(map(str, st.genus))
    out.emit(f"k={st.k} is={st.is_} af={st.af} cf={st.cf} edges={st.edge_count} genus={genus}", st.as_dict())


def cmd_classify(args, out):
    d = _dimap(args.file)
    rows = {}
    for e in d.edges:
        try:
            rows[e] = classify_edge(d, e, args.precedence).value
        except MultiSemiloop as err:
            if not args.flags:
                raise
            rows[e] = "multi-type semiloop: " + ", ".join(err.flags)
    if args.flags:
        flags = {e: [k for k, v in vars(edge_flags(d, e)).items() if v] for e in d.edges}
        out.emit("\n".join(f"{e}: {rows[e]} [{', '.join(flags[e])}]" for e in d.edges),
                 {e: {"class": rows[e], "flags": flags[e]} for e in d.edges})
    else:
        out.emit("\n".join(f"{e}: {c}" for e, c in rows.items()), rows)


def cmd_faces(args, out):
    cw, acw = _dimap(args.file).faces()
    lines = [f"clockwise: {' '.join(f.boundary)}" for f in cw]
    lines += [f"anticlockwise: {' '.join(f.boundary)}" for f in acw]
    out.emit("\n".join(lines), {"clockwise": [list(f.boundary) for f in cw],
                                "anticlockwise": [list(f.boundary) for f in acw]})


def cmd_reduce(args, out):
    d = _dimap(args.file)
    if args.edge not in d.head:
        raise InputError(f"no edge {args.edge!r}")
    sys.stdout.write(emit_adm(reduce(d, args.edge, ReductionKind.parse(args.op))))


def cmd_trial(args, out):
    d = _dimap(args.file)
    sys.stdout.write(emit_adm(trial2(d) if args.square else trial(d)))


def _witness_report(derived, out, label):
    rows = [(render(v), list(derived.witnesses[v])) for v in derived.values]
    text = "\n".join(f"{v}    [{','.join(o)}]" for v, o in rows)
    out.emit(text, {label: [{"value": v, "ordering": o} for v, o in rows]})


def cmd_eti(args, out):
    d = _dimap(args.file)
    params = parse_params(_read(args.params)) if args.params else ParamSeq16.symbolic()
    if args.all_orders or args.distinct:
        derived = eti_all_orderings(d, params, precedence=args.precedence)
        if args.distinct:
            _witness_report(derived, out, "values")
            return EXIT_OK
        if not derived.well_defined:
            _witness_report(derived, out, "values")
            return EXIT_NOT_WELL_DEFINED
        value = derived.single()
    else:
        order = args.order.split(",") if args.order else None
        if order is not None and sorted(order) != d.edges:
            raise InputError("--order must list every edge exactly once")
        value = eti_derived(d, order, params, precedence=args.precedence)
    out.emit(render(value), {"value": render(value)})
    return EXIT_OK


def _tutte_like(args, out, all_fn, recognized_fn, zeta_fn):
    d = _dimap(args.file)
    if getattr(args, "zeta", None):
        value = zeta_fn(d, 1 if args.zeta == "plus" else -1)
        out.emit(str(value), {"value": str(value)})
        return EXIT_OK
    if args.all_orders:
        derived = all_fn(d, precedence=args.precedence)
        if not derived.well_defined:
            _witness_report(derived, out, "values")
            return EXIT_NOT_WELL_DEFINED
        value = derived.single()
    else:
        value = recognized_fn(d)
    out.emit(render(value), {"value": render(value)})
    return EXIT_OK


def cmd_ctutte(args, out):
    return _tutte_like(args, out, ctutte_all_orderings, ctutte, ctutte_zeta)


def cmd_atutte(args, out):
    return _tutte_like(args, out, atutte_all_orderings, atutte, atutte_zeta)


def cmd_tutte(args, out):
    value = tutte_plane(parse_pg(_read(args.file)))
    out.emit(render(value), {"value": render(value)})


def cmd_altc(args, out):
    sys.stdout.write(emit_adm(alt_c(parse_pg(_read(args.file)))))


def cmd_alta(args, out):
    sys.stdout.write(emit_adm(alt_a(parse_pg(_read(args.file)))))


def cmd_recognize(args, out):
    d = _dimap(args.file)
    report = {
        "c-simple": is_c_simple(d),
        "c-alternating": is_c_alternating(d),
        "a-alternating": is_a_alternating(d),
        "alt_c-image": is_alt_c_image(d) is not None,
    }
    out.emit("\n".join(f"{k}: {'yes' if v else 'no'}" for k, v in report.items()), report)


def cmd_minor(args, out):
    d = _dimap(args.file)
    library = excluded_library()
    target = library.get(args.target.lower()) if args.target.lower() in library else _dimap(args.target)
    found, trace = has_minor(d, target)
    if found:
        steps = " ".join(f"{e}[{k.value}]" for e, k in trace.steps) or "(none)"
        out.emit(f"minor found; reductions: {steps}", {"found": True, "trace": trace.as_json()})
    else:
        out.emit("no such minor", {"found": False})


def cmd_enumerate(args, out):
    corpus = enumerate_dimaps(args.edges, args.connected, args.planar)
    save_corpus(corpus, args.out)
    out.emit(f"{len(corpus)} classes written to {args.out}", {"classes": len(corpus), "path": args.out})


def cmd_verify(args, out):
    results = run_suites(args.suite, args.max_edges, args.seed)
    out.emit("\n".join(r.line() for r in results),
             {r.name: {"passed": r.passed, "failed": r.failed} for r in results})
    return EXIT_OK if all(r.ok for r in results) else EXIT_SELF_CHECK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="altdimap", description="Alternating dimaps and their Tutte-type invariants.")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text, file_arg=True):
        sp = sub.add_parser(name, help=help_text)
        if file_arg:
            sp.add_argument("file")
        sp.set_defaults(fn=fn)
        return sp

    add("validate", cmd_validate, "check an adm-v1 file")
    add("stats", cmd_stats, "components, in-stars, faces and genus")
    sp = add("classify", cmd_classify, "edge classes")
    sp.add_argument("--precedence", action="store_true", help="resolve multi-type semiloops as 1 > w > w2")
    sp.add_argument("--flags", action="store_true", help="also list the raw loop/semiloop flags")
    add("faces", cmd_faces, "clockwise and anticlockwise faces")
    sp = add("reduce", cmd_reduce, "apply one reduction")
    sp.add_argument("--edge", required=True)
    sp.add_argument("--op", required=True, choices=["1", "w", "w2", "*"])
    sp = add("trial", cmd_trial, "apply the trial")
    sp.add_argument("--square", action="store_true")
    sp = add("eti", cmd_eti, "extended Tutte invariant")
    sp.add_argument("--order")
    sp.add_argument("--all-orders", action="store_true")
    sp.add_argument("--params")
    sp.add_argument("--distinct", action="store_true")
    sp.add_argument("--precedence", action="store_true")
    for name, fn in (("ctutte", cmd_ctutte), ("atutte", cmd_atutte)):
        sp = add(name, fn, f"{name[0]}-Tutte invariant")
        sp.add_argument("--all-orders", action="store_true")
        sp.add_argument("--zeta", choices=["plus", "minus"])
        sp.add_argument("--precedence", action="store_true")
    add("tutte", cmd_tutte, "Tutte polynomial of a pg-v1 plane graph")
    add("altc", cmd_altc, "alt_c of a plane graph")
    add("alta", cmd_alta, "alt_a of a plane graph")
    add("recognize", cmd_recognize, "structural classes")
    sp = add("minor", cmd_minor, "minor containment")
    sp.add_argument("--target", required=True, help="g13, g23a, g23c, g351, g24 or an adm-v1 file")
    sp = add("enumerate", cmd_enumerate, "write a census corpus", file_arg=False)
    sp.add_argument("--edges", type=int, required=True)
    sp.add_argument("--connected", action="store_true")
    sp.add_argument("--planar", action="store_true")
    sp.add_argument("--out", required=True)
    sp = add("verify", cmd_verify, "replay property suites over the census", file_arg=False)
    sp.add_argument("--suite", nargs="+", default=["all"], choices=sorted(SUITES) + ["all"])
    sp.add_argument("--max-edges", type=int, default=4)
    sp.add_argument("--seed", type=int, default=0)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    out = Output(args.json)
    try:
        code = args.fn(args, out)
    except NotWellDefined as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_NOT_WELL_DEFINED
    except (InputError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT
    except (PreconditionError, MultiSemiloop, SizeBoundExceeded) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (NotFound, DimapError) as err:
        print(f"internal check failed: {err}", file=sys.stderr)
        return EXIT_SELF_CHECK
    return code or EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
