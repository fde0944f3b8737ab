"""Command line entry point.

Exit codes: 0 success, 1 declined (hypotheses unmet or search too large),
2 input error, 3 internal consistency failure (details dumped to stderr).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import report as rp
from .cech import JOBS_ENV, profile_of
from .combinatorics import SquarefreeIdeal
from .filtration import classify, cm_invariant_report, dimension_filtration
from .homology import depth_dim_oracle
from .io import BUILTIN_TEXT, BUILTINS, IdealDocument, ParseError, load
from .linalg import FieldSpec, StructuralError
from .search import SearchDeclined, question_search

EXIT_OK, EXIT_DECLINED, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


class InputError(Exception):
    pass


def _char(text: str) -> int:
    try:
        return FieldSpec(int(text)).characteristic
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seqcm",
        description="Relative Cohen-Macaulay analysis of monomial ideals in K[x1..xm, y1..yn].")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=sorted(rp.RENDERERS), default="text")
    common.add_argument("--output", "-o", help="write the report here instead of stdout")
    common.add_argument("--figures", metavar="DIR", help="also render PNG figures into DIR")
    common.add_argument("--jobs", type=int, help=f"worker processes (default ${JOBS_ENV} or 1)")
    sub = parser.add_subparsers(dest="command", required=True)

    def ideal_cmd(name, help_text, wrt_default, chars=True):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("ideal", help="built-in name, path to an ideal document, or - for stdin")
        if wrt_default is not None:
            p.add_argument("--wrt", action="append", choices=rp.WRT_NAMES,
                           help=f"torsion set, repeatable (default {' '.join(wrt_default)})")
            p.set_defaults(wrt_default=wrt_default)
        if chars:
            p.add_argument("--char", action="append", type=_char, dest="chars",
                           help="field characteristic, repeatable (default: the document's "
                                "list, else 0)")
        return p

    ideal_cmd("profile", "nonvanishing local cohomology indices", ["P", "Q", "m"])
    ideal_cmd("filtration", "dimension filtration", ["Q"], chars=False)
    ideal_cmd("classify", "CM, sequentially CM and approximately CM verdicts", ["Q"])
    ideal_cmd("invariants", "identities for CM ideals sequentially CM wrt Q", None)
    s = sub.add_parser("search", parents=[common], help="scan for counterexample candidates")
    s.add_argument("--max-x", type=int, default=2)
    s.add_argument("--max-y", type=int, default=2)
    s.add_argument("--budget", type=int, default=1000)
    s.add_argument("--char", action="append", type=_char, dest="chars")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--include", action="append", default=[],
                   help="built-in or document scanned first (repeatable)")
    sub.add_parser("examples", parents=[common], help="list built-in ideals")
    return parser


def _fields(args, doc: IdealDocument | None) -> list[FieldSpec]:
    if args.chars:
        return [FieldSpec(c) for c in dict.fromkeys(args.chars)]
    return list(doc.fields()) if doc is not None else [FieldSpec(0)]


def _wrts(args) -> list[str]:
    return list(dict.fromkeys(args.wrt or args.wrt_default))


def _squarefree(doc: IdealDocument) -> SquarefreeIdeal:
    if not doc.squarefree:
        raise InputError("this command needs a squarefree ideal")
    I = doc.ideal()
    if I.is_zero or I.is_unit:
        raise InputError("this command needs a proper nonzero ideal")
    return I


def _load(source: str) -> IdealDocument:
    try:
        return load(source)
    except OSError as exc:
        raise InputError(f"cannot read {source!r}: {exc.strerror or exc}") from None


def _cmd_profile(args, doc, report):
    I = doc.ideal()
    if I.is_unit:
        raise InputError("S/I is zero for the unit ideal")
    ring = doc.ring
    out = []
    for field in _fields(args, doc):
        for w in _wrts(args):
            prof = profile_of(I, ring.torsion(w), field, jobs=args.jobs)
            entry = rp.profile_entry(prof)
            if w == "m":
                entry["depth"], entry["dim"] = prof.grade, prof.cd
                if doc.squarefree:
                    depth, dim = depth_dim_oracle(I, field)
                    agrees = (depth, dim) == (prof.grade, prof.cd)
                    entry["oracle"] = {"depth": depth, "dim": dim, "agrees": agrees}
                    if not agrees:
                        raise StructuralError(
                            f"engine depth/dim {(prof.grade, prof.cd)} but link homology gives "
                            f"{(depth, dim)} for {I} over {field}")
            out.append(entry)
    report["profiles"] = out
    return EXIT_OK


def _cmd_filtration(args, doc, report):
    I = _squarefree(doc)
    report["filtrations"] = [rp.filtration_entry(dimension_filtration(I, doc.ring.torsion(w)))
                             for w in _wrts(args)]
    return EXIT_OK


def _cmd_classify(args, doc, report):
    I = _squarefree(doc)
    out, filts = [], {}
    for w in _wrts(args):
        for field in _fields(args, doc):
            res = classify(I, doc.ring.torsion(w), field)
            filts.setdefault(w, res.filtration)
            out.append({"wrt": w, "char": field.characteristic,
                        "relative": rp.verdict_entry(res.relative, f"_wrt_{w}"),
                        "classical": rp.verdict_entry(res.classical, "")})
    report["filtrations"] = [rp.filtration_entry(f) for f in filts.values()]
    report["classifications"] = out
    return EXIT_OK


def _cmd_invariants(args, doc, report):
    I = doc.ideal()
    if I.is_zero or I.is_unit:
        raise InputError("this command needs a proper nonzero ideal")
    out = [rp.invariants_entry(cm_invariant_report(I, field), field.characteristic)
           for field in _fields(args, doc)]
    report["invariants"] = out
    return EXIT_DECLINED if any(e["status"] == "declined" for e in out) else EXIT_OK


def _cmd_search(args, report):
    include = []
    for src in args.include:
        doc = _load(src)
        include.append(_squarefree(doc))
    out = []
    try:
        for field in _fields(args, None):
            res = question_search(args.max_x, args.max_y, field, args.budget, include=include,
                                  seed=args.seed, jobs=args.jobs or 1)
            out.append(rp.search_entry(res))
    except SearchDeclined as exc:
        report["declined"] = str(exc)
        return EXIT_DECLINED
    report["searches"] = out
    return EXIT_OK


def _cmd_examples(args, report):
    entries = []
    for name, doc in BUILTINS.items():
        summary = BUILTIN_TEXT[name].splitlines()[0].lstrip("# ").strip()
        entries.append({"name": name, "ring": {"m": doc.ring.m, "n": doc.ring.n},
                        "generators": doc.generator_strings(), "summary": summary})
    report["examples"] = entries
    return EXIT_OK


def run(argv: list[str] | None = None) -> tuple[dict | None, int]:
    """Parse ``argv`` and execute; returns ``(report, exit code)`` without printing."""
    args = _parser().parse_args(argv)
    params = {k: v for k, v in sorted(vars(args).items())
              if k not in ("command", "format", "output", "figures", "jobs", "wrt_default", "seed")}
    report = rp.new_report(args.command, seed=getattr(args, "seed", 0), **params)
    if args.command == "search":
        return report, _cmd_search(args, report)
    if args.command == "examples":
        return report, _cmd_examples(args, report)
    doc = _load(args.ideal)
    report["input"] = rp.echo(doc)
    handler = {"profile": _cmd_profile, "filtration": _cmd_filtration,
               "classify": _cmd_classify, "invariants": _cmd_invariants}[args.command]
    return report, handler(args, doc, report)


def _emit(report: dict, args_format: str, output: str | None):
    text = rp.RENDERERS[args_format](report)
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    pre = _parser()
    try:
        args = pre.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        report, code = run(argv)
    except (ParseError, InputError) as exc:
        print(f"seqcm: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except StructuralError as exc:
        dump = {"error": type(exc).__name__, "message": str(exc), "argv": list(argv)}
        if getattr(args, "ideal", None):
            dump["document"] = rp.serialize(_load(args.ideal))
        print("seqcm: internal consistency failure; please report with this dump:",
              file=sys.stderr)
        print(json.dumps(dump, indent=2), file=sys.stderr)
        return EXIT_INTERNAL
    _emit(report, args.format, args.output)
    if args.figures:
        from .plotting import render_figures

        for path in render_figures(report, args.figures):
            print(f"wrote {path}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
