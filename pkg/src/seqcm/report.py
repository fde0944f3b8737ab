"""Structured reports and their text and TSV renderings.

The report is a plain nested dict built in a fixed key order.  JSON is its
canonical form; the text and TSV views are derived from it.
"""

from __future__ import annotations

import json

from . import __version__
from .cech import CohomologyProfile
from .combinatorics import RingSpec
from .filtration import FiltrationResult, InvariantReport, Verdicts
from .io import IdealDocument, serialize  # noqa: F401  (re-exported)
from .search import Finding, SearchResult

SCHEMA = "seqcm.report/1"
WRT_NAMES = ("P", "Q", "m")


def new_report(command: str, seed: int = 0, **params) -> dict:
    return {"schema": SCHEMA, "version": __version__, "seed": seed,
            "command": command, "params": params}


def echo(doc: IdealDocument) -> dict:
    return {
        "name": doc.name,
        "ring": {"m": doc.ring.m, "n": doc.ring.n},
        "squarefree": doc.squarefree,
        "generators": doc.generator_strings(),
        "document": serialize(doc),
    }


def wrt_name(ring: RingSpec, T: int) -> str:
    for name in WRT_NAMES:
        if ring.torsion(name) == T:
            return name
    return "{" + ",".join(ring.names(T)) + "}"


def profile_entry(prof: CohomologyProfile) -> dict:
    ring = prof.ring
    return {
        "wrt": wrt_name(ring, prof.torsion),
        "char": prof.field.characteristic,
        "nonvanishing": prof.indices,
        "grade": prof.grade,
        "cd": prof.cd,
        "cohen_macaulay": prof.is_cohen_macaulay,
        "full_interval": prof.full_interval,
        "witnesses": {str(i): w.label(ring) for i, w in enumerate(prof.witnesses)
                      if w is not None},
    }


def filtration_entry(filt: FiltrationResult) -> dict:
    ring = filt.ideal.ring
    steps = []
    for i in range(1, filt.r + 1):
        steps.append({
            "i": i,
            "q": filt.cd_values[i - 1],
            "primes": [str(p) for p in filt.groups[i - 1]],
            "J": str(filt.ideals[i]),
        })
    return {
        "wrt": wrt_name(ring, filt.torsion),
        "r": filt.r,
        "cd_values": list(filt.cd_values),
        "J0": str(filt.ideals[0]),
        "steps": steps,
        "unmixed_component": str(filt.unmixed_ideal),
    }


def verdict_entry(v: Verdicts, suffix: str) -> dict:
    return {
        f"cm{suffix}": v.cm,
        f"seq_cm{suffix}": v.seq_cm,
        f"approx_cm{suffix}": v.approx_cm,
        f"relatively_unmixed{suffix}": v.relatively_unmixed,
        "certificates": {
            "grade": v.grade,
            "cd": v.cd,
            "cd_values": list(v.cd_values),
            "seq_grades": list(v.seq_certificates),
            "seq_failing_index": v.seq_failing_index,
            "unmixed_quotient": {"grade": v.unmixed_quotient[0], "cd": v.unmixed_quotient[1]},
        },
    }


def invariants_entry(rep: InvariantReport, char: int) -> dict:
    return {
        "char": char,
        "status": rep.status,
        "reason": rep.reason,
        "lines": [{"name": ln.name, "lhs": ln.lhs, "rhs": ln.rhs, "holds": ln.holds}
                  for ln in rep.lines],
        "context": dict(rep.context),
    }


def _finding(f: Finding) -> dict:
    ring = f.ideal.ring
    return {
        "ring": {"m": ring.m, "n": ring.n},
        "ideal": str(f.ideal),
        "q_nonvanishing": [i for i, b in enumerate(f.q_nonvanishing) if b],
        "p_nonvanishing": [i for i, b in enumerate(f.p_nonvanishing) if b],
        "counterexample": f.counterexample,
    }


def search_entry(res: SearchResult) -> dict:
    return {
        "char": res.field.characteristic,
        "exhaustive": res.exhaustive,
        "scanned": res.scanned,
        "cohen_macaulay": res.cohen_macaulay,
        "qualifying": res.qualifying,
        "counterexamples": len(res.counterexamples),
        "q_width_histogram": {str(k): v for k, v in res.width_histogram.items()},
        "message": res.message,
        "findings": [_finding(f) for f in res.findings],
    }


def to_json(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def _flatten(value, prefix: str, out: list[tuple[str, str]]):
    if isinstance(value, dict):
        for k, v in value.items():
            _flatten(v, f"{prefix}.{k}" if prefix else str(k), out)
    elif isinstance(value, list) and any(isinstance(v, (dict, list)) for v in value):
        for i, v in enumerate(value):
            _flatten(v, f"{prefix}.{i}", out)
    else:
        out.append((prefix, _scalar(value)))


def _scalar(value) -> str:
    if isinstance(value, str):
        # keep one row per record
        return value.replace("\t", " ").replace("\n", "\\n")
    return json.dumps(value, ensure_ascii=False)


def to_tsv(report: dict) -> str:
    rows: list[tuple[str, str]] = []
    _flatten(report, "", rows)
    return "key\tvalue\n" + "".join(f"{k}\t{v}\n" for k, v in rows)


def _flags(indices: list[int]) -> str:
    return "{" + ", ".join(map(str, indices)) + "}"


def to_text(report: dict) -> str:
    lines = [f"seqcm {report['version']}  {report['command']}"]
    inp = report.get("input")
    if inp:
        ring = inp["ring"]
        label = inp["name"] or "ideal"
        lines.append(f"{label} in K[x1..x{ring['m']}, y1..y{ring['n']}]: "
                     f"({', '.join(inp['generators'])})")
    for p in report.get("profiles", []):
        lines.append(f"H^i_{p['wrt']} over char {p['char']}: nonzero at {_flags(p['nonvanishing'])}"
                     f"  grade {p['grade']}  cd {p['cd']}"
                     f"  CM {'yes' if p['cohen_macaulay'] else 'no'}")
        if "oracle" in p:
            o = p["oracle"]
            lines.append(f"  depth {o['depth']}  dim {o['dim']}  (link homology agrees: "
                         f"{'yes' if o['agrees'] else 'NO'})")
    for f in report.get("filtrations", []):
        lines.append(f"dimension filtration wrt {f['wrt']}: r = {f['r']}, "
                     f"cd values {tuple(f['cd_values'])}")
        for s in f["steps"]:
            lines.append(f"  q_{s['i']} = {s['q']}: {' '.join(s['primes'])}")
            lines.append(f"    J_{s['i']} = {s['J']}")
        lines.append(f"  unmixed component J_(r-1) = {f['unmixed_component']}")
    for c in report.get("classifications", []):
        lines.append(f"classification wrt {c['wrt']} over char {c['char']}:")
        for part in ("relative", "classical"):
            block = c[part]
            flags = "  ".join(f"{k}: {str(v).lower()}" for k, v in block.items()
                              if k != "certificates")
            cert = block["certificates"]
            lines.append(f"  {flags}")
            lines.append(f"    grade {cert['grade']}  cd {cert['cd']}  "
                         f"seq grades {tuple(cert['seq_grades'])} vs cd values "
                         f"{tuple(cert['cd_values'])}")
    for inv in report.get("invariants", []):
        lines.append(f"invariants over char {inv['char']}: {inv['status']}"
                     + (f" ({inv['reason']})" if inv["reason"] else ""))
        for ln in inv["lines"]:
            lines.append(f"  [{'ok' if ln['holds'] else 'FAIL'}] {ln['name']}: "
                         f"{ln['lhs']} vs {ln['rhs']}")
        ctx = inv["context"]
        lines.append(f"  cd(P) + cd(Q) = {ctx['cdP_plus_cdQ']}, dim + r - 1 = "
                     f"{ctx['dim_plus_r_minus_1']}, Q-profile full: "
                     f"{'yes' if ctx['q_profile_full'] else 'no'}")
    for s in report.get("searches", []):
        lines.append(f"search over char {s['char']} "
                     f"({'exhaustive' if s['exhaustive'] else 'sampled'}): scanned {s['scanned']}, "
                     f"CM {s['cohen_macaulay']}, qualifying {s['qualifying']}")
        lines.append("  Q-profile widths: " + ", ".join(
            f"{k}: {v}" for k, v in s["q_width_histogram"].items()))
        lines.append(f"  {s['message']}")
        for f in s["findings"]:
            tag = "COUNTEREXAMPLE" if f["counterexample"] else "qualifying"
            lines.append(f"  {tag} ({f['ring']['m']},{f['ring']['n']}) {f['ideal']}  "
                         f"Q {_flags(f['q_nonvanishing'])}  P {_flags(f['p_nonvanishing'])}")
    for e in report.get("examples", []):
        lines.append(f"{e['name']:<8} ring ({e['ring']['m']},{e['ring']['n']})  "
                     f"{len(e['generators'])} generators  {e['summary']}")
    if "declined" in report:
        lines.append(f"declined: {report['declined']}")
    return "\n".join(lines) + "\n"


RENDERERS = {"json": to_json, "text": to_text, "tsv": to_tsv}
