"""Stable JSON reports.

Every report is a dict with insertion-ordered keys, so serializing the same
result twice gives the same bytes.
"""

from __future__ import annotations

import json

from .engine import SphereSummary, Verdict
from .groups import FinitenessReport
from .lab.ball import Evidence
from .lab.renz import RenzCertificate, RenzCheck
from .lab.words import format_word
from .omega import Hypothesis, Omega1Description, ReidConclusion
from .rational import fmt_vector

SCHEMA = "wreathsigma.report/1"


def envelope(command: dict, result: dict) -> dict:
    from . import __version__

    return {"schema": SCHEMA, "version": __version__, "command": command, "result": result}


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def verdict(v: Verdict) -> dict:
    return {"status": v.status.value, "level": v.level, "subject": v.subject, "trace": [_step(s) for s in v.trace]}


def _step(step) -> dict:
    out = {"rule": step.rule_id, "citation": step.citation, "note": step.note}
    if step.sub_verdicts:
        out["sub"] = [verdict(v) for v in step.sub_verdicts]
    return out


def finiteness(r: FinitenessReport) -> dict:
    return {"fg": r.fg, "fp": r.fp, "reasons": list(r.reasons)}


def hypothesis(h: Hypothesis) -> dict:
    return {"status": h.status.value, "reason": h.reason, "rule": h.rule_id, "citation": h.citation}


def omega(d: Omega1Description) -> dict:
    return {
        "status": d.hypothesis.status.value,
        "hypothesis": hypothesis(d.hypothesis),
        "region": d.region,
        "cardinality": d.cardinality.value if d.cardinality else None,
        "sphere_dimension": d.sphere_dimension,
    }


def reid(items: list[ReidConclusion], h: Hypothesis) -> dict:
    return {
        "hypothesis": hypothesis(h),
        "conclusions": [
            {"kind": c.kind.value, "statement": c.statement, "citation": c.citation, "trail": list(c.trail)}
            for c in items
        ],
    }


def sphere(s: SphereSummary) -> dict:
    return {
        "level": s.level,
        "resolution": s.resolution,
        "dimension": s.dimension,
        "sample_count": s.sample_count,
        "counts": dict(s.counts),
        "components": list(s.components),
        "samples": [{"ray": fmt_vector(r.values), "status": st.value} for r, st in s.samples],
    }


def evidence(e: Evidence) -> dict:
    out = {
        "kind": e.kind,
        "note": "evidence from a finite ball, not a proof",
        "radius": e.radius,
        "margin": e.margin,
        "nonnegative_vertices": e.nonnegative_vertices,
        "components": e.components,
    }
    if e.witness:
        out["witness"] = [format_word(w) for w in e.witness]
        out["separating_radius"] = e.separating_radius
    return out


def certificate(c: RenzCertificate) -> dict:
    return c.to_json()


def check(c: RenzCheck) -> dict:
    return {
        "valid": c.ok,
        "failures": [{"letter": f.letter, "clause": f.clause, "detail": f.detail} for f in c.failures],
    }
