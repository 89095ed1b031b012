"""CSV and JSON interchange for sequences, plans and batch reports.

Every JSON document carries ``schema`` and ``version`` keys.  Fractions are
written as ``"p/q"`` strings so nothing is rounded.
"""
from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .approx import Approximation, LatticeComparison
from .fsd import FsdSequence
from .hydro import FluxProfile, LaminarVerdict
from .mixplan import DilutionPlan, InletStates, MixStep, MixTree, ThroughputOption, inlet_states

SEQUENCE_SCHEMA = "farey-diluter/sequence"
PLAN_SCHEMA = "farey-diluter/plan"
VERSION = 1

SEQUENCE_COLUMNS = ("index", "numerator", "denominator", "value", "kind")
BATCH_COLUMNS = ("line", "target", "n", "bs_choice", "bs_error", "fsd_choice", "fsd_error",
                 "sample_units", "buffer_units", "dominates")


def frac(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def dumps(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _csv(rows, header) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def sequence_csv(seq: FsdSequence) -> str:
    return _csv(([i, x.numerator, x.denominator, f"{float(x):.10f}", seq.kind]
                 for i, x in enumerate(seq.elems)), SEQUENCE_COLUMNS)


def sequence_json(seq: FsdSequence) -> str:
    return dumps({"schema": SEQUENCE_SCHEMA, "version": VERSION, "kind": seq.kind, "n": seq.n,
                  "size": len(seq), "max_gap": frac(seq.max_gap),
                  "elements": [frac(x) for x in seq.elems]})


def parse_sequence_json(text: str) -> FsdSequence:
    doc = json.loads(text)
    if doc.get("schema") != SEQUENCE_SCHEMA or doc.get("version") != VERSION:
        raise ValueError("not a sequence document of a supported version")
    return FsdSequence(doc["kind"], doc["n"], tuple(Fraction(e) for e in doc["elements"]))


def _onoff(flags) -> list[str]:
    return ["on" if f else "off" for f in flags]


def states_dict(states: InletStates) -> dict:
    return {"sample_mix": _onoff(states.sample_mix), "sample_reuse": _onoff(states.sample_reuse),
            "buffer_mix": _onoff(states.buffer_mix), "buffer_reuse": _onoff(states.buffer_reuse)}


def approximation_dict(a: Approximation) -> dict:
    return {"target": frac(a.target.value), "target_text": a.target.original_text,
            "lattice": a.lattice_kind, "n": a.n, "chosen": frac(a.chosen),
            "error": frac(a.error), "abs_error": frac(a.abs_error),
            "error_decimal": float(a.error)}


def comparison_dict(c: LatticeComparison) -> dict:
    return {"bs": approximation_dict(c.bs), "fsd": approximation_dict(c.fsd),
            "dominates": c.dominates}


def plan_dict(plan: DilutionPlan) -> dict:
    return {
        "cf": frac(plan.cf),
        "n": plan.n,
        "sample_units": plan.sample_units,
        "buffer_units": plan.buffer_units,
        "sample_bits": list(plan.sample_bits),
        "buffer_bits": list(plan.buffer_bits),
        "steps": [{"fluid": s.fluid, "volume": s.volume, "position": s.position,
                   "accum_sample": s.accum_sample, "accum_total": s.accum_total}
                  for s in plan.tree.steps],
        "inlets": states_dict(inlet_states(plan)),
    }


def plan_document(plan: DilutionPlan, comparison: LatticeComparison | None = None,
                  verdict: LaminarVerdict | None = None, flux: FluxProfile | None = None) -> str:
    doc = {"schema": PLAN_SCHEMA, "version": VERSION, "plan": plan_dict(plan)}
    if comparison is not None:
        doc["approximation"] = comparison_dict(comparison)
    if verdict is not None:
        doc["laminar"] = {"ok": verdict.ok, "max_reynolds": verdict.max_reynolds,
                          "location": verdict.location}
    if flux is not None:
        doc["flux"] = {"cumulative_units": list(flux.cumulative), "sample_units": flux.sample,
                       "buffer_units": flux.buffer, "unit_flux_m3_per_s": flux.unit_flux}
    return dumps(doc)


def parse_plan_document(text: str) -> DilutionPlan:
    doc = json.loads(text)
    if doc.get("schema") != PLAN_SCHEMA or doc.get("version") != VERSION:
        raise ValueError("not a plan document of a supported version")
    p = doc["plan"]
    tree = MixTree(tuple(MixStep(**s) for s in p["steps"]))
    return DilutionPlan(Fraction(p["cf"]), p["sample_units"], p["buffer_units"], p["n"],
                        tuple(p["sample_bits"]), tuple(p["buffer_bits"]), tree)


def throughput_csv(options: list[ThroughputOption]) -> str:
    return _csv(([o.a, o.b, o.rate] for o in options), ("sample", "buffer", "rate"))


def batch_csv(rows: list[dict]) -> str:
    return _csv(([r[c] for c in BATCH_COLUMNS] for r in rows), BATCH_COLUMNS)
