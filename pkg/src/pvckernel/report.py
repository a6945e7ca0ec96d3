"""Single-run JSON reports and benchmark CSV rows."""
from __future__ import annotations

import time

from .kernel import KernelOutcome, PvcInstance, kernelize
from .oracle import solve_pvc_exact

CSV_HEADER = [
    "instance", "variant", "n", "m", "k", "l", "kernel_n", "kernel_m", "kernel_k",
    "bound", "bound_ok", "rule1", "rule2", "rule3", "rule4", "oracle_agree", "time_ms",
]

_COUNT3 = {"type": "object", "required": ["n", "m", "k"],
           "properties": {k: {"type": "integer"} for k in ("n", "m", "k")}}

REPORT_SCHEMA = {
    "type": "object",
    "required": ["input", "variant", "vclp", "steps", "outcome", "kernel",
                 "bound", "bound_satisfied", "oracle", "time_ms"],
    "properties": {
        "input": {"type": "object", "required": ["n", "m", "k", "l"],
                  "properties": {k: {"type": "integer"} for k in ("n", "m", "k", "l")}},
        "variant": {"enum": ["expansion", "additive"]},
        "vclp": {"oneOf": [
            {"type": "null"},
            {"type": "object", "required": ["doubled_value", "v0", "v1", "vhalf"],
             "properties": {k: {"type": "integer", "minimum": 0}
                            for k in ("doubled_value", "v0", "v1", "vhalf")}},
        ]},
        "steps": {"type": "array", "items": {
            "type": "object", "required": ["rule", "deleted", "k_decrement"],
            "properties": {"rule": {"enum": [1, 2, 3, 4]},
                           "deleted": {"type": "array"},
                           "k_decrement": {"type": "integer", "minimum": 0}}}},
        "outcome": {"enum": ["yes", "no", "reduced"]},
        "reason": {"type": "string"},
        "kernel": _COUNT3,
        "bound": {"type": "integer"},
        "bound_satisfied": {"type": "boolean"},
        "oracle": {"oneOf": [
            {"type": "null"},
            {"type": "object", "required": ["original", "kernel", "agree"],
             "properties": {"original": {"enum": ["yes", "no"]},
                            "kernel": {"enum": ["yes", "no"]},
                            "agree": {"type": "boolean"}}},
        ]},
        "time_ms": {"type": "number", "minimum": 0},
    },
}


def _yn(b: bool) -> str:
    return "yes" if b else "no"


def oracle_check(outcome: KernelOutcome) -> dict:
    """Compare the brute-force answer on the input with the kernel's answer."""
    orig = outcome.original
    before = solve_pvc_exact(orig.graph, orig.k, orig.l).answer
    if outcome.decided:
        after = outcome.answer
    else:
        kern = outcome.instance
        after = solve_pvc_exact(kern.graph, kern.k, kern.l).answer
    return {"original": _yn(before), "kernel": _yn(after), "agree": before == after}


def bound_satisfied(outcome: KernelOutcome) -> bool:
    # decided outcomes stand for a constant-size trivial instance
    return outcome.decided or outcome.instance.graph.n <= outcome.bound


def build_report(outcome: KernelOutcome, elapsed_ms: float, oracle: dict | None = None) -> dict:
    orig, kern = outcome.original, outcome.instance
    lp = outcome.lp
    return {
        "input": {"n": orig.graph.n, "m": orig.graph.m, "k": orig.k, "l": orig.l},
        "variant": outcome.variant,
        "vclp": None if lp is None else {"doubled_value": lp.doubled_value, **lp.sizes()},
        "steps": [s.to_json() for s in outcome.trace.steps],
        "outcome": outcome.status,
        "reason": outcome.reason,
        "kernel": {"n": kern.graph.n, "m": kern.graph.m, "k": kern.k},
        "bound": outcome.bound,
        "bound_satisfied": bound_satisfied(outcome),
        "oracle": oracle,
        "time_ms": round(elapsed_ms, 3),
    }


def run(inst: PvcInstance, variant: str, with_oracle: bool = False) -> tuple[KernelOutcome, dict]:
    t0 = time.perf_counter()
    outcome = kernelize(inst, variant)
    elapsed = (time.perf_counter() - t0) * 1000
    oracle = oracle_check(outcome) if with_oracle else None
    return outcome, build_report(outcome, elapsed, oracle)


def csv_row(name: str, report: dict, outcome: KernelOutcome) -> dict:
    tr = outcome.trace
    oracle = report["oracle"]
    return {
        "instance": name,
        "variant": report["variant"],
        **{k: report["input"][k] for k in ("n", "m", "k", "l")},
        "kernel_n": report["kernel"]["n"],
        "kernel_m": report["kernel"]["m"],
        "kernel_k": report["kernel"]["k"],
        "bound": report["bound"],
        "bound_ok": report["bound_satisfied"],
        "rule1": tr.count(1),
        "rule2": tr.count(2),
        "rule3": tr.count(3),
        "rule4": tr.count(4),
        "oracle_agree": "" if oracle is None else oracle["agree"],
        "time_ms": report["time_ms"],
    }
