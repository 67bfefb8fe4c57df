"""Batch jobs: parse a job description, run its tasks, emit a report.

A job file is a JSON document: one ring (field, variables, weights, ideal),
named module definitions (each may reference previously defined names), a
task list, and optional bounds.  Task failures from violated mathematical
hypotheses are captured as task-level errors, never crashes; malformed input
raises :class:`JobError`.  Structured reports are canonical JSON: identical
job and tool version give byte-identical output (timing is therefore kept
out of the structured format unless explicitly requested).
"""

import hashlib
import json
import random
import time

from . import __version__
from .grammar import ParseError, parse_polynomial
from .homalg import depth, dual, grade, tensor, tor_length, torsion_submodule, transpose
from .isomorphism import is_isomorphic
from .modules import (
    HypothesisError,
    PresentedModule,
    free_module,
    ideal_module,
    quotient_module,
)
from .quotient import NotDomainError, define_ring
from .resolution import betti_numbers, complexity_estimate, syzygy_module
from .tate import complete_resolution, tate_ext_length, tate_tor_length
from .theta import (
    COUNTEREXAMPLE_CANDIDATE,
    ThetaContext,
    depth_zero_check,
    even_dim_torsion_check,
    hw_check,
    random_short_exact_sequence,
    rigidity_probe,
    theta,
    theta_additivity_check,
)

DEFAULT_BOUNDS = {"degree": 20, "window": 10, "twist_window": 12,
                  "iso_budget": 500}


class JobError(Exception):
    """Invalid job input: parse errors, undefined names, bad bounds."""


def canonical_text(spec: dict) -> str:
    return json.dumps(spec, indent=2, sort_keys=True) + "\n"


def job_hash(spec: dict) -> str:
    blob = json.dumps(spec, sort_keys=True, separators=(",", ":"))
    return "sha256:" + hashlib.sha256(blob.encode()).hexdigest()


def load_jobspec(text: str) -> dict:
    try:
        spec = json.loads(text)
    except json.JSONDecodeError as e:
        raise JobError(f"job file is not valid JSON: {e}") from e
    if not isinstance(spec, dict):
        raise JobError("job file must contain a JSON object")
    for key in ("field", "variables", "weights", "tasks"):
        if key not in spec:
            raise JobError(f"job file is missing the {key!r} field")
    bounds = dict(DEFAULT_BOUNDS)
    bounds.update(spec.get("bounds", {}))
    for k, v in bounds.items():
        if not isinstance(v, int) or v <= 0:
            raise JobError(f"bound {k!r} must be a positive integer, got {v!r}")
    return spec


def _parse(ring_amb, text, where):
    try:
        return parse_polynomial(ring_amb, text)
    except ParseError as e:
        raise JobError(f"in {where}: {e}") from e


def build_ring(spec: dict):
    try:
        ring = define_ring(spec["variables"], spec["weights"], spec["field"],
                           [], domain=bool(spec.get("domain", False)))
    except (ValueError, NotDomainError) as e:
        raise JobError(f"invalid ring data: {e}") from e
    amb = ring.ambient
    gens = [_parse(amb, s, f"ideal generator {i}")
            for i, s in enumerate(spec.get("ideal", []))]
    try:
        return define_ring(spec["variables"], spec["weights"], spec["field"],
                           gens, domain=bool(spec.get("domain", False)))
    except (ValueError, NotDomainError) as e:
        raise JobError(f"invalid ring data: {e}") from e


def build_modules(spec: dict, ring) -> dict:
    amb = ring.ambient
    defs = spec.get("modules", {})
    out = {}

    def get(name):
        if name not in out:
            raise JobError(f"module {name!r} referenced before definition")
        return out[name]

    for name, d in defs.items():
        kind = d.get("type")
        where = f"module {name!r}"
        try:
            if kind == "quotient":
                mod = quotient_module(
                    ring, [_parse(amb, s, where) for s in d["ideal"]])
            elif kind == "ideal":
                mod = ideal_module(
                    ring, [_parse(amb, s, where) for s in d["gens"]])
            elif kind == "free":
                mod = free_module(ring, tuple(d.get("twists", (0,))))
            elif kind == "presentation":
                twists = tuple(d["twists"])
                rows = [[_parse(amb, s, where) for s in row]
                        for row in d["matrix"]]
                if any(len(r) != len(rows[0]) for r in rows):
                    raise JobError(f"{where}: ragged matrix")
                ncols = len(rows[0]) if rows else 0
                cols = []
                for c in range(ncols):
                    col = {}
                    for j, row in enumerate(rows):
                        for m, coef in row[c].items():
                            col[(j, m)] = coef
                    cols.append(col)
                mod = PresentedModule(ring, twists, cols)
            elif kind == "syzygy":
                mod = syzygy_module(get(d["of"]), int(d["n"]),
                                    trim=bool(d.get("trim", False)))
            elif kind == "dual":
                mod = dual(get(d["of"]))
            elif kind == "transpose":
                mod = transpose(get(d["of"]))
            elif kind == "tensor":
                mod = tensor(get(d["left"]), get(d["right"]))
            elif kind == "direct_sum":
                mod = get(d["left"]).direct_sum(get(d["right"]))
            elif kind == "twist":
                mod = get(d["of"]).twist(int(d["s"]))
            else:
                raise JobError(f"{where}: unknown module type {kind!r}")
        except KeyError as e:
            raise JobError(f"{where}: missing field {e}") from e
        except (HypothesisError, ValueError) as e:
            if isinstance(e, JobError):
                raise
            raise JobError(f"{where}: {e}") from e
        out[name] = mod
    return out


# ---------------------------------------------------------------------------
# task handlers


def _fmt_len(v):
    return "infinite" if v is None else v


def _iso_payload(res, ring):
    amb = ring.ambient
    out = {"verdict": res.verdict, "twist": res.twist}
    if res.invariant:
        out["distinguishing_invariant"] = res.invariant
    if res.certificate is not None:
        cert = res.certificate
        matrix = []
        for k in range(cert.target.ngens):
            row = []
            for col in cert.cols:
                entry = {m: c for (kk, m), c in col.items() if kk == k}
                row.append(amb.format_poly(entry))
            matrix.append(row)
        out["certificate_matrix"] = matrix
    out.update({k: v for k, v in res.detail.items()})
    return out


class TaskContext:
    def __init__(self, ring, modules, bounds, seed):
        self.ring = ring
        self.modules = modules
        self.bounds = bounds
        self.seed = seed

    def module(self, name):
        if name not in self.modules:
            raise JobError(f"undefined module name {name!r}")
        return self.modules[name]


def _task_tor_lengths(ctx, t):
    m = ctx.module(t["module"])
    n = ctx.module(t["against"])
    lo, hi = int(t.get("lo", 0)), int(t.get("hi", ctx.bounds["window"]))
    cap = lo + ctx.bounds["window"] * 4
    out = {"lengths": {str(i): _fmt_len(tor_length(m, n, i))
                       for i in range(lo, min(hi, cap) + 1)}}
    if hi > cap:
        out["truncated"] = True
        out["truncated_at"] = cap
    return out


def _task_theta(ctx, t):
    m = ctx.module(t["module"])
    n = ctx.module(t["against"])
    res = theta(m, n)
    return res.to_dict()


def _task_theta_additivity(ctx, t):
    m = ctx.module(t["module"])
    y = ctx.module(t["on"])
    count = int(t.get("count", 5))
    rng = random.Random(t.get("seed", ctx.seed))
    tctx = ThetaContext(m)
    runs = []
    for _ in range(count):
        f, g = random_short_exact_sequence(y, rng)
        runs.append(theta_additivity_check(m, f, g, tctx))
    return {"runs": runs, "all_additive": all(r["additive"] for r in runs)}


def _task_hw_check(ctx, t):
    m = ctx.module(t["module"])
    return hw_check(m, window=ctx.bounds["window"])


def _task_even_dim(ctx, t):
    return even_dim_torsion_check(ctx.module(t["module"]))


def _task_depth_zero(ctx, t):
    return depth_zero_check(ctx.module(t["module"]),
                            window=min(ctx.bounds["window"], 8))


def _task_rigidity(ctx, t):
    m = ctx.module(t["module"])
    n = ctx.module(t["against"])
    return rigidity_probe(m, n, window=int(t.get("window",
                                                 ctx.bounds["window"])))


def _task_tate(ctx, t, kind):
    m = ctx.module(t["module"])
    n = ctx.module(t["against"])
    q = t.get("q")
    window = int(t.get("window", min(ctx.bounds["window"], 6)))
    cr = complete_resolution(m, q, window=window)
    lo, hi = int(t.get("lo", -window)), int(t.get("hi", window))
    fn = tate_tor_length if kind == "tor" else tate_ext_length
    return {"lengths": {str(i): _fmt_len(fn(cr, n, i))
                        for i in range(lo, hi + 1)},
            "period": cr.q, "provenance": cr.provenance,
            "total_acyclicity_window": window}


def _task_periodicity(ctx, t):
    m = ctx.module(t["module"])
    q = t.get("q")
    window = int(t.get("window", min(ctx.bounds["window"], 6)))
    cr = complete_resolution(m, q, window=window)
    return {"period": cr.q, "base_index": cr.base, "twist_per_period": cr.shift,
            "provenance": cr.provenance, "verified_window": window,
            "ci_dim": "unknown"}


def _task_is_isomorphic(ctx, t):
    m = ctx.module(t["module"])
    n = ctx.module(t["other"])
    res = is_isomorphic(m, n, allow_twist=bool(t.get("allow_twist", True)),
                        sample_budget=ctx.bounds["iso_budget"],
                        seed=ctx.seed)
    return _iso_payload(res, ctx.ring)


def _task_betti(ctx, t):
    m = ctx.module(t["module"])
    window = int(t.get("window", ctx.bounds["window"]))
    return complexity_estimate(m, max(window, 4))


def _task_invariants(ctx, t):
    m = ctx.module(t["module"])
    out = {"generators": m.ngens,
           "generator_degrees": list(m.twists),
           "relations": len(m.rels),
           "krull_dim": m.krull_dim(),
           "length": _fmt_len(m.length())}
    if not m.is_zero():
        out["depth"] = depth(m)
        out["grade"] = grade(m)
    if ctx.ring.domain:
        out["rank"] = m.rank()
        out["nonfree_locus_dim"] = m.nonfree_locus_dim()
    return out


def _task_hilbert(ctx, t):
    m = ctx.module(t["module"])
    lo = int(t.get("lo", 0))
    hi = int(t.get("hi", ctx.bounds["degree"]))
    return {"lo": lo, "hi": hi,
            "values": m.hilbert_function(lo, hi)}


def _task_torsion_length(ctx, t):
    m = ctx.module(t["module"])
    ts, _ = torsion_submodule(m, t.get("method", "auto"))
    return {"torsion_length": _fmt_len(ts.length()),
            "method": t.get("method", "auto")}


def _task_freeness(ctx, t):
    m = ctx.module(t["module"])
    ln = tor_length(m, transpose(m), 1)
    return {"tor1_with_transpose_length": _fmt_len(ln),
            "free": ln == 0}


TASKS = {
    "tor_lengths": _task_tor_lengths,
    "theta": _task_theta,
    "theta_additivity": _task_theta_additivity,
    "hw_check": _task_hw_check,
    "even_dim_torsion_check": _task_even_dim,
    "depth_zero_check": _task_depth_zero,
    "rigidity_probe": _task_rigidity,
    "tate_tor": lambda ctx, t: _task_tate(ctx, t, "tor"),
    "tate_ext": lambda ctx, t: _task_tate(ctx, t, "ext"),
    "periodicity": _task_periodicity,
    "is_isomorphic": _task_is_isomorphic,
    "betti": _task_betti,
    "invariants": _task_invariants,
    "hilbert": _task_hilbert,
    "torsion_length": _task_torsion_length,
    "freeness_via_transpose": _task_freeness,
}

_ANOMALY_VERDICTS = {COUNTEREXAMPLE_CANDIDATE, "ANOMALY"}


class Report:
    def __init__(self, spec, ring, tasks, bounds, seconds):
        self.spec = spec
        self.ring = ring
        self.tasks = tasks
        self.bounds = bounds
        self.seconds = seconds
        self.input_hash = job_hash(spec)
        self.version = __version__
        self.anomaly = any(_is_anomalous(t) for t in tasks)

    def to_dict(self, include_timing=False):
        out = {
            "tool": "hwprobe",
            "version": self.version,
            "input_hash": self.input_hash,
            "bounds": self.bounds,
            "ring": {
                "field": self.ring.ambient.p,
                "variables": list(self.ring.ambient.names),
                "weights": list(self.ring.ambient.weights),
                "ideal": [self.ring.ambient.format_poly(g)
                          for g in self.ring.ideal_gens],
                "dim": self.ring.dim,
                "hypersurface": self.ring.is_hypersurface,
                "asserted_domain": self.ring.domain,
            },
            "tasks": self.tasks,
            "anomaly_detected": self.anomaly,
        }
        if include_timing:
            out["timing_seconds"] = round(self.seconds, 3)
        return out


def _is_anomalous(task_entry):
    result = task_entry.get("result") or {}
    if result.get("verdict") in _ANOMALY_VERDICTS:
        return True
    if result.get("refutation_grade_anomaly"):
        return True
    if task_entry.get("op") == "theta_additivity" and \
            result.get("all_additive") is False:
        return True
    return False


def run_job(spec: dict, seed=0) -> Report:
    started = time.time()
    spec = dict(spec)
    bounds = dict(DEFAULT_BOUNDS)
    bounds.update(spec.get("bounds", {}))
    ring = build_ring(spec)
    modules = build_modules(spec, ring)
    ctx = TaskContext(ring, modules, bounds, seed)
    entries = []
    for t in spec.get("tasks", []):
        op = t.get("op")
        handler = TASKS.get(op)
        if handler is None:
            raise JobError(f"unknown task op {op!r}; available: "
                           + ", ".join(sorted(TASKS)))
        entry = {"op": op, "args": {k: v for k, v in t.items() if k != "op"}}
        try:
            entry["result"] = handler(ctx, t)
            entry["status"] = "ok"
        except JobError:
            raise
        except (HypothesisError, ArithmeticError, ValueError,
                ZeroDivisionError) as e:
            entry["status"] = "error"
            entry["error"] = f"{type(e).__name__}: {e}"
        entries.append(entry)
    return Report(spec, ring, entries, bounds, time.time() - started)


# ---------------------------------------------------------------------------
# emission


def emit(report: Report, format="structured", include_timing=False) -> bytes:
    """Serialize a report: canonical JSON, or a human-readable text table."""
    if format == "structured":
        doc = report.to_dict(include_timing=include_timing)
        return (json.dumps(doc, indent=2, sort_keys=True) + "\n").encode()
    if format != "text":
        raise ValueError(f"unknown report format {format!r}")
    lines = []
    d = report.to_dict(include_timing=include_timing)
    ring = d["ring"]
    lines.append(f"hwprobe {d['version']}  ({d['input_hash'][:19]}...)")
    ideal = ", ".join(ring["ideal"]) or "0"
    lines.append(f"ring: F{ring['field']}[{', '.join(ring['variables'])}] / "
                 f"({ideal})   weights {ring['weights']}  dim {ring['dim']}"
                 + ("  hypersurface" if ring["hypersurface"] else "")
                 + ("  domain(asserted)" if ring["asserted_domain"] else ""))
    lines.append(f"bounds: {d['bounds']}")
    for i, t in enumerate(d["tasks"]):
        lines.append("")
        lines.append(f"[{i}] {t['op']} {t['args']}")
        if t["status"] != "ok":
            lines.append(f"    ERROR: {t['error']}")
            continue
        for k, v in sorted(t["result"].items()):
            lines.append(f"    {k}: {v}")
    lines.append("")
    lines.append("anomaly detected" if d["anomaly_detected"] else "no anomalies")
    if include_timing:
        lines.append(f"elapsed: {d['timing_seconds']} s")
    return ("\n".join(lines) + "\n").encode()
