"""Batch jobs: declarative JSON in, deterministic structured reports out.

The same machinery backs the command line (``hwprobe run job.json``,
``hwprobe catalog cusp-hw --run``, ``hwprobe selftest``).
"""

import json

from hwprobe.catalog import catalog, catalog_names
from hwprobe.jobs import canonical_text, emit, run_job

print("catalog entries:", ", ".join(catalog_names()))
print()

spec = {
    "field": 7,
    "variables": ["x", "y"],
    "weights": [3, 2],
    "ideal": ["x^2 - y^3"],
    "domain": True,
    "modules": {
        "m": {"type": "ideal", "gens": ["x", "y"]},
        "k": {"type": "quotient", "ideal": ["x", "y"]},
    },
    "tasks": [
        {"op": "invariants", "module": "m"},
        {"op": "hw_check", "module": "m"},
        {"op": "rigidity_probe", "module": "m", "against": "k", "window": 8},
    ],
}

print("job document:")
print(canonical_text(spec))

report = run_job(spec, seed=0)
print("human-readable report:")
print(emit(report, format="text").decode())

doc = json.loads(emit(report, format="structured"))
print("structured report keys:", sorted(doc))
print("determinism: identical jobs yield byte-identical structured reports;")
print("wall-clock timing is only included on request.")
print()
print("a built-in reproduction job:")
print(emit(run_job(catalog("a1-threefold-theta"), seed=0),
           format="text").decode())
