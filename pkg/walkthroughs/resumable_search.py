"""
A resumable search for graphs where every inequality is strict
==============================================================

"""

import json
import tempfile
from pathlib import Path

from critsets import SearchConfig, run_search
from critsets.search import read_witnesses

work = Path(tempfile.mkdtemp())
config = SearchConfig(
    source="gnp",
    params=(9, 0.5),
    seed=7,
    count=500,
    tags=frozenset({"ALL_STRICT"}),
    out=str(work / "witnesses.jsonl"),
    checkpoint=str(work / "checkpoint.json"),
    checkpoint_every=50,
)

# stop part way, as if the process had been killed
partial = run_search(config, stop_after=180)
print("after interruption:", partial.processed, "processed")

# the same call picks up from the checkpoint
summary = run_search(config)
print(json.dumps(summary.to_json(), indent=2))

witnesses = read_witnesses(config.out)
smallest = min(witnesses, key=lambda w: (w.report.n, len(w.graph6), w.graph6))
r = smallest.report
print(f"example {smallest.graph6}: {r.lower} < {r.mid} < {r.upper} < {r.bound}")
