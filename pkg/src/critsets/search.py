"""Random graph corpora and a resumable batch harness over :func:`chain_report`.

Randomness comes from numpy's PCG64 bit generator (O'Neill's PCG-XSL-RR
128/64, reference implementation at pcg-random.org), seeded through
``numpy.random.SeedSequence``. Only raw 64-bit outputs are consumed; a
uniform draw is ``(raw >> 11) * 2**-53``, so results do not depend on
numpy's distribution code and are identical on every platform.
"""
from __future__ import annotations

import hashlib
import json
import math
import os
import tempfile
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, islice
from pathlib import Path
from typing import Iterator

import numpy as np

from .errors import GraphParseError, PreconditionError, SearchError
from .graph import Graph, encode_graph6, parse_graph6
from .theorems import TAGS, Budgets, ChainReport, chain_report

__all__ = [
    "generate_gnp",
    "generate_bipartite",
    "SearchConfig",
    "SearchSummary",
    "Witness",
    "run_search",
    "read_witnesses",
]

_SCALE = 1.0 / (1 << 53)


def _uniforms(bitgen: np.random.PCG64, k: int) -> np.ndarray:
    raw = bitgen.random_raw(k)
    return (raw >> np.uint64(11)).astype(np.float64) * _SCALE


def _check_p(p: float) -> float:
    p = float(p)
    if math.isnan(p) or not 0.0 <= p <= 1.0:
        raise PreconditionError(f"edge probability must lie in [0, 1], got {p}")
    return p


def _gnp(bitgen: np.random.PCG64, n: int, p: float) -> Graph:
    p = _check_p(p)
    pairs = list(combinations(range(n), 2))
    if not pairs:
        return Graph(n)
    draws = _uniforms(bitgen, len(pairs))
    return Graph(n, [e for e, u in zip(pairs, draws) if u < p])


def _bipartite(bitgen: np.random.PCG64, n1: int, n2: int, p: float) -> Graph:
    p = _check_p(p)
    pairs = [(i, n1 + j) for i in range(n1) for j in range(n2)]
    if not pairs:
        return Graph(n1 + n2)
    draws = _uniforms(bitgen, len(pairs))
    return Graph(n1 + n2, [e for e, u in zip(pairs, draws) if u < p])


def generate_gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p): pairs in lexicographic order, one draw each."""
    _check_p(p)
    return _gnp(np.random.PCG64(seed), n, p)


def generate_bipartite(n1: int, n2: int, p: float, seed: int) -> Graph:
    """Random bipartite graph with parts ``0..n1-1`` and ``n1..n1+n2-1``."""
    _check_p(p)
    return _bipartite(np.random.PCG64(seed), n1, n2, p)


@dataclass(frozen=True)
class SearchConfig:
    """What to search and where to write.

    ``source`` is ``"gnp"`` with ``params=(n, p)``, ``"bipartite"`` with
    ``params=(n1, n2, p)``, or ``"g6file"`` with ``path`` set. Generator
    sources produce ``count`` graphs from one PCG64 stream seeded by
    ``seed``. A witness is written for each graph whose equality tags meet
    ``tags`` (every graph when ``tags`` is empty).
    """

    source: str
    out: str
    params: tuple = ()
    path: str | None = None
    seed: int = 0
    count: int = 100
    budgets: Budgets = field(default_factory=Budgets)
    n_min: int | None = None
    n_max: int | None = None
    tags: frozenset[str] = frozenset()
    checkpoint: str | None = None
    checkpoint_every: int = 100
    workers: int = 1

    def __post_init__(self):
        if self.source not in ("gnp", "bipartite", "g6file"):
            raise PreconditionError(f"unknown source {self.source!r}")
        if self.source == "g6file" and not self.path:
            raise PreconditionError("g6file source needs a path")
        if self.source == "gnp":
            if len(self.params) != 2:
                raise PreconditionError("gnp needs params (n, p)")
            _check_p(self.params[1])
        if self.source == "bipartite":
            if len(self.params) != 3:
                raise PreconditionError("bipartite needs params (n1, n2, p)")
            _check_p(self.params[2])
        unknown = set(self.tags) - set(TAGS)
        if unknown:
            raise PreconditionError(f"unknown tags {sorted(unknown)}")
        if self.count < 0 or self.checkpoint_every < 1 or self.workers < 1:
            raise PreconditionError("count, checkpoint_every and workers must be positive")
        if not 0 <= self.seed < 2**64:
            raise PreconditionError("seed must be a 64-bit unsigned integer")

    def fingerprint(self) -> str:
        """Hash of everything that determines the witness set."""
        key = {
            "source": self.source,
            "params": list(self.params),
            "path": self.path,
            "seed": self.seed,
            "count": self.count,
            "budgets": [self.budgets.mis, self.budgets.critical, self.budgets.cycles],
            "n_min": self.n_min,
            "n_max": self.n_max,
            "tags": sorted(self.tags),
            "out": self.out,
        }
        return hashlib.sha256(json.dumps(key, sort_keys=True).encode()).hexdigest()


@dataclass(frozen=True)
class Witness:
    graph6: str
    report: ChainReport
    tags: frozenset[str]

    def to_json(self) -> dict:
        return {"graph6": self.graph6, "report": self.report.to_json(), "tags": sorted(self.tags)}

    @classmethod
    def from_json(cls, data: dict) -> Witness:
        return cls(data["graph6"], ChainReport.from_json(data["report"]), frozenset(data["tags"]))


@dataclass
class SearchSummary:
    processed: int = 0
    skipped: int = 0
    witnesses: int = 0
    partial_reports: int = 0
    tag_counts: dict[str, int] = field(default_factory=lambda: {t: 0 for t in TAGS})
    complete: bool = False
    config_hash: str = ""

    def to_json(self) -> dict:
        return {
            "processed": self.processed,
            "skipped": self.skipped,
            "witnesses": self.witnesses,
            "partial_reports": self.partial_reports,
            "tag_counts": dict(sorted(self.tag_counts.items())),
            "complete": self.complete,
            "config_hash": self.config_hash,
        }


def _evaluate(item: tuple[str, Budgets, int | None, int | None]) -> tuple[str, dict | None]:
    # top-level so worker processes can unpickle it
    g6, budgets, n_min, n_max = item
    g = parse_graph6(g6)
    if (n_min is not None and g.n < n_min) or (n_max is not None and g.n > n_max):
        return g6, None
    return g6, chain_report(g, budgets).to_json()


def _graph_file_lines(path: str, start: int) -> Iterator[str]:
    try:
        with open(path, encoding="ascii") as fh:
            k = 0
            for lineno, line in enumerate(fh, start=1):
                line = line.strip()
                if not line:
                    continue
                if k >= start:
                    try:
                        parse_graph6(line)
                    except GraphParseError as exc:
                        raise GraphParseError(f"{path}: {exc}", lineno) from exc
                    yield line
                k += 1
    except OSError as exc:
        raise SearchError(f"cannot read graph file {path}: {exc}") from exc


def _atomic_write_json(path: str, data: dict) -> None:
    target = Path(path)
    try:
        target.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=target.parent, prefix=target.name, suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            json.dump(data, fh, sort_keys=True)
            fh.flush()
            os.fsync(fh.fileno())
        os.replace(tmp, target)
    except OSError as exc:
        raise SearchError(f"cannot write checkpoint {path}: {exc}") from exc


def run_search(config: SearchConfig, stop_after: int | None = None) -> SearchSummary:
    """Stream graphs through :func:`chain_report` and append witnesses.

    With a checkpoint path, progress (graphs done, PRNG state, witness file
    offset and counters) is saved after every ``checkpoint_every`` graphs,
    and an existing checkpoint is resumed from; the witness file is cut
    back to the checkpointed offset first, so an interrupted run followed
    by a resume writes exactly what an uninterrupted run writes.
    ``stop_after`` processes at most that many graphs in this call.
    """
    summary = SearchSummary(config_hash=config.fingerprint())
    bitgen = np.random.PCG64(config.seed) if config.source != "g6file" else None
    offset = 0
    ckpt = Path(config.checkpoint) if config.checkpoint else None

    if ckpt is not None and ckpt.exists():
        try:
            state = json.loads(ckpt.read_text())
        except (OSError, ValueError) as exc:
            raise SearchError(f"cannot read checkpoint {ckpt}: {exc}") from exc
        if state.get("config_hash") != summary.config_hash:
            raise SearchError(f"checkpoint {ckpt} was written for a different configuration")
        for key in ("processed", "skipped", "witnesses", "partial_reports", "complete"):
            setattr(summary, key, state[key])
        summary.tag_counts = dict(state["tag_counts"])
        offset = state["out_offset"]
        if bitgen is not None:
            bitgen.state = state["rng_state"]

    try:
        with open(config.out, "ab") as fh:
            fh.truncate(offset)
    except OSError as exc:
        raise SearchError(f"cannot open witness file {config.out}: {exc}") from exc

    if summary.complete:
        return summary

    def source() -> Iterator[str]:
        if config.source == "g6file":
            yield from _graph_file_lines(config.path, summary.processed)
            return
        for _ in range(summary.processed, config.count):
            if config.source == "gnp":
                n, p = config.params
                yield encode_graph6(_gnp(bitgen, int(n), p))
            else:
                n1, n2, p = config.params
                yield encode_graph6(_bipartite(bitgen, int(n1), int(n2), p))

    pool = ProcessPoolExecutor(config.workers) if config.workers > 1 else None
    stream = source()
    remaining = stop_after
    try:
        with open(config.out, "a", encoding="ascii") as out:
            while True:
                size = config.checkpoint_every if remaining is None else min(config.checkpoint_every, remaining)
                batch = [(g6, config.budgets, config.n_min, config.n_max) for g6 in islice(stream, size)]
                if batch:
                    results = pool.map(_evaluate, batch) if pool else map(_evaluate, batch)
                    for g6, report in results:
                        _record(summary, config, out, g6, report)
                    out.flush()
                    os.fsync(out.fileno())
                    if remaining is not None:
                        remaining -= len(batch)
                if len(batch) < size:
                    summary.complete = True
                elif remaining == 0:
                    summary.complete = _source_finished(config, summary)
                if ckpt is not None:
                    _save(ckpt, summary, out.tell(), bitgen)
                if summary.complete or remaining == 0:
                    break
    except OSError as exc:
        raise SearchError(f"cannot append to witness file {config.out}: {exc}") from exc
    finally:
        if pool is not None:
            pool.shutdown()
    return summary


def _source_finished(config: SearchConfig, summary: SearchSummary) -> bool:
    if config.source == "g6file":
        return next(_graph_file_lines(config.path, summary.processed), None) is None
    return summary.processed >= config.count


def _record(summary: SearchSummary, config: SearchConfig, out, g6: str, report: dict | None) -> None:
    summary.processed += 1
    if report is None:
        summary.skipped += 1
        return
    tags = report["equality_tags"]
    if tags is None:
        summary.partial_reports += 1
        tags = []
    for t in tags:
        summary.tag_counts[t] += 1
    if config.tags and not (set(tags) & config.tags):
        return
    line = json.dumps({"graph6": g6, "report": report, "tags": sorted(tags)}, sort_keys=True)
    out.write(line + "\n")
    summary.witnesses += 1


def _save(path: Path, summary: SearchSummary, offset: int, bitgen) -> None:
    state = summary.to_json()
    state["out_offset"] = offset
    state["rng_state"] = bitgen.state if bitgen is not None else None
    _atomic_write_json(str(path), state)


def read_witnesses(path: str) -> list[Witness]:
    try:
        with open(path, encoding="ascii") as fh:
            return [Witness.from_json(json.loads(line)) for line in fh if line.strip()]
    except OSError as exc:
        raise SearchError(f"cannot read witness file {path}: {exc}") from exc
