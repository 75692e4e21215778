import json
from collections import Counter

import numpy as np
import pytest

from critsets import (
    Budgets,
    GraphParseError,
    PreconditionError,
    SearchConfig,
    SearchError,
    chain_report,
    complete_bipartite_graph,
    complete_graph,
    empty_graph,
    generate_bipartite,
    generate_gnp,
    parse_graph6,
    run_search,
)
from critsets import search
from critsets.search import read_witnesses

GNP_8_05_42 = [
    (0, 2), (0, 5), (1, 3), (1, 4), (1, 5), (2, 4), (2, 5), (2, 7), (3, 7), (5, 6), (5, 7), (6, 7)
]
BIP_4_4_04_7 = [(0, 7), (1, 4), (1, 6), (2, 6), (2, 7), (3, 4)]


class TestGenerators:
    def test_extremes(self):
        assert generate_gnp(5, 0.0, 9) == empty_graph(5)
        assert generate_gnp(5, 1.0, 9) == complete_graph(5)
        assert generate_bipartite(2, 2, 1.0, 3) == complete_bipartite_graph(2, 2)
        assert generate_bipartite(3, 0, 0.5, 1) == empty_graph(3)

    def test_golden_gnp(self):
        assert generate_gnp(8, 0.5, 42).sorted_edges() == GNP_8_05_42

    def test_golden_bipartite(self):
        assert generate_bipartite(4, 4, 0.4, 7).sorted_edges() == BIP_4_4_04_7

    def test_golden_from_raw_stream(self):
        # one uniform per pair in lexicographic order, (raw >> 11) * 2**-53
        bitgen = np.random.PCG64(42)
        raw = bitgen.random_raw(28)
        pairs = [(i, j) for i in range(8) for j in range(i + 1, 8)]
        edges = [e for e, r in zip(pairs, raw) if (int(r) >> 11) * 2.0**-53 < 0.5]
        assert edges == GNP_8_05_42

    @pytest.mark.parametrize("p", [-0.1, 1.5, float("nan")])
    def test_bad_p(self, p):
        with pytest.raises(PreconditionError):
            generate_gnp(4, p, 0)
        with pytest.raises(PreconditionError):
            generate_bipartite(2, 2, p, 0)

    def test_bipartite_parts(self):
        g = generate_bipartite(5, 6, 0.7, 11)
        assert all(u < 5 <= v for u, v in g.sorted_edges())


def lines(path):
    return path.read_text().splitlines()


def cfg(tmp_path, **kw):
    base = dict(source="gnp", out=str(tmp_path / "w.jsonl"), params=(7, 0.5), seed=5, count=60)
    base.update(kw)
    return SearchConfig(**base)


class TestConfig:
    def test_unknown_source(self, tmp_path):
        with pytest.raises(PreconditionError):
            cfg(tmp_path, source="nope")

    def test_unknown_tag(self, tmp_path):
        with pytest.raises(PreconditionError):
            cfg(tmp_path, tags=frozenset({"STRICT"}))

    def test_bad_params(self, tmp_path):
        with pytest.raises(PreconditionError):
            cfg(tmp_path, params=(7,))
        with pytest.raises(PreconditionError):
            cfg(tmp_path, params=(7, 2.0))
        with pytest.raises(PreconditionError):
            cfg(tmp_path, source="g6file")

    def test_fingerprint_depends_on_seed(self, tmp_path):
        assert cfg(tmp_path).fingerprint() != cfg(tmp_path, seed=6).fingerprint()
        assert cfg(tmp_path).fingerprint() == cfg(tmp_path, checkpoint_every=7).fingerprint()


class TestRun:
    def test_three_graph_file(self, tmp_path):
        src = tmp_path / "three.g6"
        src.write_text("@\nBw\nCh\n")
        s = run_search(SearchConfig("g6file", str(tmp_path / "w.jsonl"), path=str(src)))
        assert (s.processed, s.witnesses, s.skipped, s.complete) == (3, 3, 0, True)
        ws = read_witnesses(str(tmp_path / "w.jsonl"))
        assert [w.graph6 for w in ws] == ["@", "Bw", "Ch"]
        for w in ws:
            assert w.report == chain_report(parse_graph6(w.graph6))

    def test_empty_file(self, tmp_path):
        src = tmp_path / "empty.g6"
        src.write_text("")
        s = run_search(SearchConfig("g6file", str(tmp_path / "w.jsonl"), path=str(src)))
        assert s.processed == 0 and s.complete
        assert (tmp_path / "w.jsonl").read_text() == ""

    def test_missing_file(self, tmp_path):
        with pytest.raises(SearchError, match="missing.g6"):
            run_search(SearchConfig("g6file", str(tmp_path / "w.jsonl"), path=str(tmp_path / "missing.g6")))

    def test_bad_line_reports_line(self, tmp_path):
        src = tmp_path / "bad.g6"
        src.write_text("@\nB!\n")
        with pytest.raises(GraphParseError, match="line 2"):
            run_search(SearchConfig("g6file", str(tmp_path / "w.jsonl"), path=str(src)))

    def test_order_filter(self, tmp_path):
        src = tmp_path / "three.g6"
        src.write_text("@\nBw\nCh\n")
        s = run_search(SearchConfig("g6file", str(tmp_path / "w.jsonl"), path=str(src), n_min=2, n_max=3))
        assert (s.processed, s.skipped, s.witnesses) == (3, 2, 1)

    def test_tag_filter(self, tmp_path):
        s = run_search(cfg(tmp_path, tags=frozenset({"ALL_STRICT"})))
        ws = read_witnesses(str(tmp_path / "w.jsonl"))
        assert len(ws) == s.witnesses == s.tag_counts["ALL_STRICT"]
        assert all("ALL_STRICT" in w.tags for w in ws)

    def test_partial_reports_counted(self, tmp_path):
        s = run_search(cfg(tmp_path, params=(7, 0.9), budgets=Budgets(cycles=2), count=10))
        assert s.partial_reports == 10
        assert all(w.report.partial for w in read_witnesses(str(tmp_path / "w.jsonl")))

    def test_determinism(self, tmp_path):
        run_search(cfg(tmp_path))
        first = lines(tmp_path / "w.jsonl")
        run_search(cfg(tmp_path))
        assert lines(tmp_path / "w.jsonl") == first and len(first) == 60

    def test_workers_same_multiset(self, tmp_path):
        a = run_search(cfg(tmp_path, out=str(tmp_path / "a.jsonl"), checkpoint_every=7))
        b = run_search(cfg(tmp_path, out=str(tmp_path / "b.jsonl"), checkpoint_every=7, workers=2))
        assert Counter(lines(tmp_path / "a.jsonl")) == Counter(lines(tmp_path / "b.jsonl"))
        assert a.tag_counts == b.tag_counts


class TestResume:
    def test_stop_and_resume(self, tmp_path):
        full = run_search(cfg(tmp_path, out=str(tmp_path / "full.jsonl")))
        c = cfg(tmp_path, checkpoint=str(tmp_path / "ck.json"), checkpoint_every=7)
        s = run_search(c, stop_after=25)
        assert s.processed == 25 and not s.complete
        s = run_search(c, stop_after=20)
        assert s.processed == 45 and not s.complete
        s = run_search(c)
        assert s.complete and s.processed == 60
        assert lines(tmp_path / "w.jsonl") == lines(tmp_path / "full.jsonl")
        assert s.tag_counts == full.tag_counts and s.witnesses == full.witnesses

    def test_stop_at_exact_end_marks_complete(self, tmp_path):
        c = cfg(tmp_path, checkpoint=str(tmp_path / "ck.json"), count=10)
        assert run_search(c, stop_after=10).complete
        again = run_search(c)
        assert again.complete and again.processed == 10
        assert len(lines(tmp_path / "w.jsonl")) == 10

    def test_crash_resume(self, tmp_path, monkeypatch):
        run_search(cfg(tmp_path, out=str(tmp_path / "full.jsonl")))
        c = cfg(tmp_path, checkpoint=str(tmp_path / "ck.json"), checkpoint_every=10)
        real = search._evaluate
        calls = {"n": 0}

        def dying(item):
            calls["n"] += 1
            if calls["n"] == 37:
                raise KeyboardInterrupt
            return real(item)

        monkeypatch.setattr(search, "_evaluate", dying)
        with pytest.raises(KeyboardInterrupt):
            run_search(c)
        state = json.loads((tmp_path / "ck.json").read_text())
        assert state["processed"] == 30
        # lines of the unfinished batch may have reached the file
        assert len(lines(tmp_path / "w.jsonl")) >= 30
        monkeypatch.setattr(search, "_evaluate", real)
        s = run_search(c)
        assert s.complete and s.processed == 60
        assert lines(tmp_path / "w.jsonl") == lines(tmp_path / "full.jsonl")

    def test_garbage_after_checkpoint_is_cut(self, tmp_path):
        c = cfg(tmp_path, checkpoint=str(tmp_path / "ck.json"), count=20, checkpoint_every=5)
        run_search(c, stop_after=10)
        with open(tmp_path / "w.jsonl", "a") as fh:
            fh.write('{"half a line')
        run_search(c)
        assert len(read_witnesses(str(tmp_path / "w.jsonl"))) == 20

    def test_mismatch_refused(self, tmp_path):
        run_search(cfg(tmp_path, checkpoint=str(tmp_path / "ck.json")), stop_after=5)
        with pytest.raises(SearchError, match="different configuration"):
            run_search(cfg(tmp_path, seed=99, checkpoint=str(tmp_path / "ck.json")))

    def test_corrupt_checkpoint(self, tmp_path):
        (tmp_path / "ck.json").write_text("{not json")
        with pytest.raises(SearchError, match="ck.json"):
            run_search(cfg(tmp_path, checkpoint=str(tmp_path / "ck.json")))

    def test_file_source_resume(self, tmp_path):
        src = tmp_path / "g.g6"
        src.write_text("@\nBw\nCh\nDhc\nD~{\n")
        base = dict(source="g6file", path=str(src))
        full = run_search(SearchConfig(out=str(tmp_path / "full.jsonl"), **base))
        c = SearchConfig(out=str(tmp_path / "w.jsonl"), checkpoint=str(tmp_path / "ck.json"), checkpoint_every=2, **base)
        run_search(c, stop_after=3)
        s = run_search(c)
        assert s.processed == full.processed == 5
        assert lines(tmp_path / "w.jsonl") == lines(tmp_path / "full.jsonl")


@pytest.mark.slow
def test_all_strict_witnesses_reverify(tmp_path):
    c = SearchConfig(
        "gnp", str(tmp_path / "w.jsonl"), params=(9, 0.5), seed=2024, count=1000,
        tags=frozenset({"ALL_STRICT"}),
    )
    s = run_search(c)
    ws = read_witnesses(str(tmp_path / "w.jsonl"))
    assert s.processed == 1000 and len(ws) == s.witnesses == s.tag_counts["ALL_STRICT"]
    for w in ws:
        assert w.report == chain_report(parse_graph6(w.graph6))
