"""Command line entry point: ``critsets {compute,verify,search,dot}``.

Exit codes: 0 success, 1 usage or parse error, 2 a budget ran out (the
partial result is still printed), 3 a proven inequality or lemma failed.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Iterator, Sequence

from .errors import GraphParseError, InvariantViolation, PreconditionError, SearchError
from .graph import Graph, encode_graph6, parse_edge_list, parse_graph6, to_dot
from .theorems import TAGS, Budgets, analyze, verify_constructive_lemmas
from .search import SearchConfig, run_search

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_BUDGET = 2
EXIT_VIOLATION = 3

SHOWABLE = ("core", "corona", "ker", "diadem", "nucleus")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _add_input(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--g6", help="one graph in graph6 format")
    src.add_argument("--edges", metavar="PATH", help="edge-list file: 'n' then 'u v' lines")
    src.add_argument("--g6-file", metavar="PATH", help="graph6 file, one graph per line")


def _add_budgets(p: argparse.ArgumentParser) -> None:
    p.add_argument("--mis-budget", type=_positive, default=10**6)
    p.add_argument("--critical-budget", type=_positive, default=10**6)
    p.add_argument("--cycle-budget", type=_positive, default=10**6)


def _budgets(args) -> Budgets:
    return Budgets(args.mis_budget, args.critical_budget, args.cycle_budget)


def _graphs(args) -> Iterator[Graph]:
    if args.g6 is not None:
        yield parse_graph6(args.g6)
    elif args.edges is not None:
        with open(args.edges, encoding="utf-8") as fh:
            yield parse_edge_list(fh.read())
    else:
        with open(args.g6_file, encoding="ascii") as fh:
            for lineno, line in enumerate(fh, start=1):
                if line.strip():
                    try:
                        yield parse_graph6(line)
                    except GraphParseError as exc:
                        raise GraphParseError(str(exc), lineno) from exc


def _emit(obj: dict) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def _table(obj: dict, prefix: str = "") -> list[tuple[str, str]]:
    rows = []
    for key, value in obj.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            rows.extend(_table(value, name + "."))
        else:
            rows.append((name, "-" if value is None else json.dumps(value)))
    return rows


def _print_table(obj: dict) -> None:
    rows = _table(obj)
    width = max(len(k) for k, _ in rows)
    for key, value in rows:
        print(f"{key.ljust(width)}  {value}")
    print()


def cmd_compute(args) -> int:
    status = EXIT_OK
    for g in _graphs(args):
        result = analyze(g, _budgets(args), count_mis=True)
        payload = {"graph6": encode_graph6(g), "n": g.n, "m": g.m, **result.to_json()}
        if args.pretty:
            _print_table(payload)
        else:
            _emit(payload)
        if result.chain.partial or result.omega.budget_exceeded:
            status = EXIT_BUDGET
    return status


def cmd_verify(args) -> int:
    status = EXIT_OK
    budgets = _budgets(args)
    for g in _graphs(args):
        g6 = encode_graph6(g)
        lemmas = verify_constructive_lemmas(g, args.sample, args.seed, budgets)
        chain = analyze(g, budgets).chain
        _emit({"graph6": g6, "lemmas": lemmas.to_json(), "chain": chain.to_json()})
        if lemmas.failures:
            return EXIT_VIOLATION
        if lemmas.partial or chain.partial:
            status = EXIT_BUDGET
    return status


def _split(text: str, kinds: Sequence[type], flag: str) -> tuple:
    parts = text.split(",")
    if len(parts) != len(kinds):
        raise UsageError(f"{flag} expects {len(kinds)} comma-separated values, got {text!r}")
    try:
        return tuple(k(p) for k, p in zip(kinds, parts))
    except ValueError:
        raise UsageError(f"cannot parse {flag} {text!r}")


def cmd_search(args) -> int:
    tags = frozenset(t for t in (args.tags or "").split(",") if t)
    if args.gnp:
        source, params = "gnp", _split(args.gnp, (int, float), "--gnp")
    elif args.bipartite:
        source, params = "bipartite", _split(args.bipartite, (int, int, float), "--bipartite")
    else:
        source, params = "g6file", ()
    config = SearchConfig(
        source=source,
        out=args.out,
        params=params,
        path=args.g6_file,
        seed=args.seed,
        count=args.count,
        budgets=_budgets(args),
        n_min=args.n_min,
        n_max=args.n_max,
        tags=tags,
        checkpoint=args.checkpoint,
        checkpoint_every=args.checkpoint_every,
        workers=args.workers,
    )
    summary = run_search(config)
    _emit(summary.to_json())
    return EXIT_BUDGET if summary.partial_reports else EXIT_OK


def cmd_dot(args) -> int:
    show = [s for s in (args.show or "").split(",") if s]
    unknown = set(show) - set(SHOWABLE)
    if unknown:
        raise UsageError(f"--show accepts {', '.join(SHOWABLE)}; got {sorted(unknown)}")
    status = EXIT_OK
    for g in _graphs(args):
        sets = []
        if show:
            result = analyze(g, _budgets(args))
            available = {
                "core": result.omega.core,
                "corona": result.omega.corona,
                "ker": result.critical.ker,
                "diadem": result.critical.diadem,
                "nucleus": result.critical.nucleus,
            }
            for name in show:
                if available[name] is None:
                    status = EXIT_BUDGET
                    print(f"{name} unavailable: critical-set budget exhausted", file=sys.stderr)
                else:
                    sets.append((available[name], name))
        sys.stdout.write(to_dot(g, sets))
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="critsets", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", help="all invariants and the chain as JSON")
    _add_input(p)
    _add_budgets(p)
    p.add_argument("--pretty", action="store_true", help="aligned table instead of JSON")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="lemma sweep plus chain checks")
    _add_input(p)
    _add_budgets(p)
    p.add_argument("--sample", type=_positive, default=64)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="batch chain reports over a corpus")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--gnp", metavar="N,P")
    src.add_argument("--bipartite", metavar="N1,N2,P")
    src.add_argument("--g6-file", metavar="PATH")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--tags", help=f"comma-separated subset of {','.join(TAGS)}")
    p.add_argument("--out", required=True, help="JSONL witness file")
    p.add_argument("--checkpoint", help="checkpoint JSON for resumable runs")
    p.add_argument("--checkpoint-every", type=_positive, default=100)
    p.add_argument("--workers", type=_positive, default=1)
    p.add_argument("--n-min", type=int)
    p.add_argument("--n-max", type=int)
    _add_budgets(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("dot", help="Graphviz DOT with highlighted vertex sets")
    _add_input(p)
    _add_budgets(p)
    p.add_argument("--show", help=f"comma-separated subset of {','.join(SHOWABLE)}")
    p.set_defaults(func=cmd_dot)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvariantViolation as exc:
        _emit({"violation": str(exc), "witness": exc.witness})
        return EXIT_VIOLATION
    except (GraphParseError, PreconditionError, UsageError) as exc:
        print(f"critsets: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, SearchError) as exc:
        print(f"critsets: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
