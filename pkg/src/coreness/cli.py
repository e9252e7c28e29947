"""Command-line interface: run, oracle, verify, bench.

Exit codes: 0 success, 1 parse error, 2 nontermination, 3 I/O error,
4 verification mismatch. stdout stays silent except for the one-line
verify verdict; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import csv
import sys
from pathlib import Path

from .engine import EngineConfig, NonterminationError
from .graph import EdgeListParseError, Graph, normalize, parse_edge_list, write_cores
from .kcore import decompose
from .peeling import peel
from .report import BENCH_COLUMNS, emit_json


def _load_graph(path: str) -> Graph:
    with open(path, encoding="utf-8") as handle:
        return normalize(parse_edge_list(handle))


def _engine_config(args) -> EngineConfig:
    partitions = args.partitions if args.partitions is not None else args.workers
    return EngineConfig(
        workers=args.workers,
        partitions=partitions,
        max_supersteps=args.max_supersteps,
    )


def cmd_run(args) -> int:
    g = _load_graph(args.input)
    cores, report = decompose(g, _engine_config(args), dataset=Path(args.input).stem)
    with open(args.output, "w", encoding="utf-8") as sink:
        write_cores(cores, g, sink)
    if args.report is not None:
        with open(args.report, "w", encoding="utf-8") as sink:
            sink.write(emit_json(report) + "\n")
    return 0


def cmd_oracle(args) -> int:
    g = _load_graph(args.input)
    with open(args.output, "w", encoding="utf-8") as sink:
        write_cores(peel(g), g, sink)
    return 0


def cmd_verify(args) -> int:
    g = _load_graph(args.input)
    config = EngineConfig(workers=args.workers, partitions=args.workers)
    engine_cores, _ = decompose(g, config, dataset=Path(args.input).stem)
    oracle_cores = peel(g)
    if engine_cores == oracle_cores:
        print(f"OK n={g.n} kmax={max(engine_cores, default=0)}")
        return 0
    diffs = [v for v in range(g.n) if engine_cores[v] != oracle_cores[v]]
    for v in diffs[:10]:
        print(
            f"mismatch at vertex {g.id_map[v]}: engine={engine_cores[v]} oracle={oracle_cores[v]}",
            file=sys.stderr,
        )
    print(f"{len(diffs)} of {g.n} vertices differ", file=sys.stderr)
    return 4


def cmd_bench(args) -> int:
    workers_list = [int(w) for w in args.workers_list.split(",") if w]
    if not workers_list or any(w < 1 for w in workers_list):
        raise ValueError(f"invalid workers list: {args.workers_list!r}")
    with open(args.out, "w", encoding="utf-8", newline="") as sink:
        writer = csv.writer(sink, lineterminator="\n")
        writer.writerow(BENCH_COLUMNS)
        sink.flush()
        for path in args.inputs:
            g = _load_graph(path)
            dataset = Path(path).stem
            for workers in workers_list:
                config = EngineConfig(workers=workers, partitions=workers)
                for repeat in range(1, args.repeat + 1):
                    _, report = decompose(g, config, dataset=dataset)
                    writer.writerow(
                        [
                            dataset,
                            workers,
                            workers,
                            repeat,
                            report.wall_ms,
                            report.supersteps,
                            report.total_messages,
                        ]
                    )
                    # keep completed rows on disk even if a later run dies
                    sink.flush()
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="coreness", description="k-core decomposition toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="decompose with the vertex-program engine")
    p_run.add_argument("--input", required=True, help="edge-list file")
    p_run.add_argument("--output", required=True, help="core assignment output file")
    p_run.add_argument("--report", default=None, help="write the JSON run report here")
    p_run.add_argument("--workers", type=int, default=1)
    p_run.add_argument("--partitions", type=int, default=None, help="defaults to --workers")
    p_run.add_argument("--max-supersteps", type=int, default=None)
    p_run.set_defaults(func=cmd_run)

    p_oracle = sub.add_parser("oracle", help="decompose with the sequential peeler")
    p_oracle.add_argument("--input", required=True)
    p_oracle.add_argument("--output", required=True)
    p_oracle.set_defaults(func=cmd_oracle)

    p_verify = sub.add_parser("verify", help="compare engine output against the peeler")
    p_verify.add_argument("--input", required=True)
    p_verify.add_argument("--workers", type=int, default=1)
    p_verify.set_defaults(func=cmd_verify)

    p_bench = sub.add_parser("bench", help="benchmark engine runs into a CSV")
    p_bench.add_argument("--inputs", nargs="+", required=True)
    p_bench.add_argument("--workers-list", default="1", help="comma-separated, e.g. 1,2,4")
    p_bench.add_argument("--repeat", type=int, default=3)
    p_bench.add_argument("--out", required=True)
    p_bench.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except EdgeListParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    except NonterminationError as exc:
        print(f"did not terminate: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
