"""Vertex-centric bulk-synchronous k-core decomposition.

The package pairs a superstep engine running a distributed estimate-descent
vertex program with an exact sequential peeling baseline, plus reporting,
benchmarking and a command-line interface. The scikit-learn style estimators
in :mod:`coreness.estimators` are the most convenient entry point for
in-memory use.
"""

from .engine import (
    INT_MAX,
    INT_SUM,
    Aggregator,
    ContractViolationError,
    EngineConfig,
    EngineError,
    Message,
    NonterminationError,
    VertexContext,
    VertexProgram,
    aggregate_superstep,
    deliver,
    partition_of,
    run,
)
from .estimators import KCoreDecomposition, PeelingCoreDecomposition, as_graph
from .graph import (
    EdgeList,
    EdgeListParseError,
    Graph,
    normalize,
    parse_edge_list,
    validate,
    write_cores,
)
from .kcore import KCoreProgram, compute_upper_bound, decompose, run_decomposition
from .peeling import peel, summarize
from .report import (
    IntegrityError,
    RunReport,
    RunStats,
    SuperstepStats,
    collect,
    emit_bench_csv,
    emit_json,
    emit_superstep_csv,
    parse_report,
)

__version__ = "0.1.0"

__all__ = [
    "Aggregator",
    "ContractViolationError",
    "EdgeList",
    "EdgeListParseError",
    "EngineConfig",
    "EngineError",
    "Graph",
    "INT_MAX",
    "INT_SUM",
    "IntegrityError",
    "KCoreDecomposition",
    "KCoreProgram",
    "Message",
    "NonterminationError",
    "PeelingCoreDecomposition",
    "RunReport",
    "RunStats",
    "SuperstepStats",
    "VertexContext",
    "VertexProgram",
    "aggregate_superstep",
    "as_graph",
    "collect",
    "compute_upper_bound",
    "decompose",
    "deliver",
    "emit_bench_csv",
    "emit_json",
    "emit_superstep_csv",
    "normalize",
    "parse_edge_list",
    "parse_report",
    "partition_of",
    "peel",
    "run",
    "run_decomposition",
    "summarize",
    "validate",
    "write_cores",
]
