"""Distributed core decomposition as a vertex program.

Every vertex maintains a monotonically decreasing upper bound on its own
core number, starting from its degree. It remembers the best estimate heard
from each neighbor (unheard neighbors count as +infinity, so the bound is
always computed over a full degree-sized multiset) and re-derives its bound
whenever fresh estimates arrive. Bounds only ever tighten, every tightening
is broadcast, and the fixed point of this descent is exactly the core
number of each vertex.
"""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

from .engine import (
    INT_MAX,
    INT_SUM,
    Aggregator,
    EngineConfig,
    Message,
    VertexContext,
    VertexProgram,
    aggregate_superstep,
    run,
)
from .graph import Graph
from .report import RunReport, RunStats, collect

UNKNOWN = float("inf")

# reducers merged over the final values once the run has terminated
FINAL_AGGREGATORS = {"k_max": INT_MAX, "k_sum": INT_SUM}


def compute_upper_bound(value: int, estimates: Iterable[int | float]) -> int:
    """Largest i in [1, value] such that at least i estimates are >= i.

    Estimates above ``value`` (including the +infinity placeholder for
    neighbors never heard from) are clipped to ``value``: a neighbor can
    support this vertex at level i only up to the vertex's own bound. Returns
    1 when no i >= 2 qualifies and 0 only for ``value`` 0 (isolated vertex).
    """
    if value <= 0:
        return 0
    counts = [0] * (value + 1)
    for estimate in estimates:
        j = min(estimate, value)
        if j > 0:
            counts[j] += 1
    cumulative = 0
    for i in range(value, 1, -1):
        cumulative += counts[i]
        if cumulative >= i:
            return i
    return 1


class KCoreProgram(VertexProgram):
    """Estimate-descent core decomposition."""

    def __init__(self) -> None:
        self._known: list[dict[int, int]] = []

    def aggregators(self) -> dict[str, Aggregator]:
        return {"updates": INT_SUM}

    def prepare(self, graph: Graph) -> None:
        self._known = [{} for _ in range(graph.n)]

    def init(self, ctx: VertexContext) -> None:
        ctx.set_value(ctx.degree)
        ctx.send_to_all_neighbors(Message(ctx.vertex, ctx.degree))

    def step(self, ctx: VertexContext, inbox: Sequence[Message]) -> None:
        known = self._known[ctx.vertex]
        for source, estimate in inbox:
            if estimate < known.get(source, UNKNOWN):
                known[source] = estimate
        value = ctx.value
        bound = compute_upper_bound(value, [known.get(u, UNKNOWN) for u in ctx.neighbors])
        if bound < value:
            value = bound
            ctx.set_value(bound)
            ctx.send_to_all_neighbors(Message(ctx.vertex, bound))
            ctx.aggregate("updates", 1)
        # Stay active while any estimate received this superstep undercuts the
        # current value; reactivation on receipt makes halting safe regardless.
        if all(value <= estimate for _, estimate in inbox):
            ctx.vote_to_halt()


def run_decomposition(
    g: Graph,
    config: EngineConfig | None = None,
    on_superstep: Callable[[int, list], None] | None = None,
) -> tuple[list[int], RunStats]:
    """Engine run plus the end-of-run merge of the final-value reducers."""
    values, stats = run(g, KCoreProgram(), config, on_superstep=on_superstep)
    cores = [int(v) for v in values]
    partitions = stats.partitions
    partials = []
    for p in range(partitions):
        partial = {"k_max": 0, "k_sum": 0}
        for v in range(p, g.n, partitions):
            core = cores[v]
            if core > partial["k_max"]:
                partial["k_max"] = core
            partial["k_sum"] += core
        partials.append(partial)
    stats.aggregates.update(aggregate_superstep(FINAL_AGGREGATORS, partials))
    return cores, stats


def decompose(
    g: Graph,
    config: EngineConfig | None = None,
    dataset: str = "",
    on_superstep: Callable[[int, list], None] | None = None,
) -> tuple[list[int], RunReport]:
    """Run the decomposition to its fixed point and assemble the run report."""
    cores, stats = run_decomposition(g, config, on_superstep=on_superstep)
    return cores, collect(stats, cores, g, dataset=dataset)
