"""In-process bulk-synchronous execution of vertex programs.

The engine follows the Pregel contract: at superstep 0 every vertex runs
``init``; at each later superstep every vertex that is active or received
mail runs ``step`` with the messages sent to it during the previous
superstep. A vertex leaves the active set by voting to halt and rejoins it
the moment a message arrives. The run terminates at the first superstep in
which no vertex is invoked, which is recorded as a final all-zero row, and
message counts are conserved end to end (every sent message is delivered
exactly once, one superstep later).

Vertices are hash-partitioned (vertex id modulo partition count) and the
partitions of one superstep may execute on concurrent worker lanes. Lanes
own their partitions exclusively and all cross-partition traffic merges at
the superstep barrier in partition order, so results never depend on the
worker or partition count.
"""

from __future__ import annotations

import time
from abc import ABC, abstractmethod
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, NamedTuple, Sequence

from .graph import Graph
from .report import RunStats, SuperstepStats


class Message(NamedTuple):
    """One value crossing a superstep boundary."""

    source: int
    estimate: int


class EngineError(Exception):
    pass


class ContractViolationError(EngineError):
    """A vertex program broke the messaging contract."""


class NonterminationError(EngineError):
    """No fixed point within the superstep cap; carries the partial run."""

    def __init__(self, message: str, values: list, stats: RunStats) -> None:
        super().__init__(message)
        self.values = values
        self.stats = stats


@dataclass(frozen=True)
class Aggregator:
    """Associative-commutative reducer with an identity element."""

    identity: int
    combine: Callable[[int, int], int]


INT_SUM = Aggregator(0, lambda a, b: a + b)
INT_MAX = Aggregator(0, max)  # identity 0 suits non-negative contributions


@dataclass(frozen=True)
class EngineConfig:
    """Run parameters. ``max_supersteps`` caps computation supersteps and
    defaults to 10 * n + 10; the free termination-detection superstep is not
    counted against it."""

    workers: int = 1
    partitions: int = 1
    max_supersteps: int | None = None

    def __post_init__(self) -> None:
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        if self.partitions < 1:
            raise ValueError("partitions must be >= 1")
        if self.max_supersteps is not None and self.max_supersteps < 1:
            raise ValueError("max_supersteps must be >= 1")


def partition_of(v: int, partitions: int) -> int:
    """Stable owning partition of vertex v."""
    return v % partitions


class VertexContext:
    """Engine-provided view of one vertex during one superstep."""

    __slots__ = (
        "_adjacency",
        "_values",
        "_active",
        "_out",
        "_partial",
        "_schema",
        "_partitions",
        "superstep",
        "sent",
        "_vertex",
    )

    def __init__(self, adjacency, values, active, out, partial, schema, partitions, superstep):
        self._adjacency = adjacency
        self._values = values
        self._active = active
        self._out = out
        self._partial = partial
        self._schema = schema
        self._partitions = partitions
        self.superstep = superstep
        self.sent = 0
        self._vertex = -1

    def _bind(self, v: int) -> None:
        self._vertex = v

    @property
    def vertex(self) -> int:
        return self._vertex

    @property
    def degree(self) -> int:
        return len(self._adjacency[self._vertex])

    @property
    def neighbors(self) -> tuple[int, ...]:
        return self._adjacency[self._vertex]

    @property
    def value(self):
        return self._values[self._vertex]

    def set_value(self, value) -> None:
        self._values[self._vertex] = value

    def send(self, target: int, message: Message) -> None:
        """Send to one direct neighbor; anything else violates the contract."""
        if target not in self._adjacency[self._vertex]:
            raise ContractViolationError(
                f"vertex {self._vertex} attempted to send to non-neighbor {target}"
            )
        self._out[target % self._partitions].append((target, message))
        self.sent += 1

    def send_to_all_neighbors(self, message: Message) -> None:
        out = self._out
        partitions = self._partitions
        neighbors = self._adjacency[self._vertex]
        for u in neighbors:
            out[u % partitions].append((u, message))
        self.sent += len(neighbors)

    def vote_to_halt(self) -> None:
        self._active[self._vertex] = 0

    def aggregate(self, name: str, contribution: int) -> None:
        partial = self._partial
        if name not in partial:
            raise EngineError(f"undeclared aggregator {name!r}")
        partial[name] = self._schema[name].combine(partial[name], contribution)


class VertexProgram(ABC):
    """Per-vertex computation driven by the engine.

    ``init`` runs once per vertex at superstep 0; ``step`` runs at every
    later superstep for each vertex that is active or has mail. Programs may
    only message direct neighbors, and any state beyond the vertex value must
    be owned per vertex.
    """

    def aggregators(self) -> dict[str, Aggregator]:
        return {}

    def prepare(self, graph: Graph) -> None:
        """Hook invoked once before superstep 0."""

    @abstractmethod
    def init(self, ctx: VertexContext) -> None: ...

    @abstractmethod
    def step(self, ctx: VertexContext, inbox: Sequence[Message]) -> None: ...


def deliver(outboxes: Iterable[Sequence[tuple[int, Message]]], inboxes: list[list[Message]], active: bytearray) -> int:
    """Append every (destination, message) to its inbox, reactivating the
    recipient; returns the number of messages delivered."""
    delivered = 0
    for box in outboxes:
        for dest, message in box:
            inboxes[dest].append(message)
            active[dest] = 1
            delivered += 1
    return delivered


def aggregate_superstep(schema: Mapping[str, Aggregator], partials: Iterable[Mapping[str, int]]) -> dict[str, int]:
    """Merge partition-local aggregator partials into global values."""
    merged = {name: agg.identity for name, agg in schema.items()}
    for partial in partials:
        if partial.keys() != merged.keys():
            raise EngineError(
                f"aggregator schema mismatch: {sorted(partial)} vs {sorted(merged)}"
            )
        for name, value in partial.items():
            merged[name] = schema[name].combine(merged[name], value)
    return merged


def run(
    graph: Graph,
    program: VertexProgram,
    config: EngineConfig | None = None,
    on_superstep: Callable[[int, list], None] | None = None,
) -> tuple[list, RunStats]:
    """Execute ``program`` over ``graph`` to a fixed point.

    Returns (final vertex values, raw run counters). ``on_superstep`` is
    called after each superstep barrier with (superstep, values snapshot).
    Raises NonterminationError when the computation-superstep cap is
    exceeded; the exception carries the partial values and counters.
    """
    cfg = config or EngineConfig()
    n = graph.n
    cap = cfg.max_supersteps if cfg.max_supersteps is not None else 10 * n + 10
    partitions = cfg.partitions
    adjacency = graph.adjacency

    values: list = [None] * n
    active = bytearray(b"\x01" * n)
    inboxes: list[list[Message]] = [[] for _ in range(n)]
    schema = dict(program.aggregators())
    running = {name: agg.identity for name, agg in schema.items()}
    rows: list[SuperstepStats] = []
    total_sent = 0
    total_delivered = 0

    def make_stats(wall_ms: float) -> RunStats:
        return RunStats(
            per_superstep=rows,
            total_sent=total_sent,
            total_delivered=total_delivered,
            aggregates=dict(running),
            wall_ms=wall_ms,
            workers=cfg.workers,
            partitions=partitions,
        )

    def process_partition(p: int) -> tuple[list[list[tuple[int, Message]]], dict[str, int], int, int]:
        out: list[list[tuple[int, Message]]] = [[] for _ in range(partitions)]
        partial = {name: agg.identity for name, agg in schema.items()}
        ctx = VertexContext(adjacency, values, active, out, partial, schema, partitions, superstep)
        updated = 0
        if superstep == 0:
            for v in invokees[p]:
                ctx._bind(v)
                program.init(ctx)
        else:
            for v in invokees[p]:
                inbox = inboxes[v]
                if inbox:
                    inboxes[v] = []
                ctx._bind(v)
                old = values[v]
                program.step(ctx, inbox)
                if values[v] != old:
                    updated += 1
        return out, partial, ctx.sent, updated

    program.prepare(graph)
    lanes = min(cfg.workers, partitions)
    pool = ThreadPoolExecutor(max_workers=lanes) if lanes > 1 else None
    started = time.perf_counter()
    try:
        superstep = 0
        while True:
            if superstep == 0:
                invokees: list[Sequence[int]] = [range(p, n, partitions) for p in range(partitions)]
                invoked = n
            else:
                invokees = [
                    [v for v in range(p, n, partitions) if active[v]] for p in range(partitions)
                ]
                invoked = sum(len(part) for part in invokees)
            if invoked and superstep >= cap:
                wall_ms = (time.perf_counter() - started) * 1000.0
                raise NonterminationError(
                    f"no fixed point within {cap} supersteps", list(values), make_stats(wall_ms)
                )

            if pool is not None:
                results = list(pool.map(process_partition, range(partitions)))
            else:
                results = [process_partition(p) for p in range(partitions)]

            sent = sum(r[2] for r in results)
            updated = sum(r[3] for r in results)
            rows.append(
                SuperstepStats(
                    superstep=superstep,
                    active_vertices=invoked,
                    messages_sent=sent,
                    vertices_updated=updated,
                    pct_updated=updated / n if n else 0.0,
                )
            )
            total_sent += sent
            superstep_totals = aggregate_superstep(schema, [r[1] for r in results])
            for name, value in superstep_totals.items():
                running[name] = schema[name].combine(running[name], value)
            total_delivered += deliver(
                (r[0][q] for r in results for q in range(partitions)), inboxes, active
            )
            if on_superstep is not None:
                on_superstep(superstep, list(values))
            if invoked == 0:
                break
            superstep += 1
    finally:
        if pool is not None:
            pool.shutdown(wait=True)

    if total_sent != total_delivered:
        raise EngineError(f"conservation broken: sent {total_sent}, delivered {total_delivered}")
    wall_ms = (time.perf_counter() - started) * 1000.0
    return values, make_stats(wall_ms)
