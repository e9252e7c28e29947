"""Run statistics, the report schema, and its JSON/CSV serializations.

Counting conventions used throughout:

* ``supersteps`` counts every superstep the engine started, including
  superstep 0 (initialization) and the final superstep in which no vertex was
  invoked and termination was detected. A triangle therefore reports 3
  supersteps: init, one no-change step, termination detection.
* ``vertices_updated`` counts vertices that lowered their value during a
  superstep. Superstep 0's initialization never counts as an update.
* ``pct_updated`` and ``avg_updates_per_vertex`` divide by the total vertex
  count n, not by the number of active vertices.
* Floats stored in reports are clamped to 6 significant digits, so emitted
  JSON parses back to the exact stored values.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field
from typing import Sequence

from .graph import Graph
from .peeling import summarize

BENCH_COLUMNS = ["dataset", "workers", "partitions", "repeat", "wall_ms", "supersteps", "total_messages"]
SUPERSTEP_COLUMNS = ["superstep", "active_vertices", "messages_sent", "vertices_updated", "pct_updated"]


class IntegrityError(RuntimeError):
    """Engine counters disagree with each other; reports are never patched up."""


@dataclass(frozen=True)
class SuperstepStats:
    superstep: int
    active_vertices: int
    messages_sent: int
    vertices_updated: int
    pct_updated: float


@dataclass
class RunStats:
    """Raw per-run counters as recorded by the engine."""

    per_superstep: list[SuperstepStats]
    total_sent: int
    total_delivered: int
    aggregates: dict[str, int]
    wall_ms: float
    workers: int
    partitions: int

    @property
    def supersteps(self) -> int:
        return len(self.per_superstep)


@dataclass(frozen=True)
class RunReport:
    dataset: str
    n: int
    m: int
    supersteps: int
    total_messages: int
    avg_updates_per_vertex: float
    k_max: int
    k_avg: float
    wall_ms: float
    workers: int
    partitions: int
    per_superstep: list[SuperstepStats] = field(default_factory=list)


def _round6(x: float) -> float:
    return float(f"{x:.6g}")


def collect(stats: RunStats, cores: Sequence[int], g: Graph, dataset: str = "") -> RunReport:
    """Assemble a report from engine counters, cross-checking them first.

    Any inconsistency (lost messages, a superstep-0 "update", an aggregator
    that disagrees with the engine's own counts) raises IntegrityError.
    """
    rows = stats.per_superstep
    if [r.superstep for r in rows] != list(range(len(rows))):
        raise IntegrityError("superstep indices are not consecutive from 0")
    total_messages = sum(r.messages_sent for r in rows)
    if total_messages != stats.total_sent:
        raise IntegrityError(
            f"per-superstep messages sum to {total_messages}, engine sent {stats.total_sent}"
        )
    if stats.total_sent != stats.total_delivered:
        raise IntegrityError(
            f"sent {stats.total_sent} messages but delivered {stats.total_delivered}"
        )
    if rows and rows[0].vertices_updated != 0:
        raise IntegrityError("superstep 0 reported updates; initialization is not an update")

    n = g.n
    if len(cores) != n:
        raise IntegrityError(f"{len(cores)} core values for {n} vertices")
    updates_total = sum(r.vertices_updated for r in rows[1:])
    if "updates" in stats.aggregates and stats.aggregates["updates"] != updates_total:
        raise IntegrityError(
            f"update aggregator {stats.aggregates['updates']} != engine count {updates_total}"
        )

    if n == 0:
        k_max, k_avg = 0, 0.0
    else:
        k_max, k_avg = summarize(cores)
    if "k_max" in stats.aggregates and stats.aggregates["k_max"] != k_max:
        raise IntegrityError(f"k_max aggregator {stats.aggregates['k_max']} != {k_max}")
    if "k_sum" in stats.aggregates and n and round(stats.aggregates["k_sum"] / n, 3) != k_avg:
        raise IntegrityError(f"k_sum aggregator {stats.aggregates['k_sum']} inconsistent with k_avg {k_avg}")

    normalized = [
        SuperstepStats(
            superstep=r.superstep,
            active_vertices=r.active_vertices,
            messages_sent=r.messages_sent,
            vertices_updated=r.vertices_updated,
            pct_updated=_round6(r.vertices_updated / n) if n else 0.0,
        )
        for r in rows
    ]
    return RunReport(
        dataset=dataset,
        n=n,
        m=g.num_edges,
        supersteps=len(rows),
        total_messages=total_messages,
        avg_updates_per_vertex=_round6(updates_total / n) if n else 0.0,
        k_max=k_max,
        k_avg=k_avg,
        wall_ms=_round6(stats.wall_ms),
        workers=stats.workers,
        partitions=stats.partitions,
        per_superstep=normalized,
    )


def _clamp_floats(obj):
    if isinstance(obj, float):
        return _round6(obj)
    if isinstance(obj, dict):
        return {k: _clamp_floats(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_clamp_floats(v) for v in obj]
    return obj


def emit_json(report: RunReport) -> str:
    """Serialize to a single JSON object; keys follow field declaration order."""
    return json.dumps(_clamp_floats(asdict(report)))


def parse_report(text: str) -> RunReport:
    """Inverse of :func:`emit_json`."""
    data = json.loads(text)
    rows = [SuperstepStats(**row) for row in data.pop("per_superstep")]
    return RunReport(per_superstep=rows, **data)


def emit_superstep_csv(report: RunReport) -> str:
    """One row per superstep under a fixed header; LF line endings."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SUPERSTEP_COLUMNS)
    for r in report.per_superstep:
        writer.writerow([r.superstep, r.active_vertices, r.messages_sent, r.vertices_updated, r.pct_updated])
    return buf.getvalue()


def emit_bench_csv(rows: Sequence[Sequence]) -> str:
    """Serialize benchmark rows (dataset, workers, partitions, repeat, wall_ms, supersteps, total_messages)."""
    if not rows:
        raise ValueError("benchmark output requires at least one row")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(BENCH_COLUMNS)
    for row in rows:
        if len(row) != len(BENCH_COLUMNS):
            raise ValueError(f"benchmark row has {len(row)} fields, expected {len(BENCH_COLUMNS)}")
        writer.writerow(list(row))
    return buf.getvalue()
