"""Exact sequential core decomposition by minimum-degree peeling."""

from __future__ import annotations

from typing import Sequence

from .graph import Graph


def peel(g: Graph) -> list[int]:
    """Core number of every vertex via bucketed min-degree peeling.

    Runs in O(n + m): vertices are counting-sorted by degree (ties start in
    ascending id order), then removed lowest-degree first while neighbor
    degrees are decremented in place. Pure function of the graph, so the
    removal sequence is reproducible.
    """
    n = g.n
    if n == 0:
        return []
    adjacency = g.adjacency
    core = [len(nbrs) for nbrs in adjacency]
    max_degree = max(core)

    counts = [0] * (max_degree + 1)
    for d in core:
        counts[d] += 1
    bucket_start = [0] * (max_degree + 1)
    total = 0
    for d in range(max_degree + 1):
        bucket_start[d] = total
        total += counts[d]

    position = [0] * n
    ordered = [0] * n
    cursor = bucket_start[:]
    for v in range(n):
        position[v] = cursor[core[v]]
        ordered[position[v]] = v
        cursor[core[v]] += 1

    for i in range(n):
        v = ordered[i]
        for u in adjacency[v]:
            if core[u] > core[v]:
                du = core[u]
                pu = position[u]
                pw = bucket_start[du]
                w = ordered[pw]
                if u != w:
                    position[u] = pw
                    ordered[pu] = w
                    position[w] = pu
                    ordered[pw] = u
                bucket_start[du] += 1
                core[u] -= 1
    return core


def summarize(cores: Sequence[int]) -> tuple[int, float]:
    """Return (max core, mean core rounded to 3 decimals); raises on empty input."""
    if not cores:
        raise ValueError("cannot summarize an empty core result")
    return max(cores), round(sum(cores) / len(cores), 3)
