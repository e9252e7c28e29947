"""Shared builders and independent oracles used across the test suite."""

from __future__ import annotations

import random

import pytest

from coreness.graph import EdgeList, Graph, normalize

INF = float("inf")


# ---------------------------------------------------------------------------
# independent oracles (deliberately simple; used to freeze expected values)


def brute_upper_bound(value, estimates) -> int:
    """O(d^2) reference: largest i <= value with at least i entries >= i,
    else min(value, 1)."""
    for i in range(value, 0, -1):
        if sum(1 for e in estimates if e >= i) >= i:
            return i
    return min(value, 1)


def cores_by_iterated_deletion(g: Graph) -> list[int]:
    """Definition-level coreness: for each k, repeatedly delete vertices of
    degree < k; survivors have core >= k. Much slower than peeling."""
    n = g.n
    core = [0] * n
    max_degree = max((g.degree(v) for v in range(n)), default=0)
    for k in range(1, max_degree + 1):
        alive = [True] * n
        deg = [g.degree(v) for v in range(n)]
        changed = True
        while changed:
            changed = False
            for v in range(n):
                if alive[v] and deg[v] < k:
                    alive[v] = False
                    changed = True
                    for u in g.adjacency[v]:
                        if alive[u]:
                            deg[u] -= 1
        for v in range(n):
            if alive[v]:
                core[v] = k
    return core


def adjacency_by_original(g: Graph) -> dict[int, set[int]]:
    return {
        g.id_map[v]: {g.id_map[u] for u in nbrs} for v, nbrs in enumerate(g.adjacency)
    }


# ---------------------------------------------------------------------------
# edge-list builders (original-id space, raw lists suitable for files too)


def clique_edges(k: int, offset: int = 0) -> EdgeList:
    return [(offset + a, offset + b) for a in range(k) for b in range(a + 1, k)]


def star_edges(leaves: int, center: int = 0) -> EdgeList:
    return [(center, center + i) for i in range(1, leaves + 1)]


def path_edges(n: int) -> EdgeList:
    return [(i, i + 1) for i in range(n - 1)]


def cycle_edges(n: int) -> EdgeList:
    return [(i, (i + 1) % n) for i in range(n)]


def barbell_edges(k: int, bridge: int) -> EdgeList:
    """Two k-cliques joined by a path with ``bridge`` interior vertices."""
    left = clique_edges(k, offset=0)
    right = clique_edges(k, offset=k + bridge)
    chain = [k - 1] + [k + i for i in range(bridge)] + [k + bridge]
    return left + right + [(chain[i], chain[i + 1]) for i in range(len(chain) - 1)]


def bridged_triangles_edges() -> EdgeList:
    return [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)]


def er_edges(n: int, p: float, rng: random.Random) -> EdgeList:
    return [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]


def edges_to_text(edges: EdgeList, comment: str | None = None) -> str:
    lines = [] if comment is None else [f"# {comment}"]
    lines += [f"{u}\t{v}" for u, v in edges]
    return "\n".join(lines) + "\n"


STRUCTURED = [
    *[(f"clique_k{k}", clique_edges(k)) for k in range(2, 11)],
    ("star_3", star_edges(3)),
    ("star_10", star_edges(10)),
    ("star_40", star_edges(40)),
    ("path_2", path_edges(2)),
    ("path_10", path_edges(10)),
    ("path_100", path_edges(100)),
    ("cycle_3", cycle_edges(3)),
    ("cycle_10", cycle_edges(10)),
    ("cycle_100", cycle_edges(100)),
    ("barbell_5_2", barbell_edges(5, 2)),
    ("barbell_8_0", barbell_edges(8, 0)),
    ("bridged_triangles", bridged_triangles_edges()),
    # self-loops and duplicates; vertex 9 survives only as a self-loop and
    # must vanish entirely after normalization
    ("dedup_selfloops", [(9, 9), (0, 1), (1, 0), (0, 1), (2, 2), (2, 3), (9, 9)]),
    ("dedup_two_components", [(0, 0), (1, 2), (2, 1), (5, 6), (6, 7), (7, 5), (5, 5)]),
    ("empty", []),
]


def build_er_corpus() -> list[tuple[str, EdgeList]]:
    """Deterministic corpus of 220 random graphs: n up to 500, the larger
    edge probabilities paired with smaller n to keep the whole suite fast."""
    rng = random.Random(0xC04E)
    strata = [(0.005, 500), (0.02, 500), (0.1, 300), (0.5, 150)]
    graphs = []
    for p, n_max in strata:
        for i in range(55):
            n = rng.randint(1, n_max)
            graphs.append((f"er_p{p}_n{n}_{i}", er_edges(n, p, rng)))
    return graphs


@pytest.fixture(scope="session")
def corpus() -> list[tuple[str, EdgeList]]:
    return build_er_corpus() + STRUCTURED


@pytest.fixture(scope="session")
def corpus_graphs(corpus) -> list[tuple[str, Graph]]:
    return [(name, normalize(edges)) for name, edges in corpus]
