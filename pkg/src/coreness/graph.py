"""Edge-list ingestion and the normalized undirected graph built from it."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence, TextIO

EdgeList = list[tuple[int, int]]


class EdgeListParseError(ValueError):
    """Malformed edge-list input; ``lineno`` is 1-based."""

    def __init__(self, lineno: int, message: str) -> None:
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def parse_edge_list(source: str | Iterable[str]) -> EdgeList:
    """Read SNAP-style edge-list text into (u, v) pairs, preserving file order.

    Blank lines and lines starting with ``#`` are skipped. A data line carries
    exactly two whitespace-separated non-negative integers (tabs or spaces).
    Duplicates, self-loops and reverse orientations are kept verbatim here;
    :func:`normalize` decides what to do with them.
    """
    lines = source.splitlines() if isinstance(source, str) else source
    edges: EdgeList = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise EdgeListParseError(lineno, f"expected 2 fields, found {len(fields)}")
        try:
            u = int(fields[0])
            v = int(fields[1])
        except ValueError:
            raise EdgeListParseError(lineno, f"non-integer vertex id: {line!r}") from None
        if u < 0 or v < 0:
            raise EdgeListParseError(lineno, f"negative vertex id: {line!r}")
        edges.append((u, v))
    return edges


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph over dense internal ids 0..n-1.

    ``adjacency[v]`` is the sorted tuple of v's neighbors. ``id_map[v]`` is
    the original id vertex v carried in the input edge list. Every vertex has
    degree >= 1 when the graph came out of :func:`normalize`; graphs built by
    hand may contain isolated vertices.
    """

    adjacency: tuple[tuple[int, ...], ...]
    id_map: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.adjacency)

    @cached_property
    def num_edges(self) -> int:
        """Count of unique undirected edges."""
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])


def normalize(edges: EdgeList) -> Graph:
    """Build a simple undirected graph from raw pairs.

    Self-loops are dropped, duplicate pairs and reverse orientations collapse
    into one undirected edge, and vertices are relabeled densely in order of
    first appearance among the surviving edges. Vertices that only ever occur
    in self-loops get no id, so the result never contains isolated vertices.
    """
    index: dict[int, int] = {}
    id_map: list[int] = []
    neighbor_sets: list[set[int]] = []
    for u, v in edges:
        if u == v:
            continue
        iu = index.get(u)
        if iu is None:
            iu = index[u] = len(id_map)
            id_map.append(u)
            neighbor_sets.append(set())
        iv = index.get(v)
        if iv is None:
            iv = index[v] = len(id_map)
            id_map.append(v)
            neighbor_sets.append(set())
        neighbor_sets[iu].add(iv)
        neighbor_sets[iv].add(iu)
    adjacency = tuple(tuple(sorted(nbrs)) for nbrs in neighbor_sets)
    return Graph(adjacency=adjacency, id_map=tuple(id_map))


def validate(g: Graph) -> Graph:
    """Full structural check; returns ``g`` unchanged or raises ValueError."""
    n = g.n
    if len(g.id_map) != n:
        raise ValueError("id_map length does not match vertex count")
    if len(set(g.id_map)) != n:
        raise ValueError("duplicate original ids")
    for v, nbrs in enumerate(g.adjacency):
        prev = -1
        for u in nbrs:
            if not 0 <= u < n:
                raise ValueError(f"neighbor {u} of vertex {v} out of range")
            if u == v:
                raise ValueError(f"self-loop at vertex {v}")
            if u <= prev:
                raise ValueError(f"adjacency of vertex {v} not sorted and distinct")
            prev = u
    neighbor_sets = [set(nbrs) for nbrs in g.adjacency]
    for v, nbrs in enumerate(g.adjacency):
        for u in nbrs:
            if v not in neighbor_sets[u]:
                raise ValueError(f"asymmetric edge ({v}, {u})")
    return g


def write_cores(cores: Sequence[int], g: Graph, sink: TextIO) -> None:
    """Write one ``original_id<TAB>core`` line per vertex, sorted by original id."""
    if len(cores) != g.n:
        raise ValueError(f"expected {g.n} core values, got {len(cores)}")
    for original, core in sorted(zip(g.id_map, cores)):
        sink.write(f"{original}\t{core}\n")
