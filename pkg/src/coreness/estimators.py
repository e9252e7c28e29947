"""Scikit-learn style front end for the core decomposition algorithms."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator

from .engine import EngineConfig
from .graph import Graph, normalize, validate
from .kcore import decompose
from .peeling import peel


def as_graph(X) -> Graph:
    """Coerce edge input into a normalized :class:`Graph`.

    Accepts an existing Graph (validated and returned as-is), an integer
    array of shape (m, 2), or any iterable of (u, v) pairs with non-negative
    integer ids. File paths are not accepted here; parse them with
    :func:`coreness.graph.parse_edge_list` first.
    """
    if isinstance(X, Graph):
        return validate(X)
    if isinstance(X, (str, bytes)):
        raise TypeError("edge input must be a Graph, array or iterable of pairs, not text")
    if isinstance(X, np.ndarray):
        if X.ndim != 2 or X.shape[1] != 2:
            raise ValueError(f"edge array must have shape (m, 2), got {X.shape}")
        if not np.issubdtype(X.dtype, np.integer):
            raise ValueError(f"vertex ids must be integers, got dtype {X.dtype}")
        if X.size and int(X.min()) < 0:
            raise ValueError("vertex ids must be non-negative")
        return normalize([(int(u), int(v)) for u, v in X.tolist()])
    edges = []
    for pair in X:
        try:
            u, v = pair
        except (TypeError, ValueError):
            raise ValueError(f"edge {pair!r} is not a (u, v) pair") from None
        if isinstance(u, bool) or isinstance(v, bool) or not isinstance(u, (int, np.integer)) or not isinstance(v, (int, np.integer)):
            raise ValueError(f"edge {pair!r} has non-integer vertex ids")
        if u < 0 or v < 0:
            raise ValueError(f"edge {pair!r} has a negative vertex id")
        edges.append((int(u), int(v)))
    return normalize(edges)


class _CoreEstimatorMixin:
    """Shared fitted-attribute plumbing."""

    def _finish_fit(self, g: Graph, cores) -> None:
        self.graph_ = g
        self.core_numbers_ = np.asarray(cores, dtype=np.int64)
        self.original_ids_ = np.asarray(g.id_map, dtype=np.int64)
        self.n_vertices_ = g.n

    def fit_predict(self, X, y=None):
        """Fit and return per-vertex core numbers in internal-id order
        (``original_ids_`` maps positions back to input ids)."""
        return self.fit(X).core_numbers_


class PeelingCoreDecomposition(_CoreEstimatorMixin, BaseEstimator):
    """Exact core numbers by sequential min-degree peeling.

    Attributes (after fit)
    ----------------------
    core_numbers_ : ndarray of shape (n_vertices,)
        Core number per vertex, indexed by internal id.
    original_ids_ : ndarray of shape (n_vertices,)
        Input vertex id for each internal id.
    graph_ : Graph
        The normalized input graph.
    n_vertices_ : int
    """

    def fit(self, X, y=None):
        g = as_graph(X)
        self._finish_fit(g, peel(g))
        return self


class KCoreDecomposition(_CoreEstimatorMixin, BaseEstimator):
    """Core numbers via the bulk-synchronous vertex program.

    Parameters
    ----------
    workers : int, default=1
        Concurrent execution lanes.
    partitions : int or None, default=None
        Hash partitions; defaults to ``workers``.
    max_supersteps : int or None, default=None
        Cap on computation supersteps (default 10 * n + 10).

    Attributes (after fit)
    ----------------------
    core_numbers_, original_ids_, graph_, n_vertices_ :
        As in :class:`PeelingCoreDecomposition`.
    report_ : RunReport
        Per-superstep counters and summary statistics of the run.
    """

    def __init__(self, workers: int = 1, partitions: int | None = None, max_supersteps: int | None = None):
        self.workers = workers
        self.partitions = partitions
        self.max_supersteps = max_supersteps

    def fit(self, X, y=None):
        g = as_graph(X)
        config = EngineConfig(
            workers=self.workers,
            partitions=self.partitions if self.partitions is not None else self.workers,
            max_supersteps=self.max_supersteps,
        )
        cores, report = decompose(g, config)
        self._finish_fit(g, cores)
        self.report_ = report
        return self
