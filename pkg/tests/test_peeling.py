import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coreness.graph import normalize
from coreness.peeling import peel, summarize

from conftest import (
    clique_edges,
    cores_by_iterated_deletion,
    cycle_edges,
    er_edges,
    path_edges,
    star_edges,
)


def test_k5_with_pendant():
    g = normalize(clique_edges(5) + [(0, 5)])
    cores = dict(zip(g.id_map, peel(g)))
    assert cores == {0: 4, 1: 4, 2: 4, 3: 4, 4: 4, 5: 1}


@pytest.mark.parametrize(
    "edges, expected",
    [
        (clique_edges(2), 1),
        (clique_edges(7), 6),
        (star_edges(12), 1),
        (path_edges(9), 1),
        (cycle_edges(11), 2),
    ],
)
def test_uniform_families(edges, expected):
    g = normalize(edges)
    assert peel(g) == [expected] * g.n


def test_empty_graph():
    assert peel(normalize([])) == []


def test_matches_iterated_deletion_on_random_graphs():
    rng = random.Random(17)
    for _ in range(15):
        n = rng.randint(1, 40)
        g = normalize(er_edges(n, rng.choice([0.05, 0.15, 0.4]), rng))
        assert peel(g) == cores_by_iterated_deletion(g)


def test_deterministic():
    rng = random.Random(3)
    g = normalize(er_edges(60, 0.1, rng))
    assert peel(g) == peel(g)


@given(st.lists(st.tuples(st.integers(0, 25), st.integers(0, 25)), max_size=80))
@settings(max_examples=100)
def test_relabeling_invariance(edges):
    g = normalize(edges)
    relabeled = normalize([(u * 7 + 1000, v * 7 + 1000) for u, v in edges])
    by_orig = dict(zip(g.id_map, peel(g)))
    by_orig_relabeled = {
        (orig - 1000) // 7: core for orig, core in zip(relabeled.id_map, peel(relabeled))
    }
    assert by_orig == by_orig_relabeled


@given(st.lists(st.tuples(st.integers(0, 25), st.integers(0, 25)), max_size=80))
@settings(max_examples=100)
def test_bounds(edges):
    g = normalize(edges)
    cores = peel(g)
    for v, core in enumerate(cores):
        assert 1 <= core <= g.degree(v)


class TestSummarize:
    def test_triangle(self):
        assert summarize([2, 2, 2]) == (2, 2.0)

    def test_k5_with_pendant(self):
        assert summarize([4, 4, 4, 4, 4, 1]) == (4, 3.5)

    def test_rounding(self):
        assert summarize([1, 1, 1, 5, 0]) == (5, 1.6)
        assert summarize([1, 1, 2]) == (2, 1.333)

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            summarize([])
