import random
from itertools import combinations

import pytest
from hypothesis import given, settings

import oracles
from conftest import graphs, sample_graphs
from pathfactors.graph import Graph, complete, cycle, is_connected, path, relabel, star
from pathfactors.kernels import pure
from pathfactors.matching import (
    has_perfect_matching,
    is_factor_critical,
    matching_number,
    maximum_matching,
)


def test_examples():
    assert len(maximum_matching(cycle(5))) == 2
    m = maximum_matching(complete(4))
    assert len(m) == 2 and has_perfect_matching(complete(4))
    assert len(maximum_matching(star(3))) == oracles.max_matching_size(star(3)) == 1


def test_perfect_matching_examples():
    assert has_perfect_matching(complete(2))
    assert not has_perfect_matching(path(3))
    assert has_perfect_matching(cycle(6)) and oracles.has_perfect_matching(cycle(6))
    assert has_perfect_matching(Graph(0))


def test_factor_critical_examples():
    assert is_factor_critical(complete(1))
    assert not is_factor_critical(complete(2))
    assert is_factor_critical(cycle(5)) and oracles.is_factor_critical(cycle(5))


def _all_maximum(g):
    best = oracles.max_matching_size(g)
    return [list(sub) for sub in combinations(g.edges, best) if oracles.is_matching(g, sub)]


@given(graphs(max_n=7))
@settings(max_examples=150, deadline=None)
def test_lexicographically_smallest(g):
    got = maximum_matching(g)
    assert oracles.is_matching(g, got)
    candidates = _all_maximum(g)
    assert got == min(candidates) if candidates else got == []


@pytest.mark.parametrize("seed", range(3))
def test_size_matches_brute_force(seed):
    for g in sample_graphs(60, 1, 8, seed):
        assert matching_number(g) == oracles.max_matching_size(g)


def test_factor_critical_agrees_with_brute_force():
    for g in sample_graphs(200, 1, 7, 11):
        fc = is_factor_critical(g)
        assert fc == oracles.is_factor_critical(g)
        assert fc == pure.is_factor_critical(g.masks, (1 << g.n) - 1)
        if fc and g.n >= 3:
            assert g.n % 2 == 1 and is_connected(g)


def test_factor_critical_relabel_invariant():
    rng = random.Random(5)
    for g in sample_graphs(80, 3, 9, 12):
        base = is_factor_critical(g)
        for _ in range(5):
            perm = list(range(g.n))
            rng.shuffle(perm)
            assert is_factor_critical(relabel(g, perm)) == base


def test_against_networkx():
    nx = pytest.importorskip("networkx")
    for g in sample_graphs(150, 2, 25, 13):
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.edges)
        assert matching_number(g) == len(nx.max_weight_matching(h, maxcardinality=True))
