import random

import pytest
from hypothesis import given, settings

import oracles
from conftest import graphs, sample_graphs
from pathfactors.budget import BudgetExceeded
from pathfactors.factor import (
    KanekoCertificate,
    PathFactor,
    find_path_factor,
    has_p3_factor,
    kaneko_check,
)
from pathfactors.graph import (
    Graph,
    complete,
    cycle,
    delete_edges,
    delete_vertices,
    empty,
    join,
    omega,
    path,
    star,
)


def test_kaneko_examples():
    assert kaneko_check(complete(2)) == KanekoCertificate(violation=(), sun_count=1)
    cert = kaneko_check(star(3))
    assert (cert.violation, cert.sun_count) == ((0,), 3)
    assert oracles.kaneko_violations(star(3))[0] == (0,)
    assert kaneko_check(path(3)).factor == PathFactor(((0, 1, 2),))


def test_find_examples():
    f = find_path_factor(cycle(6))
    assert f is not None and f.is_valid(cycle(6))
    assert len(f.paths) == 2 and all(len(p) == 3 for p in f.paths)
    assert find_path_factor(star(3)) is None and not oracles.has_p3_factor(star(3))
    assert find_path_factor(join(complete(3), empty(7))) is None


def test_has_factor_examples():
    assert not has_p3_factor(complete(1))
    assert has_p3_factor(complete(8))
    assert not has_p3_factor(join(complete(3), empty(7)))
    assert has_p3_factor(Graph(0))


def test_long_paths_survive():
    # a single path is accepted whole by the validator, whatever its length
    assert PathFactor((tuple(range(8)),)).is_valid(path(8))
    g = path(7)
    f = find_path_factor(g)
    assert f.is_valid(g)


def test_validator_catches_defects():
    g = cycle(6)
    assert PathFactor(((0, 1),)).problems(g)
    assert PathFactor(((0, 1, 2), (2, 3, 4, 5))).problems(g)
    assert PathFactor(((0, 2, 1), (3, 4, 5))).problems(g)
    assert PathFactor(((0, 1, 2),)).problems(g)


def test_budget():
    with pytest.raises(BudgetExceeded):
        kaneko_check(cycle(20))
    assert kaneko_check(cycle(20), budget=20).has_factor


@given(graphs(max_n=7))
@settings(max_examples=200, deadline=None)
def test_minimum_witness_matches_oracle(g):
    cert = kaneko_check(g)
    assert cert.is_valid(g)
    violations = oracles.kaneko_violations(g)
    if violations:
        assert cert.violation == violations[0]
    else:
        assert cert.has_factor


def test_existence_matches_permutation_oracle():
    for g in sample_graphs(150, 1, 7, 31):
        assert has_p3_factor(g) == oracles.has_p3_factor(g)


def test_monotone_component_count():
    rng = random.Random(41)
    for g in sample_graphs(150, 2, 9, 42):
        x = [v for v in range(g.n) if rng.random() < 0.3]
        h = delete_vertices(g, x)
        for e in h.edges:
            assert omega(delete_edges(h, [e])) <= omega(h) + 1
