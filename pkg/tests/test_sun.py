import random
from itertools import combinations

import pytest
from hypothesis import given, settings

import oracles
from conftest import graphs, sample_graphs
from pathfactors import kernels
from pathfactors.graph import (
    Graph,
    GraphError,
    complete,
    component_sets,
    copies,
    corona_of,
    cycle,
    disjoint_union,
    empty,
    isolated_count,
    omega,
    path,
    relabel,
)
from pathfactors.sun import SunKind, classify_sun, is_big_sun, sun_count


def test_classify_examples():
    assert classify_sun(complete(1)).kind is SunKind.TRIVIAL
    assert classify_sun(complete(2)).kind is SunKind.EDGE
    dec = classify_sun(corona_of(complete(3)))
    assert dec.kind is SunKind.CORONA
    assert dec.core == complete(3)
    assert dec.pairing == ((0, 3), (1, 4), (2, 5))
    assert classify_sun(path(4)) is None and not oracles.is_sun(path(4))


def test_disconnected_rejected():
    with pytest.raises(GraphError):
        classify_sun(empty(2))


def test_big_sun():
    assert is_big_sun(corona_of(complete(3)))
    assert not is_big_sun(complete(2))
    assert is_big_sun(corona_of(cycle(5)))


def test_sun_count_examples():
    assert sun_count(disjoint_union(empty(3), path(4))) == 3
    assert sun_count(empty(5)) == 5
    assert sun_count(cycle(6)) == 0 and oracles.sun_count(cycle(6)) == 0


def test_corona_of_non_factor_critical_is_not_a_sun():
    # K4 core: even order
    assert classify_sun(corona_of(complete(4))) is None
    # P3 core: odd but P3 - middle has no perfect matching
    assert classify_sun(corona_of(path(3))) is None


def factor_critical_cores(seed=3):
    """Odd cycles 3..9 plus random chorded variants, kept only if factor-critical."""
    rng = random.Random(seed)
    out = []
    for n in (3, 5, 7, 9):
        base = cycle(n)
        out.append(base)
        non_edges = [e for e in combinations(range(n), 2) if e not in base.edge_set]
        for _ in range(6):
            extra = rng.sample(non_edges, rng.randint(0, len(non_edges)))
            out.append(Graph.from_edges(n, list(base.edges) + extra))
    # also some random odd graphs that happen to be factor-critical
    for g in sample_graphs(300, 3, 9, seed):
        if g.n % 2 and kernels.pure.is_factor_critical(g.masks, (1 << g.n) - 1):
            out.append(g)
    return out


def test_corona_round_trip():
    cores = factor_critical_cores()
    assert len(cores) > 30
    for h in cores:
        if h.n <= 7:
            assert oracles.is_factor_critical(h)
        dec = classify_sun(corona_of(h))
        assert dec is not None and dec.kind is SunKind.CORONA
        assert dec.core == h
        assert dec.core_vertices == tuple(range(h.n))
        assert dec.pairing == tuple((i, h.n + i) for i in range(h.n))


def _valid_splits(g):
    """Every (core, pairing) satisfying the corona conditions, found by enumeration."""
    adj = oracles.adjacency(g)
    out = []
    for core in combinations(range(g.n), g.n // 2):
        rest = [v for v in range(g.n) if v not in core]
        if any(len(adj[u]) != 1 for u in rest):
            continue
        pairs = tuple(sorted((next(iter(adj[u])), u) for u in rest))
        if sorted(p[0] for p in pairs) != list(core):
            continue
        if oracles.is_factor_critical(oracles.induced(g, core)):
            out.append((core, pairs))
    return out


def test_decomposition_unique():
    for h in factor_critical_cores(seed=8):
        if h.n > 5:
            continue
        g = corona_of(h)
        perm = list(range(g.n))
        random.Random(h.n + g.size).shuffle(perm)
        g = relabel(g, perm)
        dec = classify_sun(g)
        assert _valid_splits(g) == [(dec.core_vertices, dec.pairing)]


@given(graphs(max_n=9))
@settings(max_examples=200, deadline=None)
def test_sun_count_bounds(g):
    assert isolated_count(g) <= sun_count(g) <= omega(g)


def test_sun_count_matches_oracle_and_kernels():
    gs = sample_graphs(250, 1, 8, 21, p=0.3)
    gs += [disjoint_union(corona_of(cycle(3)), g) for g in sample_graphs(40, 1, 4, 22)]
    for g in gs:
        expected = oracles.sun_count(g)
        assert sun_count(g) == expected
        full = (1 << g.n) - 1
        assert kernels.pure.sun_count(g.masks, full) == expected
        if kernels.compiled is not None:
            assert kernels.compiled.sun_count(g.masks, full) == expected


def test_relabel_invariance():
    rng = random.Random(99)
    pool = [corona_of(h) for h in factor_critical_cores()[:20]] + sample_graphs(30, 2, 10, 23)
    for g in pool:
        comps = [c for c in component_sets(g)]
        base = sun_count(g)
        kinds = sorted(
            (dec.kind.value if (dec := classify_sun(oracles.induced(g, c))) else "none") for c in comps
        )
        for _ in range(10):
            perm = list(range(g.n))
            rng.shuffle(perm)
            h = relabel(g, perm)
            assert sun_count(h) == base
            hk = sorted(
                (dec.kind.value if (dec := classify_sun(oracles.induced(h, c))) else "none")
                for c in component_sets(h)
            )
            assert hk == kinds


def test_remark_residue():
    assert sun_count(copies(complete(1), 5)) == 5
