import pytest
from hypothesis import given

from conftest import graphs
from pathfactors.graph import (
    DuplicateEdgeError,
    Graph,
    GraphError,
    LoopError,
    MalformedLineError,
    VertexRangeError,
    complete,
    component_sets,
    components,
    copies,
    corona_of,
    cycle,
    delete_edges,
    delete_vertices,
    deletion_mapping,
    disjoint_union,
    empty,
    induced_subgraph,
    isolated_count,
    join,
    omega,
    path,
    read_graph,
    relabel,
    star,
    write_graph,
)


def test_complete():
    assert complete(1).n == 1 and complete(1).size == 0
    k4 = complete(4)
    assert k4.size == 6
    assert set(k4.degrees) == {3}
    with pytest.raises(GraphError):
        complete(0)


def test_path_and_cycle():
    assert path(3).edges == ((0, 1), (1, 2))
    assert path(1) == complete(1)
    c4 = cycle(4)
    assert c4.size == 4 and set(c4.degrees) == {2}
    with pytest.raises(GraphError):
        cycle(2)
    with pytest.raises(GraphError):
        path(0)


def test_union():
    u = disjoint_union(complete(1), complete(1))
    assert (u.n, u.size) == (2, 0)
    pp = disjoint_union(path(3), path(3))
    assert (pp.n, pp.size, omega(pp)) == (6, 4, 2)
    g = disjoint_union(empty(5), complete(2))
    assert (g.n, g.size) == (7, 1)


def test_join():
    g = join(complete(2), empty(5))
    assert (g.n, g.size) == (7, 11)
    assert all(g.degree(v) == 2 for v in range(2, 7))
    assert join(complete(3), empty(7)).n == 10
    assert join(complete(1), complete(1)) == complete(2)


def test_corona():
    assert corona_of(complete(1)) == complete(2)
    g = corona_of(complete(3))
    assert g.n == 6
    assert sorted(g.degrees).count(1) == 3
    c = corona_of(cycle(5))
    assert c.n == 10
    assert all(c.degree(v) == 1 for v in range(5, 10))


def test_deletions():
    assert delete_vertices(star(3), [0]) == empty(3)
    assert delete_edges(cycle(8), [(0, 7)]) == path(8)
    g = cycle(5)
    assert delete_vertices(g, []) == g
    assert deletion_mapping(g, [1, 3]) == {0: 0, 2: 1, 4: 2}
    with pytest.raises(GraphError):
        delete_vertices(g, [5])
    with pytest.raises(GraphError):
        delete_edges(g, [(0, 2)])


def test_components_and_isolated():
    g = disjoint_union(empty(3), path(4))
    assert len(components(g)) == 4
    assert isolated_count(g) == 3
    assert omega(complete(5)) == 1
    assert isolated_count(path(3)) == 0


def test_constructor_rejects_bad_edges():
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(GraphError):
        Graph(3, ((1, 0),))


def test_read_examples():
    assert read_graph("n 3\n0 1\n1 2\n") == path(3)
    assert read_graph("n 2\n") == empty(2)
    assert read_graph("# comment\n\nn 3\n# mid\n2 1\n") == Graph(3, ((1, 2),))


@pytest.mark.parametrize(
    "text, exc, line",
    [
        ("n 2\n0 0\n", LoopError, 2),
        ("n 2\n0 2\n", VertexRangeError, 2),
        ("n 3\n0 1\n1 0\n", DuplicateEdgeError, 3),
        ("n 3\n0 1 2\n", MalformedLineError, 2),
        ("# x\nnodes 3\n", MalformedLineError, 2),
        ("n 3\n0 -1\n", MalformedLineError, 2),
    ],
)
def test_read_errors(text, exc, line):
    with pytest.raises(exc) as info:
        read_graph(text)
    assert info.value.line == line
    assert f"line {line}" in str(info.value)


@given(graphs(max_n=9))
def test_degree_sum(g):
    assert sum(g.degrees) == 2 * g.size


@given(graphs(max_n=9))
def test_round_trip(g):
    assert read_graph(write_graph(g)) == g


@given(graphs(max_n=6), graphs(max_n=6))
def test_join_counts(g1, g2):
    j = join(g1, g2)
    assert j.n == g1.n + g2.n
    assert j.size == g1.size + g2.size + g1.n * g2.n


@given(graphs(min_n=1, max_n=9))
def test_isolated_at_most_omega(g):
    assert isolated_count(g) <= omega(g)


@given(graphs(min_n=2, max_n=9))
def test_deletion_composes(g):
    q1 = [v for v in range(g.n) if v % 3 == 0]
    q2 = [v for v in range(g.n) if v % 3 == 1]
    step = delete_vertices(g, q1)
    image = [deletion_mapping(g, q1)[v] for v in q2]
    assert delete_vertices(step, image) == delete_vertices(g, q1 + q2)


def test_induced_mapping_and_relabel():
    h, mapping = induced_subgraph(cycle(6), [4, 0, 5])
    assert mapping == {0: 0, 4: 1, 5: 2}
    assert h.edges == ((0, 2), (1, 2))
    assert relabel(path(3), [2, 0, 1]).edges == ((0, 1), (0, 2))
    assert component_sets(copies(path(2), 2)) == [(0, 1), (2, 3)]
