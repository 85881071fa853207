"""Immutable simple graphs on dense vertex labels, family constructors and edge-list I/O."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

Edge = tuple[int, int]


class GraphError(ValueError):
    """Invalid graph construction or operation argument."""


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph with vertices ``0..n-1``.

    ``edges`` is stored canonically: every pair as ``(u, v)`` with ``u < v``,
    sorted lexicographically. Use :meth:`from_edges` to build from arbitrary
    input; the raw constructor validates but expects canonical edges.
    """

    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"order must be non-negative, got {self.n}")
        prev = None
        for e in self.edges:
            u, v = e
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise GraphError(f"edge {e} not canonical or out of range for n={self.n}")
            if prev is not None and e <= prev:
                raise GraphError(f"edges not sorted/unique near {e}")
            prev = e

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]] = ()) -> Graph:
        seen: set[Edge] = set()
        for pair in edges:
            u, v = pair
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise GraphError(f"duplicate edge {e}")
            seen.add(e)
        return cls(n, tuple(sorted(seen)))

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighbourhood of each vertex as an int bitmask."""
        out = [0] * self.n
        for u, v in self.edges:
            out[u] |= 1 << v
            out[v] |= 1 << u
        return tuple(out)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @property
    def size(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.adjacency)

    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self.adjacency[u]

    def neighborhood(self, xs: Iterable[int]) -> frozenset[int]:
        """N_G(X): union of the neighbourhoods of the vertices in ``xs``."""
        out: set[int] = set()
        for x in xs:
            out |= self.adjacency[x]
        return frozenset(out)

    def is_complete(self) -> bool:
        return self.size == self.n * (self.n - 1) // 2

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.size})"


# ---------------------------------------------------------------------------
# families


def empty(n: int) -> Graph:
    """nK1."""
    if n < 0:
        raise GraphError("order must be non-negative")
    return Graph(n)


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"complete graph needs n >= 1, got {n}")
    return Graph(n, tuple(combinations(range(n), 2)))


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"path needs n >= 1, got {n}")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    if leaves < 0:
        raise GraphError("leaf count must be non-negative")
    return Graph(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    off = g1.n
    return Graph(g1.n + g2.n, g1.edges + tuple((u + off, v + off) for u, v in g2.edges))


def union_all(graphs: Iterable[Graph]) -> Graph:
    out = Graph(0)
    for g in graphs:
        out = disjoint_union(out, g)
    return out


def copies(g: Graph, count: int) -> Graph:
    """``count`` disjoint copies of ``g`` (e.g. ``copies(complete(1), 5)`` is 5K1)."""
    return union_all([g] * count)


def join(g1: Graph, g2: Graph) -> Graph:
    off = g1.n
    cross = [(u, v + off) for u in range(g1.n) for v in range(g2.n)]
    return Graph.from_edges(g1.n + g2.n, list(disjoint_union(g1, g2).edges) + cross)


def corona_of(core: Graph) -> Graph:
    """Attach one pendant vertex ``core.n + i`` to every core vertex ``i``."""
    if core.n < 1:
        raise GraphError("corona needs a non-empty core")
    n = core.n
    return Graph.from_edges(2 * n, core.edges + tuple((i, n + i) for i in range(n)))


# ---------------------------------------------------------------------------
# deletions and components


def _vertex_set(g: Graph, q: Iterable[int]) -> tuple[int, ...]:
    qs = tuple(sorted(set(q)))
    for v in qs:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} not in graph of order {g.n}")
    return qs


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """G[keep] relabelled to ``0..|keep|-1`` in increasing order, plus the old->new map."""
    kept = _vertex_set(g, keep)
    mapping = {v: i for i, v in enumerate(kept)}
    edges = tuple(
        (mapping[u], mapping[v]) for u, v in g.edges if u in mapping and v in mapping
    )
    return Graph(len(kept), edges), mapping


def delete_vertices(g: Graph, q: Iterable[int]) -> Graph:
    """G - Q, relabelled densely; see :func:`deletion_mapping` for the label map."""
    qs = set(_vertex_set(g, q))
    return induced_subgraph(g, (v for v in range(g.n) if v not in qs))[0]


def deletion_mapping(g: Graph, q: Iterable[int]) -> dict[int, int]:
    qs = set(_vertex_set(g, q))
    rest = [v for v in range(g.n) if v not in qs]
    return {v: i for i, v in enumerate(rest)}


def delete_edges(g: Graph, es: Iterable[Iterable[int]]) -> Graph:
    drop: set[Edge] = set()
    for pair in es:
        u, v = pair
        e = (u, v) if u < v else (v, u)
        if e not in g.edge_set:
            raise GraphError(f"edge {e} not in graph")
        drop.add(e)
    return Graph(g.n, tuple(e for e in g.edges if e not in drop))


def component_sets(g: Graph) -> list[tuple[int, ...]]:
    """Vertex sets of the connected components, ordered by smallest member."""
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        stack = [s]
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in g.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        out.append(tuple(sorted(comp)))
    return out


def components(g: Graph) -> list[Graph]:
    return [induced_subgraph(g, c)[0] for c in component_sets(g)]


def omega(g: Graph) -> int:
    return len(component_sets(g))


def is_connected(g: Graph) -> bool:
    return omega(g) <= 1


def isolated_vertices(g: Graph) -> tuple[int, ...]:
    return tuple(v for v in range(g.n) if not g.adjacency[v])


def isolated_count(g: Graph) -> int:
    return len(isolated_vertices(g))


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Image of ``g`` under the vertex bijection ``v -> perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise GraphError("perm must be a permutation of 0..n-1")
    return Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges])


# ---------------------------------------------------------------------------
# edge-list text format


class GraphFormatError(GraphError):
    """Edge-list parse failure; ``line`` is 1-based."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class MalformedLineError(GraphFormatError):
    pass


class VertexRangeError(GraphFormatError):
    pass


class LoopError(GraphFormatError):
    pass


class DuplicateEdgeError(GraphFormatError):
    pass


def read_graph(text: str) -> Graph:
    n: int | None = None
    seen: set[Edge] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n" or not parts[1].isdigit():
                raise MalformedLineError(lineno, f"expected header 'n <count>', got {raw!r}")
            n = int(parts[1])
            continue
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise MalformedLineError(lineno, f"expected '<u> <v>', got {raw!r}")
        u, v = int(parts[0]), int(parts[1])
        if u >= n or v >= n:
            raise VertexRangeError(lineno, f"vertex index out of range 0..{n - 1}")
        if u == v:
            raise LoopError(lineno, f"loop at vertex {u}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise DuplicateEdgeError(lineno, f"duplicate edge {e[0]} {e[1]}")
        seen.add(e)
    if n is None:
        raise MalformedLineError(max(1, len(text.splitlines())), "missing 'n <count>' header")
    return Graph(n, tuple(sorted(seen)))


def write_graph(g: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"n {g.n}")
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
