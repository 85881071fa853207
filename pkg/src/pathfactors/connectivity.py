"""Vertex connectivity, edge connectivity (unit-capacity max flow) and binding number."""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from typing import NamedTuple

from . import kernels
from .budget import check_budget
from .graph import Graph, GraphError, is_connected


def _max_flow(cap: dict[int, dict[int, int]], s: int, t: int, limit: int) -> int:
    """Edmonds-Karp on a residual dict; stops early once ``limit`` is reached."""
    flow = 0
    while flow < limit:
        prev = {s: s}
        queue = deque([s])
        while queue and t not in prev:
            x = queue.popleft()
            for y, c in cap[x].items():
                if c > 0 and y not in prev:
                    prev[y] = x
                    queue.append(y)
        if t not in prev:
            break
        y = t
        while y != s:
            x = prev[y]
            cap[x][y] -= 1
            cap[y][x] = cap[y].get(x, 0) + 1
            y = x
        flow += 1
    return flow


def local_vertex_connectivity(g: Graph, s: int, t: int, limit: int | None = None) -> int:
    """Maximum number of internally disjoint s-t paths for non-adjacent ``s``, ``t``."""
    if s == t or g.has_edge(s, t):
        raise GraphError("local vertex connectivity needs distinct non-adjacent vertices")
    # vertex v splits into in-node 2v and out-node 2v+1 joined by a unit arc
    cap: dict[int, dict[int, int]] = {x: {} for x in range(2 * g.n)}
    for v in range(g.n):
        cap[2 * v][2 * v + 1] = g.n if v in (s, t) else 1
    for u, v in g.edges:
        cap[2 * u + 1][2 * v] = 1
        cap[2 * v + 1][2 * u] = 1
    bound = g.n if limit is None else limit
    return _max_flow(cap, 2 * s + 1, 2 * t, bound)


def vertex_connectivity(g: Graph) -> int:
    """kappa(G): n-1 for complete graphs, 0 when disconnected."""
    n = g.n
    if n == 0:
        raise GraphError("vertex connectivity of the empty graph is undefined")
    if g.is_complete():
        return n - 1
    if not is_connected(g):
        return 0
    best = n - 1
    # some minimum separator misses one of the first best+1 vertices
    for i in range(n):
        if i > best:
            break
        for j in range(i + 1, n):
            if not g.has_edge(i, j):
                best = min(best, local_vertex_connectivity(g, i, j, best))
    return best


def edge_connectivity(g: Graph) -> int:
    """lambda(G); 0 for K1 and for disconnected graphs."""
    if g.n == 0:
        raise GraphError("edge connectivity of the empty graph is undefined")
    if g.n == 1 or not is_connected(g):
        return 0
    best = g.min_degree()
    for t in range(1, g.n):
        cap: dict[int, dict[int, int]] = {x: {} for x in range(g.n)}
        for u, v in g.edges:
            cap[u][v] = 1
            cap[v][u] = 1
        best = min(best, _max_flow(cap, 0, t, best))
    return best


class BindingNumber(NamedTuple):
    value: Fraction
    witness: tuple[int, ...]


def binding_number(g: Graph, budget: int | None = None) -> BindingNumber:
    """bind(G) exactly, with the lexicographically first minimising set X."""
    if g.n == 0:
        raise GraphError("binding number of the empty graph is undefined")
    check_budget(g.n, budget, "binding-number enumeration")
    hit = kernels.binding_search(g.masks, g.n)
    if hit is None:
        raise GraphError("binding number undefined: no set X with N(X) != V(G)")
    num, den, x = hit
    return BindingNumber(Fraction(num, den), kernels.bits(x))
