"""Maximum matching in general graphs (Edmonds' blossom algorithm) and factor-criticality."""

from __future__ import annotations

from collections import deque

from .graph import Edge, Graph, is_connected


def _augment_from(adj: list[list[int]], match: list[int], root: int) -> bool:
    """Search one augmenting path from the exposed vertex ``root``; flip it if found."""
    n = len(adj)
    used = [False] * n
    parent = [-1] * n
    base = list(range(n))
    used[root] = True
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[match[b]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    while queue:
        v = queue.popleft()
        for to in adj[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                cur = lca(v, to)
                blossom = [False] * n
                mark_path(v, cur, to, blossom)
                mark_path(to, cur, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    # flip the alternating path ending at ``to``
                    while to != -1:
                        pv = parent[to]
                        nxt = match[pv]
                        match[to] = pv
                        match[pv] = to
                        to = nxt
                    return True
                used[match[to]] = True
                queue.append(match[to])
    return False


def _maximize(adj: list[list[int]], match: list[int], active: list[bool] | None = None) -> list[int]:
    """Grow ``match`` (mate array, -1 = exposed) to a maximum matching in place."""
    for v in range(len(adj)):
        if match[v] == -1 and (active is None or active[v]) and adj[v]:
            _augment_from(adj, match, v)
    return match


def _mate_array(g: Graph) -> list[int]:
    adj = [sorted(g.adjacency[v]) for v in range(g.n)]
    return _maximize(adj, [-1] * g.n)


def matching_number(g: Graph) -> int:
    return sum(1 for v, w in enumerate(_mate_array(g)) if w > v)


def maximum_matching(g: Graph) -> list[Edge]:
    """Maximum-cardinality matching, as a sorted edge list.

    Among all maximum matchings the lexicographically smallest sorted edge
    list is returned, so the result depends only on the graph.
    """
    n = g.n
    alive = [True] * n

    def adj_lists() -> list[list[int]]:
        return [
            sorted(w for w in g.adjacency[v] if alive[w]) if alive[v] else []
            for v in range(n)
        ]

    match = _maximize(adj_lists(), [-1] * n)
    chosen: list[Edge] = []
    for u, v in g.edges:
        if not (alive[u] and alive[v]):
            continue
        size = sum(1 for a, b in enumerate(match) if b > a)
        if match[u] == v:
            trial = match[:]
        else:
            trial = match[:]
            for x in (u, v):
                if trial[x] != -1:
                    trial[trial[x]] = -1
                    trial[x] = -1
        alive[u] = alive[v] = False
        trial[u] = trial[v] = -1
        _maximize(adj_lists(), trial, alive)
        if sum(1 for a, b in enumerate(trial) if b > a) + 1 == size:
            chosen.append((u, v))
            match = trial
        else:
            alive[u] = alive[v] = True
    return chosen


def has_perfect_matching(g: Graph) -> bool:
    if g.n % 2:
        return False
    return 2 * matching_number(g) == g.n


def is_factor_critical(g: Graph) -> bool:
    """True iff ``g - v`` has a perfect matching for every vertex ``v``."""
    n = g.n
    if n % 2 == 0:
        return n == 0
    if n >= 3 and not is_connected(g):
        return False
    adj = [sorted(g.adjacency[v]) for v in range(n)]
    base = _maximize(adj, [-1] * n)
    if sum(1 for a, b in enumerate(base) if b > a) != (n - 1) // 2:
        return False
    for v in range(n):
        trial = base[:]
        if trial[v] != -1:
            trial[trial[v]] = -1
            trial[v] = -1
        active = [True] * n
        active[v] = False
        sub = [[w for w in adj[x] if w != v] if x != v else [] for x in range(n)]
        _maximize(sub, trial, active)
        if sum(1 for a, b in enumerate(trial) if b > a) != (n - 1) // 2:
            return False
    return True
