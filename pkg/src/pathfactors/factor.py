"""P>=3-factors: the sun-component criterion with certificates, and direct construction."""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .budget import check_budget
from .graph import Graph, delete_vertices
from .sun import sun_count


@dataclass(frozen=True)
class PathFactor:
    """Vertex-disjoint paths (as vertex sequences), each with at least 3 vertices."""

    paths: tuple[tuple[int, ...], ...]

    def problems(self, g: Graph) -> list[str]:
        out = []
        seen: set[int] = set()
        for p in self.paths:
            if len(p) < 3:
                out.append(f"path {p} has fewer than 3 vertices")
            for a, b in zip(p, p[1:]):
                if not g.has_edge(a, b):
                    out.append(f"path {p} uses non-edge {a}-{b}")
            for v in p:
                if v in seen:
                    out.append(f"vertex {v} covered twice")
                seen.add(v)
        missing = set(range(g.n)) - seen
        if missing:
            out.append(f"vertices {sorted(missing)} not covered")
        if seen - set(range(g.n)):
            out.append("paths mention vertices outside the graph")
        return out

    def is_valid(self, g: Graph) -> bool:
        return not self.problems(g)


@dataclass(frozen=True)
class KanekoCertificate:
    """Either a path factor, or a set X whose removal leaves more than 2|X| suns."""

    factor: PathFactor | None = None
    violation: tuple[int, ...] | None = None
    sun_count: int | None = None

    @property
    def has_factor(self) -> bool:
        return self.factor is not None

    def problems(self, g: Graph) -> list[str]:
        if self.factor is not None:
            return self.factor.problems(g)
        if self.violation is None or self.sun_count is None:
            return ["empty certificate"]
        x = self.violation
        actual = sun_count(delete_vertices(g, x))
        out = []
        if actual != self.sun_count:
            out.append(f"sun(G-X) is {actual}, certificate says {self.sun_count}")
        if actual < 2 * len(x) + 1:
            out.append(f"sun(G-X) = {actual} < 2|X|+1 = {2 * len(x) + 1}")
        return out

    def is_valid(self, g: Graph) -> bool:
        return not self.problems(g)


def find_path_factor(g: Graph) -> PathFactor | None:
    """Search for a P>=3-factor directly.

    The pieces returned have 3 to 5 vertices: every longer path splits into
    such pieces, so restricting the search loses nothing.
    """
    if g.n == 0:
        return PathFactor(())
    found = kernels.path_factor_search(g.masks, g.n)
    if found is None:
        return None
    return PathFactor(tuple(sorted(tuple(p) for p in found)))


def has_p3_factor(g: Graph) -> bool:
    return find_path_factor(g) is not None


def find_violation(g: Graph, budget: int | None = None) -> tuple[tuple[int, ...], int] | None:
    """Smallest X (ties broken lexicographically) with sun(G-X) >= 2|X|+1."""
    check_budget(g.n, budget, "sun-criterion enumeration")
    hit = kernels.kaneko_search(g.masks, g.n)
    if hit is None:
        return None
    x, s = hit
    return kernels.bits(x), s


def kaneko_check(g: Graph, budget: int | None = None) -> KanekoCertificate:
    """Decide P>=3-factor existence through the sun criterion.

    Returns a minimum-cardinality violating set when one exists, otherwise a
    path factor found by :func:`find_path_factor`.
    """
    hit = find_violation(g, budget)
    if hit is not None:
        return KanekoCertificate(violation=hit[0], sun_count=hit[1])
    factor = find_path_factor(g)
    if factor is None:
        raise RuntimeError(f"no violating set and no path factor found for {g!r}")
    return KanekoCertificate(factor=factor)
