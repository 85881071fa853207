"""Sun recognition: K1, K2, and coronas of factor-critical graphs."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .graph import Graph, GraphError, component_sets, induced_subgraph, is_connected
from .matching import is_factor_critical


class SunKind(enum.Enum):
    TRIVIAL = "trivial"
    EDGE = "edge"
    CORONA = "corona"


@dataclass(frozen=True)
class SunDecomposition:
    """How a connected graph is a sun.

    For ``CORONA``, ``core_vertices`` lists the core in increasing order (so
    ``core`` is the induced core relabelled by that order) and ``pairing``
    holds ``(core vertex, pendant vertex)`` pairs in the host's labels.
    """

    kind: SunKind
    core: Graph | None = None
    core_vertices: tuple[int, ...] = ()
    pairing: tuple[tuple[int, int], ...] = ()

    @property
    def pendants(self) -> tuple[int, ...]:
        return tuple(sorted(u for _, u in self.pairing))


def classify_sun(g: Graph) -> SunDecomposition | None:
    if not is_connected(g) or g.n == 0:
        raise GraphError("classify_sun expects a connected, non-empty graph")
    if g.n == 1:
        return SunDecomposition(SunKind.TRIVIAL)
    if g.n == 2:
        return SunDecomposition(SunKind.EDGE)
    if g.n % 2:
        return None
    pendants = [v for v in range(g.n) if g.degree(v) == 1]
    if 2 * len(pendants) != g.n:
        return None
    pendant_set = set(pendants)
    pairing = []
    hit = set()
    for u in pendants:
        (v,) = g.adjacency[u]
        if v in pendant_set or v in hit:
            return None
        hit.add(v)
        pairing.append((v, u))
    core_vertices = tuple(sorted(hit))
    core, _ = induced_subgraph(g, core_vertices)
    if not is_factor_critical(core):
        return None
    return SunDecomposition(SunKind.CORONA, core, core_vertices, tuple(sorted(pairing)))


def is_sun(g: Graph) -> bool:
    return classify_sun(g) is not None


def is_big_sun(g: Graph) -> bool:
    return g.n >= 6 and is_connected(g) and classify_sun(g) is not None


def sun_components(g: Graph) -> list[tuple[int, ...]]:
    """Vertex sets of the components of ``g`` that are suns."""
    out = []
    for comp in component_sets(g):
        piece, _ = induced_subgraph(g, comp)
        if classify_sun(piece) is not None:
            out.append(comp)
    return out


def sun_count(g: Graph) -> int:
    return len(sun_components(g))
