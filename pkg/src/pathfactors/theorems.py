"""Hypothesis checkers and exhaustive verifiers for the path-factor theorems.

Theorem ids follow the numbering used throughout the package:

* 2 -- kappa >= 2m+1 and bind > 3/2 - 1/(4m+4)  =>  (P>=3, m)-factor deleted
* 3 -- kappa >= k+2 and bind >= (5+k)/4        =>  (P>=3, k)-factor critical
* 4 -- n >= 4r+6m+4, kappa >= r+m, degree condition at n/3        =>  (P>=3, m)-factor deleted
* 5 -- n >= 4r+k+4,  kappa >= r+k, degree condition at (n+2k)/3   =>  (P>=3, k)-factor critical

The degree condition asks every independent set of 2r+1 vertices to contain a
vertex of degree at least the threshold. All thresholds are exact fractions.
"""

from __future__ import annotations

import random
import warnings
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from . import kernels
from .budget import check_budget
from .connectivity import binding_number, vertex_connectivity
from .factor import KanekoCertificate, find_path_factor, kaneko_check
from .graph import (
    Graph,
    complete,
    copies,
    delete_edges,
    delete_vertices,
    disjoint_union,
    empty,
    is_connected,
    join,
)

THEOREMS = (2, 3, 4, 5)


class BelowThresholdWarning(UserWarning):
    """A sharpness family instance is too small for the theorem's order bound."""


def fmt(q: Fraction | int) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class TheoremParams:
    r: int | None = None
    m: int | None = None
    k: int | None = None

    def validate(self, theorem: int) -> None:
        need = {2: ("m",), 3: ("k",), 4: ("r", "m"), 5: ("r", "k")}.get(theorem)
        if need is None:
            raise ValueError(f"unknown theorem {theorem}; expected one of {THEOREMS}")
        for name in need:
            val = getattr(self, name)
            if val is None:
                raise ValueError(f"theorem {theorem} needs parameter {name}")
            if val < 0:
                raise ValueError(f"{name} must be non-negative")
        if "r" in need and self.r < 1:
            raise ValueError("r must be at least 1")
        if theorem == 4 and not self.m <= 2 * self.r + 1:
            raise ValueError("theorem 4 requires 0 <= m <= 2r+1")

    def used(self, theorem: int) -> dict[str, int]:
        names = {2: ("m",), 3: ("k",), 4: ("r", "m"), 5: ("r", "k")}[theorem]
        return {name: getattr(self, name) for name in names}


@dataclass(frozen=True)
class HypothesisVerdict:
    name: str
    satisfied: bool
    observed: str
    required: str
    witness: tuple | None = None

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "satisfied": self.satisfied,
            "observed": self.observed,
            "required": self.required,
            "witness": None if self.witness is None else [list(w) if isinstance(w, tuple) else w for w in self.witness],
        }


@dataclass(frozen=True)
class ConclusionVerdict:
    """Outcome of an exhaustive deletion check.

    ``deletion`` is the first failing edge set (``kind == "deleted"``) or
    vertex set (``kind == "critical"``); ``certificate`` refers to the graph
    left after that deletion, relabelled densely for vertex deletions.
    """

    kind: str
    parameter: int
    holds: bool
    deletion: tuple | None = None
    certificate: KanekoCertificate | None = None

    def to_dict(self) -> dict:
        out: dict = {"kind": self.kind, "parameter": self.parameter, "holds": self.holds}
        if self.deletion is not None:
            out["deletion"] = [list(d) if isinstance(d, tuple) else d for d in self.deletion]
        if self.certificate is not None:
            out["certificate"] = certificate_dict(self.certificate)
        return out


def certificate_dict(cert: KanekoCertificate) -> dict:
    if cert.factor is not None:
        return {"type": "factor", "paths": [list(p) for p in cert.factor.paths]}
    return {"type": "violation", "X": list(cert.violation), "sun_count": cert.sun_count}


# ---------------------------------------------------------------------------
# degree condition


def first_independent_set(g: Graph, size: int, candidates: Iterable[int]) -> tuple[int, ...] | None:
    """Lexicographically first independent ``size``-set drawn from ``candidates``."""
    cand = sorted(set(candidates))
    masks = g.masks
    chosen: list[int] = []

    def grow(start: int, blocked: int) -> bool:
        if len(chosen) == size:
            return True
        for i in range(start, len(cand) - (size - len(chosen)) + 1):
            v = cand[i]
            if blocked >> v & 1:
                continue
            chosen.append(v)
            if grow(i + 1, blocked | masks[v]):
                return True
            chosen.pop()
        return False

    return tuple(chosen) if grow(0, 0) else None


def degree_condition(
    g: Graph, r: int, threshold: Fraction | int, budget: int | None = None
) -> HypothesisVerdict:
    """Does every independent set of 2r+1 vertices hold a vertex of degree >= threshold?

    Vacuously satisfied when no such independent set exists; otherwise the
    witness is the lexicographically first independent set whose degrees all
    fall below the threshold.
    """
    check_budget(g.n, budget, "independent-set enumeration")
    size = 2 * r + 1
    threshold = Fraction(threshold)
    low = [v for v in range(g.n) if g.degree(v) < threshold]
    bad = first_independent_set(g, size, low)
    least = min_independent_max_degree(g, size)
    observed = "vacuous" if least is None else f"min over independent {size}-sets of max degree = {least}"
    return HypothesisVerdict(
        "degree", bad is None, observed, f">= {fmt(threshold)}", None if bad is None else bad
    )


def min_independent_max_degree(g: Graph, size: int) -> int | None:
    """min over independent ``size``-sets S of max degree in S; None if there is no such set."""
    for d in sorted(set(g.degrees)):
        if first_independent_set(g, size, (v for v in range(g.n) if g.degree(v) <= d)):
            return d
    return None


# ---------------------------------------------------------------------------
# hypotheses


def _order(g: Graph, bound: int) -> HypothesisVerdict:
    return HypothesisVerdict("order", g.n >= bound, str(g.n), f">= {bound}")


def _connectivity(g: Graph, bound: int) -> HypothesisVerdict:
    kappa = vertex_connectivity(g) if g.n else 0
    return HypothesisVerdict("connectivity", kappa >= bound, str(kappa), f">= {bound}")


def _binding(g: Graph, bound: Fraction, strict: bool, budget: int | None) -> HypothesisVerdict:
    bind = binding_number(g, budget)
    ok = bind.value > bound if strict else bind.value >= bound
    op = ">" if strict else ">="
    return HypothesisVerdict(
        "binding", ok, fmt(bind.value), f"{op} {fmt(bound)}", None if ok else bind.witness
    )


def theorem2_bound(m: int) -> Fraction:
    return Fraction(3, 2) - Fraction(1, 4 * m + 4)


def theorem3_bound(k: int) -> Fraction:
    return Fraction(5 + k, 4)


def check_theorem2_hypotheses(g: Graph, m: int, budget: int | None = None) -> list[HypothesisVerdict]:
    return [_connectivity(g, 2 * m + 1), _binding(g, theorem2_bound(m), True, budget)]


def check_theorem3_hypotheses(g: Graph, k: int, budget: int | None = None) -> list[HypothesisVerdict]:
    return [_connectivity(g, k + 2), _binding(g, theorem3_bound(k), False, budget)]


def check_theorem4_hypotheses(
    g: Graph, r: int, m: int, budget: int | None = None
) -> list[HypothesisVerdict]:
    TheoremParams(r=r, m=m).validate(4)
    return [
        _order(g, 4 * r + 6 * m + 4),
        _connectivity(g, r + m),
        degree_condition(g, r, Fraction(g.n, 3), budget),
    ]


def check_theorem5_hypotheses(
    g: Graph, r: int, k: int, budget: int | None = None
) -> list[HypothesisVerdict]:
    TheoremParams(r=r, k=k).validate(5)
    return [
        _order(g, 4 * r + k + 4),
        _connectivity(g, r + k),
        degree_condition(g, r, Fraction(g.n + 2 * k, 3), budget),
    ]


def kano_lu_yu_condition(g: Graph, budget: int | None = None) -> HypothesisVerdict:
    """i(G-X) <= 2|X|/3 for every vertex set X; a sufficient condition for a P>=3-factor."""
    check_budget(g.n, budget, "isolated-vertex enumeration")
    hit = kernels.isolated_search(g.masks, g.n)
    if hit is None:
        return HypothesisVerdict("kano_lu_yu", True, "holds for all X", "i(G-X) <= 2|X|/3")
    x, iso = hit
    xs = kernels.bits(x)
    return HypothesisVerdict(
        "kano_lu_yu", False, f"i(G-X) = {iso} at |X| = {len(xs)}", "i(G-X) <= 2|X|/3", xs
    )


# ---------------------------------------------------------------------------
# conclusions


def verify_factor_deleted(g: Graph, m: int, budget: int | None = None) -> ConclusionVerdict:
    """Does G - E' have a P>=3-factor for every set E' of m edges?"""
    if m < 0 or g.size < m:
        raise ValueError(f"need 0 <= m <= |E| = {g.size}, got m = {m}")
    for drop in combinations(g.edges, m):
        h = delete_edges(g, drop)
        if find_path_factor(h) is None:
            return ConclusionVerdict("deleted", m, False, drop, kaneko_check(h, budget))
    return ConclusionVerdict("deleted", m, True)


def verify_factor_critical(g: Graph, k: int, budget: int | None = None) -> ConclusionVerdict:
    """Does G - Q have a P>=3-factor for every set Q of k vertices?"""
    if k < 0 or g.n <= k:
        raise ValueError(f"need 0 <= k < n = {g.n}, got k = {k}")
    for q in combinations(range(g.n), k):
        h = delete_vertices(g, q)
        if find_path_factor(h) is None:
            return ConclusionVerdict("critical", k, False, q, kaneko_check(h, budget))
    return ConclusionVerdict("critical", k, True)


# ---------------------------------------------------------------------------
# sharpness families


def remark1_min_t(r: int, m: int) -> int:
    """Smallest t making K_{rt+m} v ((2rt+1)K1 u mK2) meet n >= 4r+6m+4."""
    return -(-(4 * r + 3 * m + 3) // (3 * r))


def remark2_min_t(r: int, k: int) -> int:
    """Smallest t making K_{rt+2k+1} v ((2rt+2k+3)K1) meet n >= 4r+k+4."""
    return max(1, -(-(4 * r - 3 * k) // (3 * r)))


def remark1_family(r: int, m: int, t: int) -> Graph:
    """K_{rt+m} joined to (2rt+1)K1 u mK2; clique vertices come first.

    Order 3rt+3m+1, connectivity rt+m, and every independent (2r+1)-set has
    maximum degree at least (n-1)/3, yet deleting the m matching edges leaves
    no P>=3-factor.
    """
    if r < 1 or t < 1 or not 0 <= m <= 2 * r + 1:
        raise ValueError("remark1_family needs r >= 1, t >= 1, 0 <= m <= 2r+1")
    n = 3 * r * t + 3 * m + 1
    if n < 4 * r + 6 * m + 4:
        warnings.warn(
            f"below order threshold: n = {n} < 4r+6m+4 = {4 * r + 6 * m + 4}",
            BelowThresholdWarning,
            stacklevel=2,
        )
    rest = disjoint_union(empty(2 * r * t + 1), copies(complete(2), m))
    return join(complete(r * t + m), rest)


def remark2_family(r: int, k: int, t: int) -> Graph:
    """K_{rt+2k+1} joined to (2rt+2k+3)K1; clique vertices come first."""
    if r < 1 or t < 1 or k < 0:
        raise ValueError("remark2_family needs r >= 1, t >= 1, k >= 0")
    n = 3 * r * t + 4 * k + 4
    if n < 4 * r + k + 4:
        warnings.warn(
            f"below order threshold: n = {n} < 4r+k+4 = {4 * r + k + 4}",
            BelowThresholdWarning,
            stacklevel=2,
        )
    return join(complete(r * t + 2 * k + 1), empty(2 * r * t + 2 * k + 3))


# ---------------------------------------------------------------------------
# reports and scans


@dataclass(frozen=True)
class TheoremReport:
    theorem: int
    params: dict[str, int]
    hypotheses: list[HypothesisVerdict]
    conclusion: ConclusionVerdict | None

    @property
    def hypotheses_hold(self) -> bool:
        return all(h.satisfied for h in self.hypotheses)

    @property
    def status(self) -> str:
        if not self.hypotheses_hold:
            return "skipped"
        if self.conclusion is not None and not self.conclusion.holds:
            return "counterexample"
        return "consistent"

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "params": dict(self.params),
            "hypotheses": [h.to_dict() for h in self.hypotheses],
            "hypotheses_hold": self.hypotheses_hold,
            "conclusion": None if self.conclusion is None else self.conclusion.to_dict(),
            "status": self.status,
        }


def check_hypotheses(
    theorem: int, g: Graph, params: TheoremParams, budget: int | None = None
) -> list[HypothesisVerdict]:
    params.validate(theorem)
    if theorem == 2:
        return check_theorem2_hypotheses(g, params.m, budget)
    if theorem == 3:
        return check_theorem3_hypotheses(g, params.k, budget)
    if theorem == 4:
        return check_theorem4_hypotheses(g, params.r, params.m, budget)
    return check_theorem5_hypotheses(g, params.r, params.k, budget)


def check_conclusion(
    theorem: int, g: Graph, params: TheoremParams, budget: int | None = None
) -> ConclusionVerdict | None:
    """The theorem's conclusion, or None when no deletion of the required size exists."""
    if theorem in (2, 4):
        if g.size < params.m:
            return None
        return verify_factor_deleted(g, params.m, budget)
    if g.n <= params.k:
        return None
    return verify_factor_critical(g, params.k, budget)


def check_theorem(
    theorem: int,
    g: Graph,
    params: TheoremParams,
    budget: int | None = None,
    always_conclude: bool = True,
) -> TheoremReport:
    """Evaluate hypotheses and, unless skipped, the conclusion.

    With ``always_conclude=False`` the conclusion is only computed when all
    hypotheses hold, which is all a soundness scan needs.
    """
    hyps = check_hypotheses(theorem, g, params, budget)
    concl = None
    if always_conclude or all(h.satisfied for h in hyps):
        concl = check_conclusion(theorem, g, params, budget)
    return TheoremReport(theorem, params.used(theorem), hyps, concl)


EDGE_PROBABILITIES = (0.3, 0.5, 0.7)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(n, tuple((u, v) for u, v in combinations(range(n), 2) if rng.random() < p))


def random_graphs(
    n_min: int, n_max: int, samples: int, seed: int, connected: bool = False
) -> Iterator[Graph]:
    """Seeded Erdos-Renyi graphs; p is drawn per sample from EDGE_PROBABILITIES."""
    if n_min < 1 or n_max < n_min:
        raise ValueError("need 1 <= n_min <= n_max")
    rng = random.Random(seed)
    made = 0
    while made < samples:
        n = rng.randint(n_min, n_max)
        p = rng.choice(EDGE_PROBABILITIES)
        g = random_graph(rng, n, p)
        if connected and not is_connected(g):
            continue
        made += 1
        yield g


def exhaustive_graphs(n: int, connected: bool = False) -> Iterator[Graph]:
    """Every labelled graph on ``n`` vertices (2^(n(n-1)/2) of them)."""
    if n > 7:
        raise ValueError("exhaustive labelled enumeration is limited to n <= 7")
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        g = Graph(n, tuple(p for i, p in enumerate(pairs) if bits >> i & 1))
        if connected and not is_connected(g):
            continue
        yield g


@dataclass
class ScanResult:
    theorem: int
    params: dict[str, int]
    reports: list[TheoremReport] = field(default_factory=list)

    @property
    def examined(self) -> int:
        return len(self.reports)

    @property
    def satisfied(self) -> int:
        return sum(1 for rep in self.reports if rep.hypotheses_hold)

    @property
    def skipped(self) -> int:
        return self.examined - self.satisfied

    @property
    def counterexamples(self) -> list[int]:
        return [i for i, rep in enumerate(self.reports) if rep.status == "counterexample"]

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def summary(self) -> dict:
        return {
            "theorem": self.theorem,
            "params": dict(self.params),
            "examined": self.examined,
            "hypotheses_satisfied": self.satisfied,
            "skipped": self.skipped,
            "counterexamples": len(self.counterexamples),
            "counterexample_indices": self.counterexamples,
        }


def theorem_scan(
    theorem: int, params: TheoremParams, graphs: Iterable[Graph], budget: int | None = None
) -> ScanResult:
    """Check the implication on every graph; reports keep the input order."""
    params.validate(theorem)
    result = ScanResult(theorem, params.used(theorem))
    for g in graphs:
        result.reports.append(check_theorem(theorem, g, params, budget, always_conclude=False))
    return result
