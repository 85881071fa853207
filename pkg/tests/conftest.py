import random
import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from pathfactors.graph import Graph  # noqa: E402

ACCEPTANCE: list[tuple[str, bool, str]] = []


def record(name: str, ok: bool, detail: str = "") -> None:
    ACCEPTANCE.append((name, ok, detail))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE:
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {name}  {detail}")


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, tuple(p for p, keep in zip(pairs, chosen) if keep))


def sample_graphs(count, n_min, n_max, seed, p=None):
    """Seeded Erdos-Renyi sample independent of the library's generator."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(n_min, n_max)
        q = p if p is not None else rng.choice((0.2, 0.35, 0.5, 0.65, 0.8))
        out.append(
            Graph(n, tuple((u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < q))
        )
    return out


@pytest.fixture
def rng():
    return random.Random(20240601)
