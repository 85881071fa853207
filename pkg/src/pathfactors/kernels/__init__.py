"""Bitmask kernels for the subset-enumeration hot loops.

The compiled extension is used when it imports and the graph fits in 64
bits; otherwise the pure-Python implementation runs. Set
``PATHFACTORS_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _pykernels as pure

try:
    from . import _ckernels as compiled
except ImportError:  # extension not built
    compiled = None

if os.environ.get("PATHFACTORS_PURE_PYTHON", "") not in ("", "0"):
    compiled = None

BACKEND = "compiled" if compiled is not None else "python"


def _select(n: int):
    if compiled is not None and n <= compiled.MAX_ORDER:
        return compiled
    return pure


def kaneko_search(adj, n):
    return _select(n).kaneko_search(adj, n)


def isolated_search(adj, n):
    return _select(n).isolated_search(adj, n)


def binding_search(adj, n):
    return _select(n).binding_search(adj, n)


def path_factor_search(adj, n):
    return _select(n).path_factor_search(adj, n)


def sun_count(adj, alive):
    return _select(len(adj)).sun_count(adj, alive)


def bits(mask: int) -> tuple[int, ...]:
    return tuple(pure._bits(mask))


def to_mask(vertices) -> int:
    x = 0
    for v in vertices:
        x |= 1 << v
    return x
