"""Pure-Python bitmask kernels.

Every function takes ``adj``, a sequence of neighbourhood bitmasks (``adj[v]``
has bit ``w`` set iff ``vw`` is an edge), and works on vertex subsets encoded
as ints. The compiled backend in ``_ckernels.pyx`` mirrors these signatures
and must return identical results.
"""

from __future__ import annotations

from collections.abc import Sequence
from itertools import combinations


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


def lex_less(a: int, b: int) -> bool:
    """True iff the sorted member tuple of ``a`` precedes that of ``b``."""
    diff = a ^ b
    if not diff:
        return False
    d = diff & -diff
    above = ~((d << 1) - 1)
    if a & d:
        return bool(b & above)
    return not (a & above)


def component_masks(adj: Sequence[int], alive: int) -> list[int]:
    """Connected components of G[alive], ordered by lowest vertex."""
    out = []
    rest = alive
    while rest:
        low = rest & -rest
        comp = low
        stack = low
        while stack:
            b = stack & -stack
            stack ^= b
            new = adj[b.bit_length() - 1] & alive & ~comp
            comp |= new
            stack |= new
        out.append(comp)
        rest &= ~comp
    return out


def has_perfect_matching(adj: Sequence[int], mask: int) -> bool:
    if not mask:
        return True
    if _popcount(mask) & 1:
        return False
    for v in _bits(mask):
        if not adj[v] & mask:
            return False
    low = mask & -mask
    v = low.bit_length() - 1
    rest = mask ^ low
    for u in _bits(adj[v] & rest):
        if has_perfect_matching(adj, rest & ~(1 << u)):
            return True
    return False


def is_factor_critical(adj: Sequence[int], mask: int) -> bool:
    if not _popcount(mask) & 1:
        return False
    return all(has_perfect_matching(adj, mask & ~(1 << v)) for v in _bits(mask))


def sun_core(adj: Sequence[int], comp: int) -> int | None:
    """Core of a connected component that passes the corona shape test.

    Returns ``0`` for K1 and K2 (suns with no core to check), the core mask
    when the pendant structure fits, and ``None`` when the component cannot be
    a sun. Factor-criticality of the core is left to the caller.
    """
    size = _popcount(comp)
    if size <= 2:
        return 0
    if size & 1:
        return None
    pend = 0
    for v in _bits(comp):
        if _popcount(adj[v] & comp) == 1:
            pend |= 1 << v
    if _popcount(pend) * 2 != size:
        return None
    core = comp & ~pend
    hit = 0
    for u in _bits(pend):
        w = adj[u] & comp
        if w & hit or w & pend:
            return None
        hit |= w
    if hit != core:
        return None
    return core


def sun_count(adj: Sequence[int], alive: int, _fc: dict[int, bool] | None = None) -> int:
    """Number of sun components of G[alive]."""
    fc = {} if _fc is None else _fc
    count = 0
    for comp in component_masks(adj, alive):
        core = sun_core(adj, comp)
        if core is None:
            continue
        if core:
            ok = fc.get(core)
            if ok is None:
                ok = fc[core] = is_factor_critical(adj, core)
            if not ok:
                continue
        count += 1
    return count


def kaneko_search(adj: Sequence[int], n: int) -> tuple[int, int] | None:
    """First X (by size, then lexicographic) with sun(G-X) >= 2|X|+1.

    Returns ``(X mask, sun(G-X))`` or ``None`` when no such X exists.
    """
    full = (1 << n) - 1
    fc: dict[int, bool] = {}
    for k in range(n + 1):
        # sun(G-X) <= n-k, so larger X cannot violate
        if n - k < 2 * k + 1:
            break
        for xs in combinations(range(n), k):
            x = 0
            for v in xs:
                x |= 1 << v
            s = sun_count(adj, full & ~x, fc)
            if s >= 2 * k + 1:
                return x, s
    return None


def isolated_search(adj: Sequence[int], n: int) -> tuple[int, int] | None:
    """First X (by size, then lexicographic) with 3*i(G-X) > 2|X|.

    Returns ``(X mask, i(G-X))`` or ``None``.
    """
    full = (1 << n) - 1
    for k in range(n + 1):
        if 3 * (n - k) <= 2 * k:
            break
        for xs in combinations(range(n), k):
            x = 0
            for v in xs:
                x |= 1 << v
            alive = full & ~x
            iso = 0
            for v in _bits(alive):
                if not adj[v] & alive:
                    iso += 1
            if 3 * iso > 2 * k:
                return x, iso
    return None


def binding_search(adj: Sequence[int], n: int) -> tuple[int, int, int] | None:
    """Minimum of |N(X)|/|X| over non-empty X with N(X) != V.

    Returns ``(|N(X)|, |X|, X mask)`` for the lexicographically first
    minimiser, or ``None`` when no X qualifies.
    """
    full = (1 << n) - 1
    best: list = [None, 1, 0]

    def visit(i: int, x: int, nx: int, size: int) -> None:
        if i == n:
            if size and nx != full:
                cnt = _popcount(nx)
                bn, bd, bx = best
                if bn is None or cnt * bd < bn * size or (
                    cnt * bd == bn * size and lex_less(x, bx)
                ):
                    best[0], best[1], best[2] = cnt, size, x
            return
        visit(i + 1, x | (1 << i), nx | adj[i], size + 1)
        visit(i + 1, x, nx, size)

    visit(0, 0, 0, 0)
    if best[0] is None:
        return None
    return best[0], best[1], best[2]


def _paths_through(adj: Sequence[int], v: int, rem: int):
    """Vertex sequences of paths with 3 to 5 vertices through ``v`` inside ``rem``.

    Each undirected path is produced once.
    """

    def arms(start: int, avoid: int, depth: int):
        yield ()
        if depth == 0:
            return
        for w in _bits(adj[start] & rem & ~avoid):
            for tail in arms(w, avoid | (1 << w), depth - 1):
                yield (w,) + tail

    base = 1 << v
    for right in arms(v, base, 4):
        if not right:
            continue
        rmask = base
        for w in right:
            rmask |= 1 << w
        for left in arms(v, rmask, 4 - len(right)):
            total = len(left) + len(right)
            if total < 2:
                continue
            if left and left[0] < right[0]:
                continue
            yield left[::-1] + (v,) + right


def path_factor_search(adj: Sequence[int], n: int) -> list[tuple[int, ...]] | None:
    """Partition of all vertices into paths of 3 to 5 vertices, or ``None``.

    Longer paths split into such pieces, so this decides P>=3-factor existence.
    """
    failed: set[int] = set()

    def viable(rem: int) -> bool:
        for comp in component_masks(adj, rem):
            if _popcount(comp) < 3:
                return False
        return True

    def solve(rem: int) -> list[tuple[int, ...]] | None:
        if not rem:
            return []
        if rem in failed:
            return None
        if viable(rem):
            # branch on the vertex with fewest remaining neighbours
            v = min(_bits(rem), key=lambda w: _popcount(adj[w] & rem))
            for p in _paths_through(adj, v, rem):
                pm = 0
                for w in p:
                    pm |= 1 << w
                sub = solve(rem & ~pm)
                if sub is not None:
                    return [p] + sub
        failed.add(rem)
        return None

    return solve((1 << n) - 1)
