# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled bitmask kernels; same contracts as ``_pykernels`` for n <= 64."""

from libc.stdint cimport uint64_t
from libcpp.unordered_set cimport unordered_set
from libcpp.unordered_map cimport unordered_map
from libcpp.vector cimport vector

MAX_ORDER = 64


cdef extern from *:
    int popcount "__builtin_popcountll"(unsigned long long) nogil
    int ctz "__builtin_ctzll"(unsigned long long) nogil


cdef inline uint64_t lowbit(uint64_t x) noexcept nogil:
    return x & (~x + 1)


cdef inline uint64_t full_mask(int n) noexcept nogil:
    if n >= 64:
        return <uint64_t>0xFFFFFFFFFFFFFFFF
    return ((<uint64_t>1) << n) - 1


cdef vector[uint64_t] _load(adj, int n) except *:
    if n > 64:
        raise ValueError("compiled kernels support at most 64 vertices")
    cdef vector[uint64_t] out
    out.resize(n)
    cdef int i
    for i in range(n):
        out[i] = <uint64_t>adj[i]
    return out


cdef bint c_lex_less(uint64_t a, uint64_t b) noexcept nogil:
    cdef uint64_t diff = a ^ b
    if diff == 0:
        return False
    cdef uint64_t d = lowbit(diff)
    cdef uint64_t above = ~(d | (d - 1))
    if a & d:
        return (b & above) != 0
    return (a & above) == 0


def lex_less(a, b):
    return c_lex_less(<uint64_t>a, <uint64_t>b)


cdef uint64_t c_component(const uint64_t* adj, uint64_t alive, uint64_t seed) noexcept nogil:
    cdef uint64_t comp = seed
    cdef uint64_t stack = seed
    cdef uint64_t b, new
    while stack:
        b = lowbit(stack)
        stack ^= b
        new = adj[ctz(b)] & alive & ~comp
        comp |= new
        stack |= new
    return comp


def component_masks(adj, alive):
    cdef int n = len(adj)
    cdef vector[uint64_t] a = _load(adj, n)
    cdef uint64_t rest = <uint64_t>alive
    cdef uint64_t comp
    out = []
    while rest:
        comp = c_component(a.data(), <uint64_t>alive, lowbit(rest))
        out.append(comp)
        rest &= ~comp
    return out


cdef bint c_perfect(const uint64_t* adj, uint64_t mask) noexcept nogil:
    if mask == 0:
        return True
    if popcount(mask) & 1:
        return False
    cdef uint64_t it = mask
    cdef uint64_t b
    while it:
        b = lowbit(it)
        it ^= b
        if (adj[ctz(b)] & mask) == 0:
            return False
    cdef uint64_t low = lowbit(mask)
    cdef uint64_t rest = mask ^ low
    cdef uint64_t cand = adj[ctz(low)] & rest
    while cand:
        b = lowbit(cand)
        cand ^= b
        if c_perfect(adj, rest & ~b):
            return True
    return False


cdef bint c_factor_critical(const uint64_t* adj, uint64_t mask) noexcept nogil:
    if (popcount(mask) & 1) == 0:
        return False
    cdef uint64_t it = mask
    cdef uint64_t b
    while it:
        b = lowbit(it)
        it ^= b
        if not c_perfect(adj, mask & ~b):
            return False
    return True


def has_perfect_matching(adj, mask):
    cdef vector[uint64_t] a = _load(adj, len(adj))
    return c_perfect(a.data(), <uint64_t>mask)


def is_factor_critical(adj, mask):
    cdef vector[uint64_t] a = _load(adj, len(adj))
    return c_factor_critical(a.data(), <uint64_t>mask)


# returns 1 for a corona-shaped component (core written to *core, 0 for K1/K2), 0 otherwise
cdef int c_sun_core(const uint64_t* adj, uint64_t comp, uint64_t* core) noexcept nogil:
    cdef int size = popcount(comp)
    core[0] = 0
    if size <= 2:
        return 1
    if size & 1:
        return 0
    cdef uint64_t pend = 0
    cdef uint64_t it = comp
    cdef uint64_t b, w, hit
    while it:
        b = lowbit(it)
        it ^= b
        if popcount(adj[ctz(b)] & comp) == 1:
            pend |= b
    if popcount(pend) * 2 != size:
        return 0
    hit = 0
    it = pend
    while it:
        b = lowbit(it)
        it ^= b
        w = adj[ctz(b)] & comp
        if (w & hit) or (w & pend):
            return 0
        hit |= w
    if hit != (comp & ~pend):
        return 0
    core[0] = hit
    return 1


def sun_core(adj, comp):
    cdef vector[uint64_t] a = _load(adj, len(adj))
    cdef uint64_t core
    if c_sun_core(a.data(), <uint64_t>comp, &core):
        return core
    return None


cdef int c_sun_count(const uint64_t* adj, uint64_t alive,
                     unordered_map[uint64_t, bint]& fc) noexcept nogil:
    cdef int count = 0
    cdef uint64_t rest = alive
    cdef uint64_t comp, core
    cdef bint ok
    while rest:
        comp = c_component(adj, alive, lowbit(rest))
        rest &= ~comp
        if not c_sun_core(adj, comp, &core):
            continue
        if core:
            if fc.count(core):
                ok = fc[core]
            else:
                ok = c_factor_critical(adj, core)
                fc[core] = ok
            if not ok:
                continue
        count += 1
    return count


def sun_count(adj, alive):
    cdef vector[uint64_t] a = _load(adj, len(adj))
    cdef unordered_map[uint64_t, bint] fc
    return c_sun_count(a.data(), <uint64_t>alive, fc)


# lexicographic k-combinations of 0..n-1 as masks; returns False when exhausted
cdef bint next_combination(int* idx, int k, int n) noexcept nogil:
    cdef int i = k - 1
    cdef int j
    while i >= 0 and idx[i] == n - k + i:
        i -= 1
    if i < 0:
        return False
    idx[i] += 1
    for j in range(i + 1, k):
        idx[j] = idx[j - 1] + 1
    return True


cdef inline uint64_t combo_mask(const int* idx, int k) noexcept nogil:
    cdef uint64_t x = 0
    cdef int i
    for i in range(k):
        x |= (<uint64_t>1) << idx[i]
    return x


def kaneko_search(adj, int n):
    cdef vector[uint64_t] a = _load(adj, n)
    cdef unordered_map[uint64_t, bint] fc
    cdef uint64_t full = full_mask(n)
    cdef int idx[64]
    cdef int k, i, s
    cdef uint64_t x
    cdef bint more
    with nogil:
        for k in range(n + 1):
            if n - k < 2 * k + 1:
                break
            for i in range(k):
                idx[i] = i
            more = True
            while more:
                x = combo_mask(idx, k)
                s = c_sun_count(a.data(), full & ~x, fc)
                if s >= 2 * k + 1:
                    with gil:
                        return x, s
                more = next_combination(idx, k, n)
    return None


def isolated_search(adj, int n):
    cdef vector[uint64_t] a = _load(adj, n)
    cdef uint64_t full = full_mask(n)
    cdef int idx[64]
    cdef int k, i, iso
    cdef uint64_t x, alive, it, b
    cdef bint more
    with nogil:
        for k in range(n + 1):
            if 3 * (n - k) <= 2 * k:
                break
            for i in range(k):
                idx[i] = i
            more = True
            while more:
                x = combo_mask(idx, k)
                alive = full & ~x
                iso = 0
                it = alive
                while it:
                    b = lowbit(it)
                    it ^= b
                    if (a[ctz(b)] & alive) == 0:
                        iso += 1
                if 3 * iso > 2 * k:
                    with gil:
                        return x, iso
                more = next_combination(idx, k, n)
    return None


cdef struct BindBest:
    int num
    int den
    uint64_t x
    bint found


cdef void c_bind_visit(const uint64_t* adj, int n, uint64_t full, int i, uint64_t x,
                       uint64_t nx, int size, BindBest* best) noexcept nogil:
    cdef int cnt
    if i == n:
        if size and nx != full:
            cnt = popcount(nx)
            if (not best.found) or cnt * best.den < best.num * size or (
                cnt * best.den == best.num * size and c_lex_less(x, best.x)
            ):
                best.num = cnt
                best.den = size
                best.x = x
                best.found = True
        return
    c_bind_visit(adj, n, full, i + 1, x | ((<uint64_t>1) << i), nx | adj[i], size + 1, best)
    c_bind_visit(adj, n, full, i + 1, x, nx, size, best)


def binding_search(adj, int n):
    cdef vector[uint64_t] a = _load(adj, n)
    cdef BindBest best
    best.found = False
    best.num = 0
    best.den = 1
    best.x = 0
    with nogil:
        c_bind_visit(a.data(), n, full_mask(n), 0, 0, 0, 0, &best)
    if not best.found:
        return None
    return best.num, best.den, best.x


# --- path factor search -----------------------------------------------------

cdef struct Search:
    const uint64_t* adj
    unordered_set[uint64_t]* failed
    int* out          # flat path storage, -1 separated
    int out_len


cdef bint c_viable(const uint64_t* adj, uint64_t rem) noexcept nogil:
    cdef uint64_t rest = rem
    cdef uint64_t comp
    while rest:
        comp = c_component(adj, rem, lowbit(rest))
        if popcount(comp) < 3:
            return False
        rest &= ~comp
    return True



# try left arms for a fixed right arm; seq holds left-reversed | v | right
cdef bint c_left(Search* s, uint64_t rem, int v, int* right, int nr, int* left, int nl,
                 uint64_t used, int last) noexcept nogil:
    cdef int total = nl + nr
    cdef int i, w, save
    cdef uint64_t cand, b
    if total >= 2 and nr > 0 and not (nl > 0 and left[0] < right[0]):
        save = s.out_len
        for i in range(nl - 1, -1, -1):
            s.out[s.out_len] = left[i]
            s.out_len += 1
        s.out[s.out_len] = v
        s.out_len += 1
        for i in range(nr):
            s.out[s.out_len] = right[i]
            s.out_len += 1
        s.out[s.out_len] = -1
        s.out_len += 1
        if c_solve(s, rem & ~used):
            return True
        s.out_len = save
    if total >= 4:
        return False
    cand = s.adj[last] & rem & ~used
    while cand:
        b = lowbit(cand)
        cand ^= b
        w = ctz(b)
        left[nl] = w
        if c_left(s, rem, v, right, nr, left, nl + 1, used | b, w):
            return True
    return False


cdef bint c_right(Search* s, uint64_t rem, int v, int* right, int nr, uint64_t used,
                  int last) noexcept nogil:
    cdef int left[4]
    cdef int w
    cdef uint64_t cand, b
    if nr > 0 and c_left(s, rem, v, right, nr, left, 0, used, v):
        return True
    if nr >= 4:
        return False
    cand = s.adj[last] & rem & ~used
    while cand:
        b = lowbit(cand)
        cand ^= b
        w = ctz(b)
        right[nr] = w
        if c_right(s, rem, v, right, nr + 1, used | b, w):
            return True
    return False


cdef int c_min_degree_vertex(const uint64_t* adj, uint64_t rem) noexcept nogil:
    cdef uint64_t it = rem
    cdef uint64_t b
    cdef int w, d
    cdef int best = -1
    cdef int best_d = 65
    while it:
        b = lowbit(it)
        it ^= b
        w = ctz(b)
        d = popcount(adj[w] & rem)
        if d < best_d:
            best_d = d
            best = w
    return best


cdef bint c_solve(Search* s, uint64_t rem) noexcept nogil:
    cdef int right[4]
    cdef int v
    if rem == 0:
        return True
    if s.failed.count(rem):
        return False
    if c_viable(s.adj, rem):
        v = c_min_degree_vertex(s.adj, rem)
        if c_right(s, rem, v, right, 0, (<uint64_t>1) << v, v):
            return True
    s.failed.insert(rem)
    return False


def path_factor_search(adj, int n):
    cdef vector[uint64_t] a = _load(adj, n)
    cdef unordered_set[uint64_t] failed
    cdef vector[int] buf
    buf.resize(2 * n + 2)
    cdef Search s
    s.adj = a.data()
    s.failed = &failed
    s.out = buf.data()
    s.out_len = 0
    cdef bint ok
    with nogil:
        ok = c_solve(&s, full_mask(n))
    if not ok:
        return None
    paths = []
    cur = []
    for i in range(s.out_len):
        if buf[i] < 0:
            paths.append(tuple(cur))
            cur = []
        else:
            cur.append(buf[i])
    return paths
