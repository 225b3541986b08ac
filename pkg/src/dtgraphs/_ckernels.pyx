# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the kernels in ``_pykernels``.

Bitset kernels work on 64-bit words and hand graphs with more than 64
vertices to the pure-Python versions.  Results (including which witness or
assignment is found first) are identical to the fallback.
"""
from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free

from . import _pykernels

BACKEND = "cython"
DEF WORD = 64


cdef inline int ctz(uint64_t x) nogil:
    return __builtin_ctzll(x)


cdef inline int popcnt(uint64_t x) nogil:
    return __builtin_popcountll(x)


cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_popcountll(unsigned long long) nogil


def solve_2sat(int nvars, clauses):
    cdef int nlit = 2 * nvars
    cdef int m = len(clauses)
    cdef int *deg = <int *> malloc((nlit + 1) * sizeof(int))
    cdef int *start = <int *> malloc((nlit + 1) * sizeof(int))
    cdef int *fill = <int *> malloc((nlit + 1) * sizeof(int))
    cdef int *succ = <int *> malloc((2 * m + 1) * sizeof(int))
    cdef int *ca = <int *> malloc((m + 1) * sizeof(int))
    cdef int *cb = <int *> malloc((m + 1) * sizeof(int))
    cdef int *index = <int *> malloc((nlit + 1) * sizeof(int))
    cdef int *low = <int *> malloc((nlit + 1) * sizeof(int))
    cdef int *comp = <int *> malloc((nlit + 1) * sizeof(int))
    cdef char *on_stack = <char *> malloc(nlit + 1)
    cdef int *stack = <int *> malloc((nlit + 1) * sizeof(int))
    cdef int *work_v = <int *> malloc((nlit + 1) * sizeof(int))
    cdef int *work_p = <int *> malloc((nlit + 1) * sizeof(int))
    cdef int i, a, b, v, u, pos, root, sp = 0, wp, counter = 0, ncomp = 0, parent
    try:
        for i in range(nlit + 1):
            deg[i] = 0
        i = 0
        for a, b in clauses:
            ca[i] = a
            cb[i] = b
            deg[a ^ 1] += 1
            deg[b ^ 1] += 1
            i += 1
        start[0] = 0
        for i in range(nlit):
            start[i + 1] = start[i] + deg[i]
            fill[i] = start[i]
        # same insertion order as the list-of-lists fallback
        for i in range(m):
            succ[fill[ca[i] ^ 1]] = cb[i]
            fill[ca[i] ^ 1] += 1
            succ[fill[cb[i] ^ 1]] = ca[i]
            fill[cb[i] ^ 1] += 1
        for i in range(nlit):
            index[i] = -1
            comp[i] = -1
            on_stack[i] = 0
        for root in range(nlit):
            if index[root] >= 0:
                continue
            wp = 0
            work_v[0] = root
            work_p[0] = 0
            wp = 1
            index[root] = counter
            low[root] = counter
            counter += 1
            stack[sp] = root
            sp += 1
            on_stack[root] = 1
            while wp:
                v = work_v[wp - 1]
                pos = work_p[wp - 1]
                if pos < start[v + 1] - start[v]:
                    work_p[wp - 1] = pos + 1
                    u = succ[start[v] + pos]
                    if index[u] < 0:
                        index[u] = counter
                        low[u] = counter
                        counter += 1
                        stack[sp] = u
                        sp += 1
                        on_stack[u] = 1
                        work_v[wp] = u
                        work_p[wp] = 0
                        wp += 1
                    elif on_stack[u] and index[u] < low[v]:
                        low[v] = index[u]
                    continue
                wp -= 1
                if wp:
                    parent = work_v[wp - 1]
                    if low[v] < low[parent]:
                        low[parent] = low[v]
                if low[v] == index[v]:
                    while True:
                        sp -= 1
                        u = stack[sp]
                        on_stack[u] = 0
                        comp[u] = ncomp
                        if u == v:
                            break
                    ncomp += 1
        out = []
        for v in range(nvars):
            if comp[2 * v] == comp[2 * v + 1]:
                return None
            out.append(comp[2 * v] < comp[2 * v + 1])
        return out
    finally:
        free(deg); free(start); free(fill); free(succ); free(ca); free(cb)
        free(index); free(low); free(comp); free(on_stack); free(stack)
        free(work_v); free(work_p)


cdef struct Matcher:
    int n
    int pn
    uint64_t full
    uint64_t bits[WORD]
    int deg[WORD]
    uint64_t pbits[WORD]
    int pdeg[WORD]
    int order[WORD]
    uint64_t allowed[WORD]
    int mapping[WORD]


cdef bint _rec(Matcher *s, int k, uint64_t used) nogil:
    cdef int pv, t, q, v
    cdef uint64_t cand, pb
    if k == s.pn:
        return True
    pv = s.order[k]
    cand = s.full & ~used & s.allowed[pv]
    pb = s.pbits[pv]
    for t in range(k):
        q = s.order[t]
        if (pb >> q) & 1:
            cand &= s.bits[s.mapping[q]]
        else:
            cand &= ~s.bits[s.mapping[q]]
    while cand:
        v = ctz(cand)
        cand &= cand - 1
        if s.deg[v] < s.pdeg[pv]:
            continue
        s.mapping[pv] = v
        if _rec(s, k + 1, used | ((<uint64_t> 1) << v)):
            return True
    s.mapping[pv] = -1
    return False


def match_induced(int n, bits, int pn, pbits, order, allowed):
    if n > WORD or pn > WORD:
        return _pykernels.match_induced(n, bits, pn, pbits, order, allowed)
    if pn > n:
        return None
    cdef Matcher s
    cdef int i
    s.n = n
    s.pn = pn
    s.full = ((<uint64_t> 1) << n) - 1 if n < WORD else <uint64_t> -1
    for i in range(n):
        s.bits[i] = bits[i]
        s.deg[i] = popcnt(s.bits[i])
    for i in range(pn):
        s.pbits[i] = pbits[i]
        s.pdeg[i] = popcnt(s.pbits[i])
        s.order[i] = order[i]
        s.allowed[i] = s.full if allowed is None else (<uint64_t> (allowed[i] & s.full))
        s.mapping[i] = -1
    if _rec(&s, 0, 0):
        return tuple([s.mapping[i] for i in range(pn)])
    return None


def preorder_rows(int n, bits):
    if n > WORD:
        return _pykernels.preorder_rows(n, bits)
    cdef uint64_t b[WORD]
    cdef uint64_t r
    cdef int i, j
    for i in range(n):
        b[i] = bits[i]
    rows = []
    for i in range(n):
        r = 0
        for j in range(n):
            if not (b[i] & ~((<uint64_t> 1) << j) & ~b[j]):
                r |= (<uint64_t> 1) << j
        rows.append(int(r))
    return rows


def claw_leaf_pairs(int n, bits):
    if n > WORD:
        return _pykernels.claw_leaf_pairs(n, bits)
    cdef uint64_t b[WORD]
    cdef uint64_t nk, rest_i, js
    cdef int i, j, k
    for i in range(n):
        b[i] = bits[i]
    out = []
    for k in range(n):
        nk = b[k]
        pairs = []
        it = nk
        while it:
            i = ctz(it)
            it &= it - 1
            rest_i = nk & ~b[i] & ~((<uint64_t> 1) << i)
            js = rest_i >> (i + 1) << (i + 1) if i + 1 < WORD else 0
            while js:
                j = ctz(js)
                js &= js - 1
                if rest_i & ~b[j] & ~((<uint64_t> 1) << j):
                    pairs.append((i, j))
        out.append(pairs)
    return out


def bull_leaf_pairs(int n, bits, int p):
    if n > WORD:
        return _pykernels.bull_leaf_pairs(n, bits, p)
    cdef uint64_t b[WORD]
    cdef uint64_t np_, closed_p, s1, s2, c1, c2, s3, s4
    cdef int i, j1, j2, k1, k2
    for i in range(n):
        b[i] = bits[i]
    np_ = b[p]
    closed_p = np_ | ((<uint64_t> 1) << p)
    found = set()
    s1 = np_
    while s1:
        j1 = ctz(s1)
        s1 &= s1 - 1
        s2 = np_ & b[j1]
        while s2:
            j2 = ctz(s2)
            s2 &= s2 - 1
            if j2 <= j1:
                continue
            c1 = b[j1] & ~b[j2] & ~closed_p & ~((<uint64_t> 1) << j2)
            c2 = b[j2] & ~b[j1] & ~closed_p & ~((<uint64_t> 1) << j1)
            s3 = c1
            while s3:
                k1 = ctz(s3)
                s3 &= s3 - 1
                s4 = c2 & ~b[k1] & ~((<uint64_t> 1) << k1)
                while s4:
                    k2 = ctz(s4)
                    s4 &= s4 - 1
                    found.add((k1, k2) if k1 < k2 else (k2, k1))
    return sorted(found)
