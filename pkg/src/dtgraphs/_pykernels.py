"""Pure-Python implementations of the hot kernels.

Every function here has an identically named, identically behaving
counterpart in ``_ckernels.pyx``.  Graphs are passed as ``(n, bits)`` where
``bits[i]`` is the neighbour bitmask of vertex ``i``.  2SAT literals are
encoded as ``2*v`` (``x_v``) and ``2*v + 1`` (``not x_v``).
"""
from __future__ import annotations

BACKEND = "python"


def _iter_bits(m):
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


def solve_2sat(nvars, clauses):
    """Return a satisfying assignment (list of bools) or ``None``.

    Implication graph + iterative Tarjan SCC.  Tarjan emits components in
    reverse topological order, so ``x_v`` is true iff its component was
    emitted before the component of ``not x_v``.
    """
    nlit = 2 * nvars
    succ = [[] for _ in range(nlit)]
    for a, b in clauses:
        succ[a ^ 1].append(b)
        succ[b ^ 1].append(a)

    index = [-1] * nlit
    low = [0] * nlit
    comp = [-1] * nlit
    on_stack = [False] * nlit
    stack = []
    counter = 0
    ncomp = 0
    for root in range(nlit):
        if index[root] >= 0:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, pos = work[-1]
            edges = succ[v]
            if pos < len(edges):
                work[-1] = (v, pos + 1)
                u = edges[pos]
                if index[u] < 0:
                    index[u] = low[u] = counter
                    counter += 1
                    stack.append(u)
                    on_stack[u] = True
                    work.append((u, 0))
                elif on_stack[u] and index[u] < low[v]:
                    low[v] = index[u]
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                if low[v] < low[parent]:
                    low[parent] = low[v]
            if low[v] == index[v]:
                while True:
                    u = stack.pop()
                    on_stack[u] = False
                    comp[u] = ncomp
                    if u == v:
                        break
                ncomp += 1
    out = []
    for v in range(nvars):
        cp, cn = comp[2 * v], comp[2 * v + 1]
        if cp == cn:
            return None
        out.append(cp < cn)
    return out


def match_induced(n, bits, pn, pbits, order, allowed):
    """First injective map pattern -> host inducing exactly ``pbits``.

    ``order`` is the pattern-vertex visiting order; ``allowed`` is ``None``
    or a per-pattern-vertex host mask.  Returns a tuple indexed by pattern
    vertex, or ``None``.
    """
    if pn > n:
        return None
    full = (1 << n) - 1
    deg = [bin(b).count("1") for b in bits]
    pdeg = [bin(b).count("1") for b in pbits]
    mapping = [-1] * pn

    def rec(k, used):
        if k == pn:
            return tuple(mapping)
        pv = order[k]
        cand = full & ~used
        if allowed is not None:
            cand &= allowed[pv]
        pb = pbits[pv]
        for t in range(k):
            q = order[t]
            h = mapping[q]
            if pb >> q & 1:
                cand &= bits[h]
            else:
                cand &= ~bits[h]
        need = pdeg[pv]
        for v in _iter_bits(cand):
            if deg[v] < need:
                continue
            mapping[pv] = v
            found = rec(k + 1, used | (1 << v))
            if found is not None:
                return found
        mapping[pv] = -1
        return None

    return rec(0, 0)


def preorder_rows(n, bits):
    """``rows[i]`` has bit ``j`` set iff ``N(i) - {j}`` is a subset of ``N(j)``."""
    rows = []
    for i in range(n):
        bi = bits[i]
        r = 0
        for j in range(n):
            if not (bi & ~(1 << j) & ~bits[j]):
                r |= 1 << j
        rows.append(r)
    return rows


def claw_leaf_pairs(n, bits):
    """For each vertex ``k``: sorted pairs ``(i, j)``, ``i < j``, of
    non-adjacent neighbours of ``k`` that extend to an induced K_{1,3}
    centred at ``k`` (some third neighbour adjacent to neither)."""
    out = []
    for k in range(n):
        nk = bits[k]
        pairs = []
        for i in _iter_bits(nk):
            rest_i = nk & ~bits[i] & ~(1 << i)
            for j in _iter_bits(rest_i >> (i + 1) << (i + 1)):
                if rest_i & ~bits[j] & ~(1 << j):
                    pairs.append((i, j))
        out.append(pairs)
    return out


def bull_leaf_pairs(n, bits, p):
    """Leaf pairs ``(k1, k2)``, ``k1 < k2``, of induced bulls whose
    degree-2 vertex is ``p``."""
    np_ = bits[p]
    closed_p = np_ | (1 << p)
    found = set()
    for j1 in _iter_bits(np_):
        for j2 in _iter_bits(np_ & bits[j1]):
            if j2 <= j1:
                continue
            c1 = bits[j1] & ~bits[j2] & ~closed_p & ~(1 << j2)
            c2 = bits[j2] & ~bits[j1] & ~closed_p & ~(1 << j1)
            for k1 in _iter_bits(c1):
                for k2 in _iter_bits(c2 & ~bits[k1] & ~(1 << k1)):
                    found.add((k1, k2) if k1 < k2 else (k2, k1))
    return sorted(found)
