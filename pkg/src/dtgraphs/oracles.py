"""Brute-force reference implementations.

Nothing here shares code with the fast paths beyond the ``Graph`` container:
neighbourhoods are recomputed as Python sets, patterns are matched by
permutation, and satisfiability is decided by enumeration.
"""
from __future__ import annotations

from itertools import combinations, permutations, product

from .errors import TooLarge
from .graph import Graph
from .patterns import K13, NET, SUN3, Pattern, Witness
from .twosat import TwoSatInstance

MAX_DT = 12
MAX_COVER = 10
MAX_2SAT = 20
MAX_INDUCED = 10


def _cap(n: int, limit: int, what: str) -> None:
    if n > limit:
        raise TooLarge(f"{what} oracle is capped at {limit}, got {n}")


def _nbrs(g: Graph) -> list[set[int]]:
    return [set(u for u in range(g.n) if u != v and g.has_edge(u, v)) for v in range(g.n)]


def _components(nb: list[set[int]], vertices) -> list[set[int]]:
    left = set(vertices)
    out = []
    while left:
        start = min(left)
        comp, stack = {start}, [start]
        while stack:
            v = stack.pop()
            for u in nb[v]:
                if u in left and u not in comp:
                    comp.add(u)
                    stack.append(u)
        out.append(comp)
        left -= comp
    return out


def brute_find_induced(g: Graph, p: Pattern) -> Witness | None:
    """First k-subset (lexicographic) with an ordering matching ``p`` exactly."""
    _cap(g.n, MAX_INDUCED, "induced-subgraph")
    pe = {frozenset(e) for e in p.edges}
    for sub in combinations(range(g.n), p.n):
        for perm in permutations(sub):
            if all(g.has_edge(perm[a], perm[b]) == (frozenset((a, b)) in pe)
                   for a, b in combinations(range(p.n), 2)):
                return Witness(p, perm)
    return None


def _has_chordless_cycle(g: Graph) -> bool:
    nb = _nbrs(g)
    for k in range(4, g.n + 1):
        for sub in combinations(range(g.n), k):
            s = set(sub)
            if all(len(nb[v] & s) == 2 for v in sub) and len(_components(nb, s)) == 1:
                return True
    return False


def brute_is_chordal(g: Graph) -> bool:
    _cap(g.n, MAX_DT, "chordality")
    return not _has_chordless_cycle(g)


def brute_is_unit_interval(g: Graph) -> bool:
    """Chordal and free of claw, net and 3-sun, all by exhaustive search."""
    _cap(g.n, MAX_DT, "unit interval")
    if _has_chordless_cycle(g):
        return False
    return not any(_has_pattern(g, p) for p in (K13, NET, SUN3))


def _has_pattern(g: Graph, p: Pattern) -> bool:
    if g.n <= MAX_INDUCED:
        return brute_find_induced(g, p) is not None
    pe = {frozenset(e) for e in p.edges}
    for sub in combinations(range(g.n), p.n):
        for perm in permutations(sub):
            if all(g.has_edge(perm[a], perm[b]) == (frozenset((a, b)) in pe)
                   for a, b in combinations(range(p.n), 2)):
                return True
    return False


def _rel(nb, i, j) -> bool:
    return (nb[i] - {j}) <= nb[j]


def _layers(nb, vertices: set[int], c0: set[int]) -> list[set[int]] | None:
    layers = [set(c0)]
    seen = set(c0)
    while True:
        nxt = set().union(*(nb[v] for v in layers[-1])) - seen
        if not nxt:
            break
        layers.append(nxt)
        seen |= nxt
    return layers if seen == vertices else None


def _conditions(nb, layers: list[set[int]]) -> bool:
    c0 = sorted(layers[0])
    for i, j in combinations(c0, 2):
        if not (_rel(nb, i, j) or _rel(nb, j, i)):
            return False
    for layer in layers[1:]:
        for i, j in combinations(sorted(layer), 2):
            if j not in nb[i]:
                return False
    padded = layers + [set()]
    for l in range(1, len(layers)):
        below, above = padded[l - 1], padded[l + 1]
        for i, j in combinations(sorted(layers[l]), 2):
            ij = (nb[j] & below) <= (nb[i] & below) and (nb[i] & above) <= (nb[j] & above)
            ji = (nb[i] & below) <= (nb[j] & below) and (nb[j] & above) <= (nb[i] & above)
            if not (ij or ji):
                return False
    return True


def valid_seeds(g: Graph, vertices=None):
    """Every nonempty ``C_0`` inside ``vertices`` (default: all) whose
    decomposition of that vertex set satisfies the three layer conditions.
    Yields ``(c0, layers)``."""
    nb = _nbrs(g)
    vs = set(range(g.n)) if vertices is None else set(vertices)
    nb = [s & vs for s in nb]
    order = sorted(vs)
    for k in range(1, len(order) + 1):
        for c0 in combinations(order, k):
            # subsets that are already not totally preordered cannot pass (i)
            if any(not (_rel(nb, i, j) or _rel(nb, j, i)) for i, j in combinations(c0, 2)):
                continue
            layers = _layers(nb, vs, set(c0))
            if layers is not None and _conditions(nb, layers):
                yield set(c0), layers


def _component_is_dt(g: Graph, comp: set[int]) -> bool:
    h, _ = g.induced(sorted(comp))
    if brute_is_unit_interval(h):
        return True
    return next(valid_seeds(g, comp), None) is not None


def brute_force_is_dt(g: Graph) -> bool:
    """Isolates are ignored; each remaining component must be unit interval
    or admit a valid layered decomposition, and at most one component may
    fail to be unit interval."""
    _cap(g.n, MAX_DT, "DT")
    nb = _nbrs(g)
    comps = [c for c in _components(nb, range(g.n)) if len(c) > 1]
    non_ui = 0
    for c in comps:
        h, _ = g.induced(sorted(c))
        if brute_is_unit_interval(h):
            continue
        non_ui += 1
        if non_ui > 1 or next(valid_seeds(g, c), None) is None:
            return False
    return True


def brute_min_layers(g: Graph) -> int | None:
    """Smallest ``m`` over every valid ``C_0`` of a connected graph."""
    _cap(g.n, MAX_DT, "layer")
    best = None
    for _, layers in valid_seeds(g):
        m = len(layers) - 1
        if best is None or m < best:
            best = m
    return best


def brute_triangle_count(g: Graph) -> int:
    return sum(1 for a, b, c in combinations(range(g.n), 3)
               if g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c))


def _maximal_cliques(g: Graph) -> list[frozenset[int]]:
    nb = _nbrs(g)
    cliques = []
    for k in range(g.n, 1, -1):
        for sub in combinations(range(g.n), k):
            s = frozenset(sub)
            if all(s - {v} <= nb[v] for v in s) and not any(s < c for c in cliques):
                cliques.append(s)
    return cliques


def brute_min_edge_clique_cover(g: Graph) -> int:
    """Fewest maximal cliques covering every edge (every minimum cover can be
    taken to use maximal cliques)."""
    _cap(g.n, MAX_COVER, "edge clique cover")
    edges = [frozenset(e) for e in g.edges()]
    if not edges:
        return 0
    cliques = _maximal_cliques(g)
    for k in range(1, len(cliques) + 1):
        for pick in combinations(cliques, k):
            if all(any(e <= c for c in pick) for e in edges):
                return k
    raise AssertionError("maximal cliques always cover the edges")


def brute_2sat(inst: TwoSatInstance) -> list[bool] | None:
    """First satisfying assignment in lexicographic order (False < True)."""
    _cap(inst.nvars, MAX_2SAT, "2SAT")
    for bits in product((False, True), repeat=inst.nvars):
        if all(bits[a] == pa or bits[b] == pb for (a, pa), (b, pb) in inst.clauses):
            return list(bits)
    return None


def lp_realizable(g: Graph, big: float = 1e4) -> bool:
    """Decide DT-ness directly as a mixed-integer feasibility problem over
    ``(w, alpha, beta)``.

    The edge rule is scale invariant, so strict inequalities are replaced by
    a unit margin.  Each non-edge picks one of three violated constraints
    through binary indicators with big-M relaxation.
    """
    import numpy as np
    from scipy.optimize import Bounds, LinearConstraint, milp

    n = g.n
    if n <= 1:
        return True
    non_edges = [(i, j) for i, j in combinations(range(n), 2) if not g.has_edge(i, j)]
    # variables: w_0..w_{n-1}, alpha, beta, then 3 binaries per non-edge
    a_i, b_i = n, n + 1
    nv = n + 2 + 3 * len(non_edges)
    rows, lo, hi = [], [], []

    def add(coef: dict, low, high):
        r = np.zeros(nv)
        for k, v in coef.items():
            r[k] += v
        rows.append(r)
        lo.append(low)
        hi.append(high)

    inf = np.inf
    add({a_i: 1, b_i: -1}, 0, inf)
    for i, j in combinations(range(n), 2):
        if g.has_edge(i, j):
            add({i: 1, j: 1, a_i: -1}, 0, inf)
            add({i: 1, j: -1, b_i: -1}, -inf, 0)
            add({j: 1, i: -1, b_i: -1}, -inf, 0)
    for k, (i, j) in enumerate(non_edges):
        z = n + 2 + 3 * k
        add({i: 1, j: 1, a_i: -1, z: big}, -inf, big - 1)
        add({i: 1, j: -1, b_i: -1, z + 1: -big}, 1 - big, inf)
        add({j: 1, i: -1, b_i: -1, z + 2: -big}, 1 - big, inf)
        add({z: 1, z + 1: 1, z + 2: 1}, 1, inf)
    lb = np.zeros(nv)
    ub = np.full(nv, inf)
    lb[:n] = 1
    lb[b_i] = 1
    ub[n + 2:] = 1
    ub[:n + 2] = big / 4
    integrality = np.zeros(nv)
    integrality[n + 2:] = 1
    res = milp(np.zeros(nv), constraints=LinearConstraint(np.array(rows), lo, hi),
               integrality=integrality, bounds=Bounds(lb, ub))
    return res.status == 0
