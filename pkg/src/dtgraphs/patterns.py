"""Named small patterns, induced-subgraph search, and chordality."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

from ._backend import kernels
from .graph import Graph, mask, members

if TYPE_CHECKING:
    from .recognition import PMaxPartition


@dataclass(frozen=True)
class Pattern:
    name: str
    n: int
    edges: tuple[tuple[int, int], ...]
    roles: dict[str, tuple[int, ...]] = field(default_factory=dict, compare=False)

    @property
    def bits(self) -> tuple[int, ...]:
        b = [0] * self.n
        for u, v in self.edges:
            b[u] |= 1 << v
            b[v] |= 1 << u
        return tuple(b)

    def visit_order(self) -> tuple[int, ...]:
        # highest degree first, then grow along edges so every later vertex
        # is constrained by an already-placed neighbour when possible
        bits = self.bits
        deg = [bin(b).count("1") for b in bits]
        order: list[int] = []
        placed = 0
        while len(order) < self.n:
            frontier = [v for v in range(self.n)
                        if not placed >> v & 1 and bits[v] & placed]
            pool = frontier or [v for v in range(self.n) if not placed >> v & 1]
            v = max(pool, key=lambda x: (deg[x], -x))
            order.append(v)
            placed |= 1 << v
        return tuple(order)

    def as_graph(self) -> Graph:
        return Graph(self.n, self.bits)


TWO_K2 = Pattern("TwoK2", 4, ((0, 1), (2, 3)))
C4 = Pattern("C4", 4, ((0, 1), (1, 2), (2, 3), (3, 0)))
P4 = Pattern("P4", 4, ((0, 1), (1, 2), (2, 3)), {"ends": (0, 3), "inner": (1, 2)})
K13 = Pattern("K13", 4, ((0, 1), (0, 2), (0, 3)), {"center": (0,), "leaves": (1, 2, 3)})
# apex 0 has degree 2; 1, 2 close the triangle; 3 hangs off 1, 4 off 2
BULL = Pattern(
    "Bull", 5, ((0, 1), (0, 2), (1, 2), (1, 3), (2, 4)),
    {"apex": (0,), "base": (1, 2), "leaves": (3, 4)},
)
NET = Pattern(
    "Net", 6, ((0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)),
    {"triangle": (0, 1, 2), "pendants": (3, 4, 5)},
)
SUN3 = Pattern(
    "Sun3", 6,
    ((0, 1), (1, 2), (0, 2), (3, 0), (3, 1), (4, 1), (4, 2), (5, 2), (5, 0)),
    {"triangle": (0, 1, 2), "outer": (3, 4, 5)},
)

PATTERNS = {p.name: p for p in (TWO_K2, C4, P4, K13, BULL, NET, SUN3)}


def cycle_pattern(k: int) -> Pattern:
    if k < 3:
        raise ValueError("cycles need at least 3 vertices")
    if k == 4:
        return C4
    return Pattern(f"C{k}", k, tuple((i, (i + 1) % k) for i in range(k)))


def path_pattern(k: int) -> Pattern:
    if k == 4:
        return P4
    return Pattern(f"P{k}", k, tuple((i, i + 1) for i in range(k - 1)))


@dataclass(frozen=True)
class Witness:
    """An induced copy of ``pattern``: ``vertices[k]`` hosts pattern vertex ``k``."""

    pattern: Pattern
    vertices: tuple[int, ...]

    @property
    def name(self) -> str:
        return self.pattern.name

    def role(self, name: str) -> tuple[int, ...]:
        return tuple(self.vertices[k] for k in self.pattern.roles[name])

    def verify(self, g: Graph) -> bool:
        vs = self.vertices
        if len(vs) != self.pattern.n or len(set(vs)) != len(vs):
            return False
        if any(not 0 <= v < g.n for v in vs):
            return False
        pbits = self.pattern.bits
        for a in range(len(vs)):
            for b in range(a + 1, len(vs)):
                if g.has_edge(vs[a], vs[b]) != bool(pbits[a] >> b & 1):
                    return False
        return True

    def to_json(self) -> dict:
        out = {"pattern": self.pattern.name, "vertices": list(self.vertices)}
        if self.pattern.roles:
            out["roles"] = {r: list(self.role(r)) for r in self.pattern.roles}
        return out


_PLANS: dict[Pattern, tuple] = {}


def _match(g: Graph, p: Pattern, allowed=None) -> Witness | None:
    plan = _PLANS.get(p)
    if plan is None:
        plan = _PLANS[p] = (p.bits, p.visit_order())
    found = kernels.match_induced(g.n, g.bits, p.n, plan[0], plan[1], allowed)
    return None if found is None else Witness(p, tuple(found))


def find_induced(g: Graph, p: Pattern) -> Witness | None:
    return _match(g, p)


def _mcs_order(g: Graph) -> list[int]:
    """Maximum cardinality search; returns a candidate perfect elimination
    ordering (reverse of the visit order)."""
    n = g.n
    weight = [0] * n
    numbered = [False] * n
    visit = []
    adj = g.adjacency
    for _ in range(n):
        best = -1
        for v in range(n):
            if not numbered[v] and (best < 0 or weight[v] > weight[best]):
                best = v
        numbered[best] = True
        visit.append(best)
        for u in adj[best]:
            if not numbered[u]:
                weight[u] += 1
    visit.reverse()
    return visit


def _cycle_through(g: Graph, v: int, a: int, b: int) -> tuple[int, ...] | None:
    """Chordless cycle ``v, a, ..., b`` using a shortest a-b path that avoids
    the rest of ``N[v]``; ``a`` and ``b`` must be non-adjacent neighbours of ``v``."""
    blocked = g.bits[v] | (1 << v)
    blocked &= ~((1 << a) | (1 << b))
    prev = {a: -1}
    queue = deque([a])
    adj = g.adjacency
    while queue:
        x = queue.popleft()
        if x == b:
            break
        for y in adj[x]:
            if y not in prev and not blocked >> y & 1:
                prev[y] = x
                queue.append(y)
    if b not in prev:
        return None
    path = []
    x = b
    while x != -1:
        path.append(x)
        x = prev[x]
    path.reverse()
    return (v, *path)


def _find_chordless_cycle(g: Graph, hint: tuple[int, int, int] | None) -> Witness:
    candidates = []
    if hint is not None:
        candidates.append(hint)
    for v in range(g.n):
        nb = g.adjacency[v]
        for x in range(len(nb)):
            for y in range(x + 1, len(nb)):
                if not g.has_edge(nb[x], nb[y]):
                    candidates.append((v, nb[x], nb[y]))
    for v, a, b in candidates:
        cyc = _cycle_through(g, v, a, b)
        if cyc is not None:
            return Witness(cycle_pattern(len(cyc)), cyc)
    raise AssertionError("non-chordal graph without a chordless cycle")


def is_chordal(g: Graph) -> tuple[bool, Witness | None]:
    """MCS + perfect-elimination check; a chordless cycle witnesses failure."""
    order = _mcs_order(g)
    pos = [0] * g.n
    for k, v in enumerate(order):
        pos[v] = k
    for v in order:
        later = [u for u in g.adjacency[v] if pos[u] > pos[v]]
        if len(later) < 2:
            continue
        u = min(later, key=lambda x: pos[x])
        need = mask(later) & ~(1 << u)
        missing = need & ~g.bits[u]
        if missing:
            x = next(members(missing))
            return False, _find_chordless_cycle(g, (v, u, x))
    return True, None


def is_semi_unit_interval(g: Graph) -> tuple[bool, Witness | None]:
    ok, w = is_chordal(g)
    if not ok:
        return False, w
    for p in (NET, SUN3):
        w = _match(g, p)
        if w is not None:
            return False, w
    return True, None


def find_forbidden_bull_partition(g: Graph, part: "PMaxPartition") -> Witness | None:
    """Induced bull with its degree-2 vertex in V_T and the other four in V_U."""
    vt, vu = mask(part.vt), mask(part.vu)
    return _match(g, BULL, (vt, vu, vu, vu, vu))


def find_forbidden_k13_partition(g: Graph, part: "PMaxPartition") -> Witness | None:
    """Induced K_{1,3} entirely in V_U, or with exactly one leaf in V_T."""
    vt, vu = mask(part.vt), mask(part.vu)
    w = _match(g, K13, (vu, vu, vu, vu))
    if w is None:
        w = _match(g, K13, (vu, vt, vu, vu))
    return w
