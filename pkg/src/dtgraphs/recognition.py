"""Recognition of doubly threshold graphs.

The pipeline screens for chordless cycles, nets and 3-suns, accepts unit
interval graphs directly, and otherwise searches for a vertex ``p`` whose
2SAT instance yields a partition ``(V_T, V_U)``; ``V_T`` seeds the distance
decomposition from which weights are synthesized.  Every answer carries a
certificate that can be re-checked independently of how it was found.
"""
from __future__ import annotations

import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from ._backend import kernels
from .errors import IndexOutOfRange, InvalidParameters, SynthesisFailed
from .graph import DistanceDecomposition, Graph, connected_components, mask, members
from .patterns import K13, NET, SUN3, Witness, _match, find_forbidden_bull_partition, \
    find_forbidden_k13_partition, is_chordal
from .twosat import TwoSatInstance, neg, pos, solve
from .weights import (
    DEFAULT_ALPHA, DEFAULT_BETA, WeightAssignment, as_rational, check_theorem_conditions,
    decompose_from_c0, synthesize, verify_dt,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class PMaxPartition:
    p: int | None
    vt: frozenset[int]
    vu: frozenset[int]

    def validate(self, n: int) -> None:
        if self.vt & self.vu or (self.vt | self.vu) != frozenset(range(n)):
            raise InvalidParameters("V_T and V_U must partition the vertex set")
        if self.p is not None and self.p not in self.vt:
            raise InvalidParameters("p must lie in V_T")

    def to_json(self) -> dict:
        return {"p": self.p, "vt": sorted(self.vt), "vu": sorted(self.vu)}


class VicinalPreorder:
    """``i R j`` iff ``N(i) - {j}`` is a subset of ``N(j)``."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: list[int]):
        self.n = n
        self.rows = tuple(rows)

    def holds(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    def comparable(self, i: int, j: int) -> bool:
        return self.holds(i, j) or self.holds(j, i)

    def incomparable_pairs(self, within: int | None = None) -> list[tuple[int, int]]:
        out = []
        rows = self.rows
        scope = (1 << self.n) - 1 if within is None else within
        for i in members(scope):
            bad = scope & ~rows[i] >> (i + 1) << (i + 1)
            for j in members(bad):
                if not rows[j] >> i & 1:
                    out.append((i, j))
        return out

    def is_total(self, within: int | None = None) -> bool:
        return not self.incomparable_pairs(within)


def vicinal_preorder(g: Graph) -> VicinalPreorder:
    return VicinalPreorder(g.n, kernels.preorder_rows(g.n, g.bits))


def is_threshold(g: Graph) -> bool:
    return vicinal_preorder(g).is_total()


# -- unit interval graphs -------------------------------------------------

def _lexbfs(g: Graph, prev: list[int] | None = None) -> list[int]:
    """LexBFS; with ``prev`` given this is LexBFS+, breaking ties in favour
    of the vertex that appears last in ``prev``."""
    n = g.n
    rank = {v: k for k, v in enumerate(prev)} if prev is not None else None
    labels: list[list[int]] = [[] for _ in range(n)]
    done = [False] * n
    order = []
    adj = g.adjacency
    for step in range(n):
        best, best_key = -1, None
        for v in range(n):
            if done[v]:
                continue
            key = (labels[v], rank[v] if rank is not None else -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        done[best] = True
        order.append(best)
        for u in adj[best]:
            if not done[u]:
                labels[u].append(n - step)
    return order


def _umbrella_reach(g: Graph, order: list[int]) -> list[int] | None:
    """``reach[k]`` = last position adjacent to position ``k`` when the
    ordering has the umbrella property, else ``None``."""
    n = g.n
    pos_of = [0] * n
    for k, v in enumerate(order):
        pos_of[v] = k
    reach = []
    for k, v in enumerate(order):
        later = [pos_of[u] for u in g.adjacency[v] if pos_of[u] > k]
        r = max(later, default=k)
        if r - k != len(later):
            return None
        if reach and r < reach[-1]:
            return None
        reach.append(r)
    return reach


def _integer_positions(reach: list[int]) -> tuple[list[int], int]:
    """Non-decreasing integers ``x`` and a span ``t`` with
    ``x[j] - x[k] <= t`` iff ``j <= reach[k]`` (for ``j > k``), solved as
    difference constraints with Bellman-Ford."""
    n = len(reach)
    t = max(n, 1)
    while True:
        arcs = []
        for k in range(n - 1):
            arcs.append((k + 1, k, 0))
        for k, r in enumerate(reach):
            if r > k:
                arcs.append((k, r, t))
            if r + 1 < n:
                arcs.append((r + 1, k, -t - 1))
        dist = [0] * n
        for _ in range(n + 1):
            changed = False
            for a, b, c in arcs:
                if dist[a] + c < dist[b]:
                    dist[b] = dist[a] + c
                    changed = True
            if not changed:
                base = min(dist, default=0)
                return [d - base for d in dist], t
        t *= 2
        if t > 4 * (n + 1) ** 2:
            raise SynthesisFailed("no integer unit interval model for an umbrella ordering")


def unit_interval_order(g: Graph) -> list[int] | None:
    """A proper interval (umbrella) ordering, or ``None`` if the LexBFS+
    sweeps do not produce one."""
    order = _lexbfs(g)
    for _ in range(3):
        order = _lexbfs(g, order)
        if _umbrella_reach(g, order) is not None:
            return order
    return None


def unit_interval_witness(g: Graph) -> Witness | None:
    ok, w = is_chordal(g)
    if not ok:
        return w
    for p in (K13, NET, SUN3):
        w = _match(g, p)
        if w is not None:
            return w
    return None


def is_unit_interval(g: Graph, alpha=DEFAULT_ALPHA, beta=DEFAULT_BETA
                     ) -> tuple[WeightAssignment | None, Witness | None]:
    """DT weights realizing ``g`` purely through the difference test, or the
    forbidden induced subgraph that rules it out."""
    alpha, beta = as_rational(alpha), as_rational(beta)
    witness = unit_interval_witness(g)
    if witness is not None:
        return None, witness
    return _unit_interval_weights(g, alpha, beta), None


def _unit_interval_weights(g: Graph, alpha: Fraction, beta: Fraction) -> WeightAssignment:
    # caller has already ruled out every forbidden subgraph
    order = unit_interval_order(g)
    if order is None:
        raise SynthesisFailed("forbidden-subgraph free graph without an umbrella ordering")
    x, t = _integer_positions(_umbrella_reach(g, order))
    w = [Fraction(0)] * g.n
    for k, v in enumerate(order):
        w[v] = alpha / 2 + beta * Fraction(x[k] + 1, t)
    wa = WeightAssignment(alpha, beta, tuple(w))
    ok, pair = verify_dt(g, wa)
    if not ok:
        raise SynthesisFailed(f"unit interval weights disagree at {pair}")
    return wa


# -- the 2SAT reduction ---------------------------------------------------

class _Context:
    """Per-graph data shared by every candidate ``p``."""

    def __init__(self, g: Graph):
        self.g = g
        self.preorder = vicinal_preorder(g)
        self.incomparable = self.preorder.incomparable_pairs()
        self.claw_pairs = kernels.claw_leaf_pairs(g.n, g.bits)


def _w_mask(g: Graph, p: int) -> int:
    closed = g.bits[p] | (1 << p)
    return mask(i for i in range(g.n) if not g.bits[i] & ~closed)


def compute_w_set(g: Graph, p: int) -> frozenset[int]:
    if not 0 <= p < g.n:
        raise IndexOutOfRange(f"vertex {p} outside [0, {g.n})")
    return frozenset(members(_w_mask(g, p)))


def build_2sat(g: Graph, p: int, extra_unit_true: Iterable[int] = (),
               _ctx: _Context | None = None, *, omit: Iterable[str] = ()) -> TwoSatInstance:
    """Clauses for "some p-max partition has p in V_T".

    Families: "ii" fixes p and excludes V \\ W, "iii" non-adjacent pairs in
    N(p), "iv" incomparable pairs, "v" bull leaves with apex p, "vi" claw
    leaves of centres outside W.  ``omit`` drops families (ablation only).
    """
    omit = frozenset(omit)
    if not 0 <= p < g.n:
        raise IndexOutOfRange(f"vertex {p} outside [0, {g.n})")
    ctx = _ctx if _ctx is not None else _Context(g)
    bits = g.bits
    w = _w_mask(g, p)
    clauses: dict = {}
    if "ii" not in omit:
        clauses[(pos(p), pos(p))] = None
        for i in members(g.all_mask & ~w):
            clauses[(neg(i), neg(i))] = None
    if "iii" not in omit:
        np_ = list(members(bits[p]))
        for x, i in enumerate(np_):
            for j in np_[x + 1:]:
                if not bits[i] >> j & 1:
                    clauses[(pos(i), pos(j))] = None
    if "iv" not in omit:
        for i, j in ctx.incomparable:
            clauses[(neg(i), neg(j))] = None
    if "v" not in omit:
        for i, j in kernels.bull_leaf_pairs(g.n, bits, p):
            clauses[(pos(i), pos(j))] = None
    if "vi" not in omit:
        for k in members(g.all_mask & ~w):
            for i, j in ctx.claw_pairs[k]:
                clauses[(pos(i), pos(j))] = None
    for v in sorted(set(extra_unit_true)):
        if not 0 <= v < g.n:
            raise IndexOutOfRange(f"vertex {v} outside [0, {g.n})")
        clauses[(pos(v), pos(v))] = None
    return TwoSatInstance(g.n, tuple(clauses))


def p_max_partition(g: Graph, p: int, extra_unit_true: Iterable[int] = (),
                    _ctx: _Context | None = None) -> PMaxPartition | None:
    assignment = solve(build_2sat(g, p, extra_unit_true, _ctx))
    if assignment is None:
        return None
    vt = frozenset(i for i, x in enumerate(assignment) if x)
    return PMaxPartition(p, vt, frozenset(range(g.n)) - vt)


@dataclass(frozen=True)
class Admissibility:
    ok: bool
    condition: int | None = None
    witness: object = None

    def __bool__(self) -> bool:
        return self.ok


def is_p_admissible(g: Graph, part: PMaxPartition) -> Admissibility:
    part.validate(g.n)
    pre = vicinal_preorder(g)
    vt = mask(part.vt)
    vu = mask(part.vu)
    bad = pre.incomparable_pairs(vt)
    if bad:
        return Admissibility(False, 1, bad[0])
    if part.p is not None:
        for i in members(vt):
            if not pre.holds(i, part.p):
                return Admissibility(False, 2, (i, part.p))
    for i in members(vt):
        out = g.bits[i] & vu
        for a in members(out):
            missing = out & ~g.bits[a] & ~(1 << a)
            if missing:
                return Admissibility(False, 3, (i, a, next(members(missing))))
    w = find_forbidden_bull_partition(g, part) or find_forbidden_k13_partition(g, part)
    if w is not None:
        return Admissibility(False, 4, w)
    return Admissibility(True)


# -- certificates ---------------------------------------------------------

@dataclass(frozen=True)
class Certificate:
    kind = "certificate"
    is_dt = False

    def verify(self, g: Graph) -> bool:
        raise NotImplementedError

    def to_json(self) -> dict:
        raise NotImplementedError


@dataclass(frozen=True)
class ChordlessCycle(Certificate):
    witness: Witness
    kind = "chordless-cycle"

    def verify(self, g: Graph) -> bool:
        return self.witness.pattern.n >= 4 and self.witness.name.startswith("C") \
            and self.witness.verify(g)

    def to_json(self) -> dict:
        return {"kind": self.kind, "witness": self.witness.to_json()}


@dataclass(frozen=True)
class InducedNet(Certificate):
    witness: Witness
    kind = "induced-net"

    def verify(self, g: Graph) -> bool:
        return self.witness.pattern == NET and self.witness.verify(g)

    def to_json(self) -> dict:
        return {"kind": self.kind, "witness": self.witness.to_json()}


@dataclass(frozen=True)
class InducedSun(Certificate):
    witness: Witness
    kind = "induced-sun"

    def verify(self, g: Graph) -> bool:
        return self.witness.pattern == SUN3 and self.witness.verify(g)

    def to_json(self) -> dict:
        return {"kind": self.kind, "witness": self.witness.to_json()}


@dataclass(frozen=True)
class SeparatedClaws(Certificate):
    """Induced K_{1,3} in two different components.

    A claw forces its lighter leaves below ``alpha/2`` and its centre within
    ``beta`` of them; two such configurations cannot avoid each other, so at
    most one component of a DT graph can contain a claw.
    """

    first: Witness
    second: Witness
    kind = "separated-claws"

    def verify(self, g: Graph) -> bool:
        if not (self.first.pattern == K13 and self.second.pattern == K13):
            return False
        if not (self.first.verify(g) and self.second.verify(g)):
            return False
        comp = {v: k for k, c in enumerate(connected_components(g)) for v in c}
        return comp[self.first.vertices[0]] != comp[self.second.vertices[0]]

    def to_json(self) -> dict:
        return {"kind": self.kind, "witnesses": [self.first.to_json(), self.second.to_json()]}


@dataclass(frozen=True)
class NoAdmissiblePartition(Certificate):
    """Every candidate ``p`` of ``component`` failed; ``attempts`` maps each
    candidate to the reason."""

    component: tuple[int, ...]
    attempts: tuple[tuple[int, str], ...]
    kind = "no-admissible-partition"

    def verify(self, g: Graph) -> bool:
        h, labels = g.induced(self.component)
        if not set(labels) == set(self.component):
            return False
        index = {v: k for k, v in enumerate(labels)}
        if {p for p, _ in self.attempts} != set(self.component):
            return False
        ctx = _Context(h)
        for p, reason in self.attempts:
            if reason == "unsatisfiable" and p_max_partition(h, index[p], (), ctx) is not None:
                return False
        return True

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "component": list(self.component),
            "attempts": [{"p": p, "reason": r} for p, r in self.attempts],
        }


@dataclass(frozen=True)
class Decomposition(Certificate):
    decomposition: DistanceDecomposition
    weights: WeightAssignment
    partition: PMaxPartition | None = None
    kind = "decomposition"
    is_dt = True

    def verify(self, g: Graph) -> bool:
        return verify_dt(g, self.weights)[0]

    def to_json(self) -> dict:
        out = {
            "kind": self.kind,
            "decomposition": self.decomposition.to_json(),
            "weights": self.weights.to_json(),
        }
        if self.partition is not None:
            out["partition"] = self.partition.to_json()
        return out


@dataclass(frozen=True)
class UnitInterval(Certificate):
    weights: WeightAssignment
    kind = "unit-interval"
    is_dt = True

    def verify(self, g: Graph) -> bool:
        return verify_dt(g, self.weights)[0]

    def to_json(self) -> dict:
        return {"kind": self.kind, "weights": self.weights.to_json()}


# -- the recognition pipeline ----------------------------------------------

def _thread_cap() -> int:
    raw = os.environ.get("DTGRAPHS_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return os.cpu_count() or 1


def _attempt(h: Graph, p: int, ctx: _Context, alpha, beta):
    part = p_max_partition(h, p, (), ctx)
    if part is None:
        return p, "unsatisfiable"
    d = decompose_from_c0(h, part.vt)
    ok, why = check_theorem_conditions(h, d)
    if not ok:
        # the reduction promises this cannot happen; keep searching regardless
        log.warning("p=%d: satisfiable instance but %s", p, why)
        return p, f"conditions: {why}"
    return p, (part, d, synthesize(h, d, alpha, beta))


def _search_component(h: Graph, alpha, beta, workers: int):
    ctx = _Context(h)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda p: _attempt(h, p, ctx, alpha, beta), range(h.n)))
        for p, res in results:
            if not isinstance(res, str):
                return res, results
        return None, results
    attempts = []
    for p in range(h.n):
        _, res = _attempt(h, p, ctx, alpha, beta)
        if not isinstance(res, str):
            return res, attempts
        attempts.append((p, res))
    return None, attempts


def _stack_above(w: dict[int, Fraction], others: WeightAssignment, labels, beta) -> None:
    """Place an independently realized unit interval part strictly more than
    ``beta`` above everything already in ``w``."""
    top = max(w.values())
    low = min(others.w)
    lift = top + beta + 1 - low
    for k, v in enumerate(labels):
        w[v] = others.w[k] + lift


def recognize(g: Graph, alpha=DEFAULT_ALPHA, beta=DEFAULT_BETA, workers: int = 1) -> Certificate:
    alpha, beta = as_rational(alpha), as_rational(beta)
    if not (beta > 0 and alpha >= beta):
        raise InvalidParameters(f"need alpha >= beta > 0, got alpha={alpha}, beta={beta}")
    workers = min(max(1, workers), _thread_cap())

    ok, w = is_chordal(g)
    if not ok:
        return ChordlessCycle(w)
    w = _match(g, NET)
    if w is not None:
        return InducedNet(w)
    w = _match(g, SUN3)
    if w is not None:
        return InducedSun(w)

    if _match(g, K13) is None:
        return UnitInterval(_unit_interval_weights(g, alpha, beta))
    core = [c for c in connected_components(g) if len(c) > 1]

    # isolates are dropped; every component except one must be unit interval
    claws = []
    for comp in core:
        h, labels = g.induced(comp)
        claw = _match(h, K13)
        if claw is not None:
            claws.append((comp, labels, Witness(K13, tuple(labels[k] for k in claw.vertices))))
    if len(claws) >= 2:
        return SeparatedClaws(claws[0][2], claws[1][2])
    comp, labels, _ = claws[0]
    h = g.induced(comp)[0]
    found, attempts = _search_component(h, alpha, beta, workers)
    if found is None:
        return NoAdmissiblePartition(tuple(labels), tuple((labels[p], r) for p, r in attempts))
    part, d, hw = found

    full = {labels[k]: hw.w[k] for k in range(h.n)}
    rest = sorted(set(range(g.n)) - set(comp))
    if rest:
        r, rlabels = g.induced(rest)
        rw = _unit_interval_weights(r, alpha, beta)
        _stack_above(full, rw, rlabels, beta)
    wa = WeightAssignment(alpha, beta, tuple(full[i] for i in range(g.n)))
    ok, pair = verify_dt(g, wa)
    if not ok:
        raise SynthesisFailed(f"assembled weights disagree with the graph at {pair}")
    layers = tuple(frozenset(labels[k] for k in layer) for layer in d.layers)
    orig_part = PMaxPartition(labels[part.p], frozenset(labels[k] for k in part.vt),
                              frozenset(labels[k] for k in part.vu))
    return Decomposition(DistanceDecomposition(layers, frozenset(rest)), wa, orig_part)
