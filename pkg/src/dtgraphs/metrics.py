"""Closed-form metrics of DT graphs computed from a weight ordering."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import BoundViolated, Disconnected, NoTriplets, NotRealizing
from .graph import DistanceDecomposition, Graph, distances_from, is_connected, mask
from .recognition import PMaxPartition, _Context, is_threshold, p_max_partition, vicinal_preorder
from .weights import WeightAssignment, format_rational, verify_dt


@dataclass(frozen=True)
class DtOrdering:
    """Vertices sorted by ``(weight, index)``.

    ``order[k]`` is the vertex at position ``k``; ``forward[k]`` holds the
    positions ``j > k`` adjacent to position ``k``.
    """

    order: tuple[int, ...]
    forward: tuple[frozenset[int], ...]

    def d_plus(self, k: int) -> int:
        return len(self.forward[k])


def dt_ordering(g: Graph, wa: WeightAssignment) -> DtOrdering:
    ok, pair = verify_dt(g, wa)
    if not ok:
        raise NotRealizing(f"weights disagree with the graph at pair {pair}")
    order = tuple(sorted(range(g.n), key=lambda v: (wa.w[v], v)))
    at = {v: k for k, v in enumerate(order)}
    forward = tuple(
        frozenset(at[u] for u in g.adjacency[v] if at[u] > k) for k, v in enumerate(order)
    )
    return DtOrdering(order, forward)


@dataclass(frozen=True)
class EdgeCliqueCover:
    cliques: tuple[frozenset[int], ...]

    @property
    def size(self) -> int:
        return len(self.cliques)

    def verify(self, g: Graph) -> bool:
        for c in self.cliques:
            cm = mask(c)
            if any(cm & ~g.bits[v] & ~(1 << v) for v in c):
                return False
        covered = set()
        for c in self.cliques:
            vs = sorted(c)
            covered.update((a, b) for x, a in enumerate(vs) for b in vs[x + 1:])
        return all(e in covered for e in g.edges())

    def to_json(self) -> list[list[int]]:
        return [sorted(c) for c in self.cliques]


def intersection_number(g: Graph, ord: DtOrdering) -> tuple[int, EdgeCliqueCover]:
    """Positions whose closed forward neighbourhood is not already inside the
    predecessor's forward neighbourhood each contribute one clique."""
    cliques = []
    prev: frozenset[int] = frozenset()
    for k, fwd in enumerate(ord.forward):
        if fwd and not (fwd | {k}) <= prev:
            cliques.append(frozenset(ord.order[j] for j in fwd | {k}))
        prev = fwd
    cover = EdgeCliqueCover(tuple(cliques))
    if not cover.verify(g):
        raise BoundViolated("forward-neighbourhood cliques do not cover the graph")
    return cover.size, cover


def diameter(g: Graph) -> int:
    if g.n == 0 or not is_connected(g):
        raise Disconnected("diameter needs a connected graph")
    return max(max(distances_from(g, s)) for s in range(g.n))


def diameter_bound_check(g: Graph, d: DistanceDecomposition) -> tuple[int, int]:
    lam = diameter(g) - d.m
    if lam not in (0, 1):
        raise BoundViolated(f"diameter {d.m + lam} is not m or m+1 for m={d.m}")
    return d.m, lam


def min_layers(g: Graph, target_m: int) -> tuple[int, PMaxPartition] | None:
    """A vertex ``p`` and partition whose ``V_T`` seeds a decomposition with
    at most ``target_m`` layers beyond ``C_0``."""
    if target_m < 0:
        return None
    if target_m == 0:
        if g.n == 0 or g.isolates() or not is_threshold(g):
            return None
        pre = vicinal_preorder(g)
        p = next(p for p in range(g.n) if all(pre.holds(i, p) for i in range(g.n)))
        return p, PMaxPartition(p, frozenset(range(g.n)), frozenset())
    ctx = _Context(g)
    for p in range(g.n):
        dist = distances_from(g, p)
        if min(dist) < 0 or max(dist) > max(target_m, 2):
            continue
        if target_m == 1:
            part = p_max_partition(g, p, [v for v in range(g.n) if dist[v] == 2], ctx)
        elif max(dist) <= target_m:
            part = p_max_partition(g, p, (), ctx)
        else:
            continue
        if part is not None:
            return p, part
    return None


def minimum_layers(g: Graph, max_m: int = 5) -> tuple[int, int, PMaxPartition] | None:
    """Smallest ``m <= max_m`` accepted by :func:`min_layers`."""
    for m in range(max_m + 1):
        found = min_layers(g, m)
        if found is not None:
            return (m, *found)
    return None


def clustering_coefficient(g: Graph, ord: DtOrdering) -> Fraction:
    triplets = sum(comb(g.degree(v), 2) for v in range(g.n))
    if not triplets:
        raise NoTriplets("no path of length two")
    closed = sum(comb(ord.d_plus(k), 2) for k in range(g.n))
    return Fraction(3 * closed, triplets)


def metrics_report(g: Graph, wa: WeightAssignment) -> dict:
    """All metrics as a JSON-ready dict; entries that are undefined for
    ``g`` (disconnected, no decomposition, no triplets) are ``None``."""
    ord = dt_ordering(g, wa)
    count, cover = intersection_number(g, ord)
    out = {"intersection_number": count, "cover": cover.to_json(),
           "diameter": None, "m": None, "lambda": None, "clustering": None}
    if g.n and is_connected(g):
        out["diameter"] = diameter(g)
        found = minimum_layers(g, max_m=g.n)
        if found is not None:
            out["m"] = found[0]
            if found[0] >= 1:
                out["lambda"] = out["diameter"] - found[0]
    try:
        out["clustering"] = format_rational(clustering_coefficient(g, ord))
    except NoTriplets:
        pass
    return out
