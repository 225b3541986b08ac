"""Immutable undirected simple graphs over vertices ``0..n-1``.

Adjacency is kept twice: as sorted neighbour tuples for iteration and as
Python-int bitsets for set algebra.  Vertex sets handed across the public
API are ``frozenset[int]``; :func:`mask` and :func:`members` convert.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import EmptySeed, IndexOutOfRange, ParseError, SelfLoop

VertexSet = frozenset


def mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(m: int) -> Iterator[int]:
    """Yield the set bits of ``m`` in increasing order."""
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


def popcount(m: int) -> int:
    return bin(m).count("1")


class Graph:
    """An immutable simple graph.

    Construct with :func:`build_graph`; the initializer trusts its input.
    """

    __slots__ = ("n", "_bits", "_adj", "_m")

    def __init__(self, n: int, bits: Sequence[int]):
        self.n = n
        self._bits = tuple(bits)
        self._adj = tuple(tuple(members(b)) for b in self._bits)
        self._m = sum(len(a) for a in self._adj) // 2

    @property
    def bits(self) -> tuple[int, ...]:
        return self._bits

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self._adj

    @property
    def num_edges(self) -> int:
        return self._m

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def _check(self, i: int) -> None:
        if not 0 <= i < self.n:
            raise IndexOutOfRange(f"vertex {i} outside [0, {self.n})")

    def neighbors(self, i: int) -> frozenset[int]:
        self._check(i)
        return frozenset(self._adj[i])

    def degree(self, i: int) -> int:
        self._check(i)
        return len(self._adj[i])

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self._bits[i] >> j & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self._adj[u] if u < v]

    def isolates(self) -> frozenset[int]:
        return frozenset(i for i in range(self.n) if not self._bits[i])

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Return the induced subgraph relabelled to ``0..k-1`` and the
        tuple mapping new labels back to original vertices."""
        labels = tuple(sorted(set(vertices)))
        index = {v: k for k, v in enumerate(labels)}
        bits = []
        for v in labels:
            b = 0
            for u in self._adj[v]:
                k = index.get(u)
                if k is not None:
                    b |= 1 << k
            bits.append(b)
        return Graph(len(labels), bits), labels

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._bits == other._bits

    def __hash__(self) -> int:
        return hash((self.n, self._bits))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 0:
        raise IndexOutOfRange(f"negative vertex count {n}")
    bits = [0] * n
    for u, v in edges:
        for x in (u, v):
            if not 0 <= x < n:
                raise IndexOutOfRange(f"vertex {x} outside [0, {n})")
        if u == v:
            raise SelfLoop(f"self loop on vertex {u}")
        bits[u] |= 1 << v
        bits[v] |= 1 << u
    return Graph(n, bits)


def neighbors(g: Graph, i: int) -> frozenset[int]:
    return g.neighbors(i)


def degree(g: Graph, i: int) -> int:
    return g.degree(i)


@dataclass(frozen=True)
class DistanceDecomposition:
    """Layers ``(C_0, ..., C_m)`` by distance from ``C_0``.

    ``unreached`` holds vertices with no path to the seed; it is empty for a
    full decomposition of a connected graph.
    """

    layers: tuple[frozenset[int], ...]
    unreached: frozenset[int] = field(default_factory=frozenset)

    @property
    def m(self) -> int:
        return len(self.layers) - 1

    def layer_of(self) -> dict[int, int]:
        return {v: l for l, layer in enumerate(self.layers) for v in layer}

    def to_json(self) -> dict:
        return {
            "layers": [sorted(layer) for layer in self.layers],
            "m": self.m,
            "unreached": sorted(self.unreached),
        }


def bfs_layers(g: Graph, seed: Iterable[int]) -> DistanceDecomposition:
    seed_mask = mask(seed)
    if not seed_mask:
        raise EmptySeed("seed set is empty")
    if seed_mask >> g.n:
        raise IndexOutOfRange("seed vertex outside the graph")
    bits = g.bits
    seen = seed_mask
    frontier = seed_mask
    layers = []
    while frontier:
        layers.append(frozenset(members(frontier)))
        nxt = 0
        for v in members(frontier):
            nxt |= bits[v]
        frontier = nxt & ~seen
        seen |= frontier
    unreached = frozenset(members(g.all_mask & ~seen))
    return DistanceDecomposition(tuple(layers), unreached)


def distances_from(g: Graph, source: int) -> list[int]:
    """Single-source BFS distances; ``-1`` marks unreachable vertices."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    adj = g.adjacency
    while queue:
        v = queue.popleft()
        for u in adj[v]:
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def connected_components(g: Graph) -> list[frozenset[int]]:
    bits = g.bits
    remaining = g.all_mask
    out = []
    while remaining:
        start = remaining & -remaining
        comp = start
        frontier = start
        while frontier:
            nxt = 0
            for v in members(frontier):
                nxt |= bits[v]
            frontier = nxt & ~comp
            comp |= frontier
        out.append(frozenset(members(comp)))
        remaining &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def read_edge_list(text: str) -> Graph:
    """Parse the ``n m`` header + ``u v`` lines format; ``#`` lines are comments."""
    header = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(f"expected two integers, got {line!r}", lineno)
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(f"non-integer token in {line!r}", lineno) from None
        if header is None:
            if a < 0 or b < 0:
                raise ParseError("negative count in header", lineno)
            header = (a, b)
            continue
        if not (0 <= a < header[0] and 0 <= b < header[0]):
            raise IndexOutOfRange(f"line {lineno}: vertex outside [0, {header[0]})")
        edges.append((a, b))
    if header is None:
        raise ParseError("missing 'n m' header")
    if len(edges) != header[1]:
        raise ParseError(f"header declares {header[1]} edges, found {len(edges)}")
    return build_graph(header[0], edges)


def write_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"
