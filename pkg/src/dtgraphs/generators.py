"""Seeded generators for threshold, unit interval and DT graphs."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import EmptySequence, InvalidParameters, UnknownName
from .graph import Graph, build_graph, is_connected
from .patterns import BULL, C4, K13, NET, P4, SUN3, TWO_K2
from .weights import WeightAssignment, as_rational, realize

# weights are rounded to this grid so they convert to small exact rationals
QUANTUM = 10 ** 6
FLOOR = Fraction(1, QUANTUM)


@dataclass(frozen=True)
class WeightDistribution:
    kind: str  # "uniform" or "gaussian"
    a: float   # lo or mean
    b: float   # hi or sd
    seed: int = 0

    def __post_init__(self):
        if self.kind == "uniform":
            if not (0 <= self.a < self.b):
                raise InvalidParameters("uniform needs 0 <= lo < hi")
        elif self.kind == "gaussian":
            if not self.b > 0:
                raise InvalidParameters("gaussian needs sd > 0")
        else:
            raise InvalidParameters(f"unknown distribution {self.kind!r}")

    @classmethod
    def uniform(cls, lo, hi, seed=0) -> "WeightDistribution":
        return cls("uniform", float(lo), float(hi), seed)

    @classmethod
    def gaussian(cls, mean, sd, seed=0) -> "WeightDistribution":
        return cls("gaussian", float(mean), float(sd), seed)

    def sample(self, n: int) -> list[Fraction]:
        rng = np.random.Generator(np.random.PCG64(self.seed))
        if self.kind == "uniform":
            raw = rng.uniform(self.a, self.b, n)
        else:
            raw = rng.normal(self.a, self.b, n)
        out = []
        for x in raw:
            q = Fraction(int(round(float(x) * QUANTUM)), QUANTUM)
            out.append(max(q, FLOOR))
        return out


def gen_threshold(creation: Sequence[int]) -> Graph:
    """Bit ``k`` = 1 adds vertex ``k`` dominating all earlier vertices; the
    first bit is ignored."""
    bits = [int(b) for b in creation]
    if not bits:
        raise EmptySequence("creation sequence is empty")
    edges = [(j, k) for k in range(1, len(bits)) if bits[k] for j in range(k)]
    return build_graph(len(bits), edges)


def gen_unit_interval(weights: Sequence, beta) -> Graph:
    w = [as_rational(x) for x in weights]
    beta = as_rational(beta)
    if beta <= 0 or any(x <= 0 for x in w):
        raise InvalidParameters("need beta > 0 and positive weights")
    n = len(w)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if abs(w[i] - w[j]) <= beta]
    return build_graph(n, edges)


def gen_dt(alpha, beta, weights: Sequence) -> Graph:
    return realize(alpha, beta, weights)


def gen_random_dt(n: int, alpha, beta, dist: WeightDistribution) -> tuple[Graph, WeightAssignment]:
    if n < 1:
        raise InvalidParameters("n must be at least 1")
    wa = WeightAssignment(as_rational(alpha), as_rational(beta), tuple(dist.sample(n)))
    return realize(wa.alpha, wa.beta, wa.w), wa


def random_unit_interval(n: int, seed: int, span: float = 4.0) -> Graph:
    """Unit interval graph from ``n`` uniform points in ``[0, span]``, beta = 1."""
    w = WeightDistribution.uniform(1, 1 + span, seed).sample(n)
    return gen_unit_interval(w, 1)


def gen_layered_dt(sizes: Sequence[int], seed: int) -> Graph:
    """Connected DT graph (alpha = 2, beta = 1) grown in bands.

    ``sizes[0]`` weights are drawn from ``(1/2, 3/2)``; each weight of band
    ``l`` steps up from a random band ``l - 1`` weight by 0.3 to 1.0, so it
    stays within ``beta`` of that parent.  Draws are repeated until the
    graph is connected; the realized layer count is whatever the weights
    produce and is measured separately.
    """
    rng = np.random.Generator(np.random.PCG64(seed))
    q = lambda x: Fraction(int(round(float(x) * QUANTUM)), QUANTUM)
    for _ in range(1000):
        bands = [[q(x) for x in rng.uniform(0.5, 1.5, sizes[0])]]
        for k in sizes[1:]:
            prev = bands[-1]
            bands.append([prev[int(rng.integers(len(prev)))] + q(rng.uniform(0.3, 1.0))
                          for _ in range(k)])
        g = realize(2, 1, [x for band in bands for x in band])
        if is_connected(g):
            return g
    raise InvalidParameters("could not draw a connected layered graph")


def _fig2_shape() -> Graph:
    # three vertices with weights 5, 7, 4 at alpha = 10, beta = 2 plus two
    # heavier neighbours, realized so the stated relations hold
    return realize(10, 2, (5, 7, 4, 8, 9))


_NAMED = {
    "2K2": TWO_K2.as_graph,
    "C4": C4.as_graph,
    "P4": P4.as_graph,
    "K13": K13.as_graph,
    "bull": BULL.as_graph,
    "net": NET.as_graph,
    "sun3": SUN3.as_graph,
    "fig2-shape": _fig2_shape,
}

NAMED_FIXTURES = tuple(_NAMED)


def named_fixture(name: str) -> Graph:
    try:
        return _NAMED[name]()
    except KeyError:
        raise UnknownName(f"unknown fixture {name!r}; choose from {', '.join(_NAMED)}") from None
