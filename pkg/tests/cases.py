"""Deterministic case builders shared by the test modules."""
from __future__ import annotations

import random
from itertools import combinations

from dtgraphs.generators import WeightDistribution, gen_layered_dt, gen_random_dt
from dtgraphs.graph import Graph, build_graph, is_connected

PAIRS5 = list(combinations(range(5), 2))


def all_graphs_5() -> list[Graph]:
    return [build_graph(5, [PAIRS5[k] for k in range(10) if m >> k & 1]) for m in range(1024)]


def cycle(k: int) -> Graph:
    return build_graph(k, [(i, (i + 1) % k) for i in range(k)])


def path(k: int) -> Graph:
    return build_graph(k, [(i, i + 1) for i in range(k - 1)])


def complete(k: int) -> Graph:
    return build_graph(k, list(combinations(range(k), 2)))


def random_dt_case(seed: int, n_lo: int = 3, n_hi: int = 32):
    n = n_lo + seed % (n_hi - n_lo + 1)
    if seed % 2:
        dist = WeightDistribution.uniform(0, 4, seed)
    else:
        dist = WeightDistribution.gaussian(1.5, 1.0, seed)
    return gen_random_dt(n, 2, 1, dist)


def layered_case(seed: int, max_n: int = 10) -> Graph:
    rng = random.Random(seed)
    sizes = [rng.randint(1, 3)] + [rng.randint(1, 2) for _ in range(rng.randint(1, 4))]
    while sum(sizes) > max_n:
        sizes.pop()
    return gen_layered_dt(sizes, seed)


def random_connected(seed: int, n_lo: int = 6, n_hi: int = 9) -> Graph:
    """Connected graph on 6..9 vertices: even seeds are G(n, p), odd seeds are
    DT graphs with a few flipped pairs, so both verdicts occur often."""
    rng = random.Random(seed)
    while True:
        n = rng.randint(n_lo, n_hi)
        if seed % 2 == 0:
            p = rng.choice((0.3, 0.5, 0.7))
            g = build_graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])
        else:
            base, _ = gen_random_dt(n, 2, 1, WeightDistribution.uniform(0.3, 3, rng.randrange(2**32)))
            edges = set(base.edges())
            for e in rng.sample(list(combinations(range(n), 2)), rng.randint(0, 2)):
                edges ^= {e}
            g = build_graph(n, sorted(edges))
        if is_connected(g):
            return g
