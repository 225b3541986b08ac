"""Measure how often recognition rejects a DT graph after random edge flips.

Each pair of a generated DT graph is flipped with probability ``--flip``.
The rejection rate is only reported; there is no claim to check it against.

    python3 benchmarks/perturbation_rate.py [--graphs 2000] [--flip 0.3]
"""
import argparse
import random
import sys
from collections import Counter
from itertools import combinations

from dtgraphs.generators import WeightDistribution, gen_random_dt
from dtgraphs.graph import build_graph
from dtgraphs.recognition import recognize


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--graphs", type=int, default=2000)
    ap.add_argument("--flip", type=float, default=0.3)
    ap.add_argument("--n-max", type=int, default=16)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    rng = random.Random(args.seed)
    kinds = Counter()
    unverified = 0
    for s in range(args.graphs):
        n = 3 + s % (args.n_max - 2)
        g, _ = gen_random_dt(n, 2, 1, WeightDistribution.uniform(0, 4, args.seed * 100003 + s))
        edges = set(g.edges())
        flipped = [e for e in combinations(range(n), 2) if (e in edges) != (rng.random() < args.flip)]
        h = build_graph(n, flipped)
        c = recognize(h)
        kinds[c.kind] += 1
        unverified += not c.verify(h)
    rejected = sum(v for k, v in kinds.items() if k not in ("unit-interval", "decomposition"))
    print(f"flip probability {args.flip}: {rejected}/{args.graphs} rejected "
          f"({100 * rejected / args.graphs:.1f}%)")
    for kind, count in sorted(kinds.items()):
        print(f"  {kind:<26}{count}")
    if unverified:
        print(f"{unverified} certificates failed to verify")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
