"""Compare the compiled kernels with the pure-Python fallback.

Kernel timings call both modules directly on the same inputs; the
end-to-end timing runs recognition in two subprocesses, one with
DTGRAPHS_PURE_PYTHON=1.

    python3 benchmarks/bench_kernels.py [--graphs 300] [--repeat 3]
"""
import argparse
import os
import random
import subprocess
import sys
import time

from dtgraphs import _pykernels
from dtgraphs.patterns import K13, NET, SUN3

try:
    from dtgraphs import _ckernels
except ImportError:
    _ckernels = None

E2E = """
import sys, time
sys.path.insert(0, {tests!r})
from cases import random_dt_case
from dtgraphs import _backend
from dtgraphs.recognition import recognize
cases = [random_dt_case(s)[0] for s in range({count})]
t0 = time.perf_counter()
for g in cases:
    recognize(g)
print(_backend.BACKEND, time.perf_counter() - t0)
"""


def random_bits(rng, n, p):
    bits = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                bits[i] |= 1 << j
                bits[j] |= 1 << i
    return bits


def workloads(count, seed):
    rng = random.Random(seed)
    graphs = [(n, random_bits(rng, n, 0.35)) for n in (rng.randint(8, 48) for _ in range(count))]
    sats = []
    for _ in range(count):
        nv = rng.randint(10, 60)
        sats.append((nv, [(rng.randrange(2 * nv), rng.randrange(2 * nv)) for _ in range(2 * nv)]))
    pats = [(p.n, p.bits, p.visit_order()) for p in (K13, NET, SUN3)]

    def match(k):
        for n, bits in graphs:
            for pn, pb, order in pats:
                k.match_induced(n, bits, pn, pb, order, None)

    def preorder(k):
        for n, bits in graphs:
            k.preorder_rows(n, bits)

    def leaves(k):
        for n, bits in graphs:
            k.claw_leaf_pairs(n, bits)
            k.bull_leaf_pairs(n, bits, 0)

    def twosat(k):
        for nv, clauses in sats:
            k.solve_2sat(nv, clauses)

    return {"match_induced": match, "preorder_rows": preorder, "leaf_pairs": leaves,
            "solve_2sat": twosat}


def best_of(fn, kernel, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(kernel)
        times.append(time.perf_counter() - t0)
    return min(times)


def end_to_end(count):
    tests = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "tests")
    out = {}
    for pure in ("1", "0"):
        env = dict(os.environ, DTGRAPHS_PURE_PYTHON=pure)
        proc = subprocess.run([sys.executable, "-c", E2E.format(tests=tests, count=count)],
                              capture_output=True, text=True, env=env, check=True)
        name, secs = proc.stdout.split()
        out[name] = float(secs)
    return out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--graphs", type=int, default=300)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--e2e", type=int, default=1000, help="graphs in the end-to-end run (0 skips)")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled extension not built; only the fallback is available")
        return 1
    print(f"{'kernel':<16}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    for name, fn in workloads(args.graphs, args.seed).items():
        py = best_of(fn, _pykernels, args.repeat)
        cy = best_of(fn, _ckernels, args.repeat)
        print(f"{name:<16}{py:>12.4f}{cy:>12.4f}{py / cy:>9.1f}x")
    if args.e2e:
        res = end_to_end(args.e2e)
        py, cy = res["python"], res["cython"]
        print(f"{'recognize e2e':<16}{py:>12.4f}{cy:>12.4f}{py / cy:>9.1f}x"
              f"  ({args.e2e} generated DT graphs)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
