"""Time the compiled and pure-Python boundary reductions on real cone filtrations.

    python benchmarks/bench_kernels.py [--repeat 3]

Each workload is linearized once; only the reduction is timed. Both backends
must return identical pairings, which is checked before timing is reported.
"""

import argparse
import random
import sys
import time

from zztemporal import _kernels
from zztemporal.dynamics import LorenzConfig, simulate_lorenz
from zztemporal.opn import build_opn, permutation_sequence
from zztemporal.temporal_graph import from_intervals, ingest_schedule
from zztemporal.windowing import build_snapshots, make_plan
from zztemporal.zigzag import _cone_filtration, _linearize, build_zigzag


def lorenz_opn():
    x = simulate_lorenz(LorenzConfig())
    g = build_opn(permutation_sequence(x, 6, 30), x.sample_rate, x.t0)
    return g, 3.0, 0.8


def weekly(n_stations=500, n_trips=5000, seed=0):
    rng = random.Random(seed)
    week = 7 * 86400
    rows = []
    for _ in range(n_trips):
        o, d = rng.sample(range(n_stations), 2)
        dep = rng.randrange(0, week - 3600, 60)
        rows.append((o, d, dep, dep + rng.randint(5, 60) * 60))
    return ingest_schedule(rows), 1200.0, 0.5


def dense_random(n=30, edges=1500, seed=1):
    rng = random.Random(seed)
    intervals = {}
    for _ in range(edges):
        u, v = rng.sample(range(n), 2)
        a = rng.uniform(0, 100)
        intervals.setdefault((u, v), []).append((a, a + rng.uniform(0, 15)))
    return from_intervals(intervals), 6.0, 0.5


WORKLOADS = {"lorenz-opn": lorenz_opn, "weekly-synthetic": weekly, "dense-random": dense_random}


def prepare(factory):
    g, width, overlap = factory()
    zz = build_zigzag(build_snapshots(g, make_plan(g.time_domain, width, overlap)))
    columns, dims, _ = _cone_filtration(_linearize(zz.complexes))
    return columns, dims


def best_of(fn, columns, dims, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn(columns, dims)
        times.append(time.perf_counter() - start)
    return min(times), list(out)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--only", choices=sorted(WORKLOADS))
    args = ap.parse_args(argv)
    backends = _kernels.available_backends()
    if "compiled" not in backends:
        print("compiled extension not built; run `pip install --no-build-isolation -e .`", file=sys.stderr)
    print(f"{'workload':<18} {'columns':>8} " + " ".join(f"{b:>10}" for b in backends) + "   speedup")
    for name, factory in WORKLOADS.items():
        if args.only and name != args.only:
            continue
        columns, dims = prepare(factory)
        results = {b: best_of(fn, columns, dims, args.repeat) for b, fn in backends.items()}
        lows = [low for _, low in results.values()]
        if any(low != lows[0] for low in lows):
            raise SystemExit(f"{name}: backends disagree")
        cells = " ".join(f"{results[b][0] * 1e3:>8.1f}ms" for b in backends)
        speedup = ""
        if "compiled" in results:
            speedup = f"{results['python'][0] / results['compiled'][0]:8.1f}x"
        print(f"{name:<18} {len(columns):>8} {cells} {speedup}")


if __name__ == "__main__":
    main()
