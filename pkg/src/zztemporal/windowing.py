"""Sliding-window snapshots of a temporal graph and their adjacent unions.

``width`` is always the full window width: window ``i`` is the closed
interval ``[c_i - width/2, c_i + width/2]`` around center ``c_i``.
"""

from __future__ import annotations

import math
from bisect import bisect_left, bisect_right
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from zztemporal.errors import ConfigurationError
from zztemporal.staticgraph import Graph
from zztemporal.temporal_graph import TemporalGraph


@dataclass(frozen=True)
class WindowPlan:
    start: float
    width: float
    overlap: float
    count: int

    @property
    def step(self) -> float:
        return self.width * (1.0 - self.overlap)

    def bounds(self, i: int) -> tuple[float, float]:
        lo = self.start + i * self.step
        return lo, lo + self.width

    @property
    def centers(self) -> list[float]:
        return [self.start + i * self.step + self.width / 2 for i in range(self.count)]

    @property
    def end_time(self) -> float:
        return self.bounds(self.count - 1)[1]


def make_plan(time_domain, width: float, overlap: float) -> WindowPlan:
    """Windows start at ``t_min`` and advance until one reaches ``t_max``.

    The last window may overrun ``t_max``.

    >>> make_plan((0, 10), 1, 0).centers[:2]
    [0.5, 1.5]
    """
    if not (width > 0) or not math.isfinite(width):
        raise ConfigurationError(f"width must be positive, got {width}")
    if not (0 <= overlap < 1):
        raise ConfigurationError(f"overlap must lie in [0, 1), got {overlap}")
    t_min, t_max = float(time_domain[0]), float(time_domain[1])
    if t_max < t_min:
        raise ConfigurationError("time domain is reversed")
    step = width * (1.0 - overlap)
    span = t_max - t_min
    count = 1
    if span > width:
        # guard against 9.000000000001 style quotients adding a spurious window
        count = math.ceil((span - width) / step - 1e-9) + 1
        while t_min + (count - 1) * step + width < t_max:
            count += 1
    return WindowPlan(t_min, float(width), float(overlap), count)


@dataclass(frozen=True)
class SnapshotSequence:
    snapshots: tuple
    unions: tuple
    snapshot_labels: tuple
    union_labels: tuple
    end_time: float

    def alternating(self):
        """Graphs in zigzag order: G_0, G_01, G_1, ..., G_n."""
        out = []
        for i, g in enumerate(self.snapshots):
            out.append(g)
            if i < len(self.unions):
                out.append(self.unions[i])
        return out

    def labels(self):
        out = []
        for i, t in enumerate(self.snapshot_labels):
            out.append(t)
            if i < len(self.union_labels):
                out.append(self.union_labels[i])
        return out


def window_edge_sets(g: TemporalGraph, plan: WindowPlan) -> list[set]:
    """Active edge set of every window, via a sweep over each edge's intervals."""
    los = [plan.bounds(i)[0] for i in range(plan.count)]
    his = [plan.bounds(i)[1] for i in range(plan.count)]
    # clamp like edges_active_in so both routes agree at the domain boundary
    t_min, t_max = g.time_domain
    los_c = [max(lo, t_min) for lo in los]
    his_c = [min(hi, t_max) for hi in his]
    sets: list[set] = [set() for _ in range(plan.count)]
    for pair, iset in g.edges.items():
        for a, b in iset:
            first = bisect_left(his_c, a)
            last = bisect_right(los_c, b)
            for i in range(first, last):
                if los_c[i] <= his_c[i]:
                    sets[i].add(pair)
    return sets


def build_snapshots(g: TemporalGraph, plan: WindowPlan, threads: int = 1) -> SnapshotSequence:
    edge_sets = window_edge_sets(g, plan)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            snaps = list(pool.map(Graph.from_edges, edge_sets))
    else:
        snaps = [Graph.from_edges(es) for es in edge_sets]
    unions = tuple(snaps[i].union(snaps[i + 1]) for i in range(len(snaps) - 1))
    centers = plan.centers
    union_labels = tuple((centers[i] + centers[i + 1]) / 2 for i in range(len(centers) - 1))
    return SnapshotSequence(tuple(snaps), unions, tuple(centers), union_labels, plan.end_time)
