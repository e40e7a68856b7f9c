"""Connectivity and centrality summaries of snapshot graphs.

Centralities are standardized to [0, 1]:

* degree: ``deg(v) / (n - 1)``
* betweenness: pair dependencies over ``(n - 1)(n - 2) / 2`` (Brandes)
* closeness: ``(n_v - 1)/(n - 1) * (n_v - 1)/sum_u d(v, u)`` where ``n_v`` is
  the size of v's component, so disconnected graphs stay well defined.
"""

from __future__ import annotations

import csv
import io
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import astuple, dataclass
from pathlib import Path

from zztemporal.staticgraph import Graph

STATS_HEADER = ("t", "N_cc", "S_cc_mean", "C_d_mean", "C_b_mean", "C_c_mean")


class UnionFind:
    def __init__(self, items=()):
        self.parent = {x: x for x in items}
        self.size = {x: 1 for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True

    def components(self) -> list[int]:
        return [self.size[x] for x in self.parent if self.parent[x] == x]


def connectivity_stats(graph: Graph) -> tuple[int, float]:
    """Number of connected components and their mean size in vertices."""
    uf = UnionFind(graph.vertices)
    for u, v in graph.edges:
        uf.union(u, v)
    sizes = uf.components()
    if not sizes:
        return 0, 0.0
    return len(sizes), sum(sizes) / len(sizes)


def _bfs(adj, src):
    """Distances, shortest-path counts, predecessors and visit order from ``src``."""
    dist = {src: 0}
    sigma = {src: 1}
    preds = {src: []}
    order = []
    queue = deque([src])
    while queue:
        x = queue.popleft()
        order.append(x)
        for y in adj[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                sigma[y] = 0
                preds[y] = []
                queue.append(y)
            if dist[y] == dist[x] + 1:
                sigma[y] += sigma[x]
                preds[y].append(x)
    return dist, sigma, preds, order


def vertex_centralities(graph: Graph) -> dict:
    """Per-vertex ``(degree, betweenness, closeness)`` under the module's standardizations."""
    n = len(graph.vertices)
    if n < 2:
        return {v: (0.0, 0.0, 0.0) for v in graph.vertices}
    adj = graph.adjacency
    between = dict.fromkeys(graph.vertices, 0.0)
    close = {}
    for s in graph.vertices:
        dist, sigma, preds, order = _bfs(adj, s)
        delta = dict.fromkeys(order, 0.0)
        for w in reversed(order):
            for v in preds[w]:
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w])
            if w != s:
                between[w] += delta[w]
        total = sum(dist.values())
        reach = len(dist) - 1
        close[s] = (reach / (n - 1)) * (reach / total) if total > 0 else 0.0
    # every unordered pair was counted from both ends
    scale = 1.0 / ((n - 1) * (n - 2)) if n > 2 else 0.0
    return {v: (len(adj[v]) / (n - 1), between[v] * scale, close[v]) for v in graph.vertices}


def centrality_stats(graph: Graph) -> tuple[float, float, float]:
    """Mean standardized degree, betweenness and closeness centrality."""
    if len(graph.vertices) < 2:
        return 0.0, 0.0, 0.0
    vals = vertex_centralities(graph).values()
    n = len(graph.vertices)
    return tuple(sum(v[k] for v in vals) / n for k in range(3))


@dataclass(frozen=True)
class StatsRow:
    t: float
    N_cc: int
    S_cc_mean: float
    C_d_mean: float
    C_b_mean: float
    C_c_mean: float


def snapshot_stats(graph: Graph, t: float) -> StatsRow:
    return StatsRow(t, *connectivity_stats(graph), *centrality_stats(graph))


def stats_series(snapshots, labels, threads: int = 1) -> list[StatsRow]:
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(snapshot_stats, snapshots, labels))
    return [snapshot_stats(g, t) for g, t in zip(snapshots, labels)]


def stats_to_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(STATS_HEADER)
    for row in rows:
        vals = astuple(row)
        w.writerow((repr(float(vals[0])), vals[1], *(repr(float(v)) for v in vals[2:])))
    return buf.getvalue()


def write_stats_csv(rows, path) -> None:
    Path(path).write_text(stats_to_csv(rows), encoding="utf-8")
