"""Geodesic Vietoris-Rips complexes of graphs and a static GF(2) Betti oracle."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from itertools import combinations

from zztemporal._reduce_py import gf2_rank
from zztemporal.errors import ValidationError
from zztemporal.staticgraph import Graph


@dataclass(frozen=True)
class SimplicialComplex:
    """Face-closed set of simplices, each a strictly increasing vertex tuple.

    ``simplices[k]`` holds the sorted k-simplices for ``k = 0..d_max``.
    """

    simplices: tuple
    d_max: int

    @classmethod
    def from_simplices(cls, simplices, d_max=None):
        """Close ``simplices`` under faces and sort them by dimension."""
        top = max((len(s) - 1 for s in simplices), default=0)
        if d_max is None:
            d_max = max(top, 1)
        found = set()
        for s in simplices:
            s = tuple(sorted(s))
            if len(s) - 1 > d_max:
                raise ValidationError(f"simplex {s} exceeds d_max={d_max}")
            for k in range(1, len(s) + 1):
                found.update(combinations(s, k))
        by_dim = [[] for _ in range(d_max + 1)]
        for s in found:
            by_dim[len(s) - 1].append(s)
        return cls(tuple(tuple(sorted(ss)) for ss in by_dim), d_max)

    def __iter__(self):
        for ss in self.simplices:
            yield from ss

    def __len__(self):
        return sum(len(ss) for ss in self.simplices)

    def as_set(self) -> frozenset:
        return frozenset(self)

    def counts(self) -> list[int]:
        return [len(ss) for ss in self.simplices]

    def issubcomplex(self, other: SimplicialComplex) -> bool:
        return self.as_set() <= other.as_set()

    def to_text(self) -> str:
        """One simplex per line, vertices space separated."""
        return "".join(" ".join(map(str, s)) + "\n" for s in self)


def geodesic_distances(graph: Graph) -> dict:
    """All-pairs hop distances; ``math.inf`` across components."""
    adj = graph.adjacency
    out = {}
    for src in graph.vertices:
        dist = {src: 0}
        queue = deque([src])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        for v in graph.vertices:
            out[(src, v)] = dist.get(v, math.inf)
    return out


def _power_graph(graph: Graph, r: int) -> dict:
    """Neighbours within hop distance ``r`` (BFS truncated at depth r)."""
    adj = graph.adjacency
    near = {}
    for src in graph.vertices:
        seen = {src: 0}
        frontier = [src]
        for depth in range(1, r + 1):
            nxt = []
            for x in frontier:
                for y in adj[x]:
                    if y not in seen:
                        seen[y] = depth
                        nxt.append(y)
            frontier = nxt
        seen.pop(src)
        near[src] = set(seen)
    return near


def vietoris_rips(graph: Graph, r: int = 1, d_max: int = 2) -> SimplicialComplex:
    """Simplices of at most ``d_max`` dimensions with pairwise hop distance <= r.

    ``r = 1`` gives the clique complex of ``graph``; ``r = 0`` the bare vertices.
    """
    if r < 0 or int(r) != r:
        raise ValidationError(f"r must be a non-negative integer, got {r}")
    if d_max < 1:
        raise ValidationError(f"d_max must be at least 1, got {d_max}")
    r = int(r)
    verts = sorted(graph.vertices)
    by_dim = [[(v,) for v in verts]]
    if r == 0:
        by_dim.extend([] for _ in range(d_max))
        return SimplicialComplex(tuple(tuple(ss) for ss in by_dim), d_max)
    near = graph.adjacency if r == 1 else _power_graph(graph, r)
    # only extend cliques with larger vertices so each simplex is built once
    up = {v: {w for w in near[v] if w > v} for v in verts}
    level = [((v,), up[v]) for v in verts]
    for _ in range(d_max):
        nxt = []
        for simplex, cand in level:
            for w in sorted(cand):
                nxt.append((simplex + (w,), cand & up[w]))
        by_dim.append(sorted(s for s, _ in nxt))
        level = nxt
    return SimplicialComplex(tuple(tuple(ss) for ss in by_dim), d_max)


def boundary_ranks(K: SimplicialComplex, top: int) -> list[int]:
    """``ranks[p]`` is the GF(2) rank of the boundary map from p- to (p-1)-chains."""
    ranks = [0] * (top + 1)
    for p in range(1, top + 1):
        if p > K.d_max or not K.simplices[p]:
            continue
        index = {s: i for i, s in enumerate(K.simplices[p - 1])}
        rows = []
        for s in K.simplices[p]:
            bits = 0
            for k in range(len(s)):
                bits |= 1 << index[s[:k] + s[k + 1:]]
            rows.append(bits)
        ranks[p] = gf2_rank(rows)
    return ranks


def betti_numbers(K: SimplicialComplex, p_max: int = 1) -> list[int]:
    """Betti numbers b_0..b_{p_max} over GF(2) from boundary-matrix ranks."""
    if K.d_max < p_max + 1:
        raise ValidationError(f"d_max={K.d_max} too small for p_max={p_max}; need d_max >= p_max + 1")
    ranks = boundary_ranks(K, p_max + 1)
    return [len(K.simplices[p]) - ranks[p] - ranks[p + 1] for p in range(p_max + 1)]
