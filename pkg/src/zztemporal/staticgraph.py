"""Immutable undirected simple graph used for snapshots and unions."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property


@dataclass(frozen=True)
class Graph:
    vertices: frozenset = frozenset()
    edges: frozenset = frozenset()

    @classmethod
    def from_edges(cls, edges, vertices=()):
        """Edge-induced graph; extra isolated ``vertices`` may be supplied."""
        canon = frozenset((u, v) if u < v else (v, u) for u, v in edges)
        verts = frozenset(vertices) | {x for e in canon for x in e}
        return cls(verts, canon)

    @cached_property
    def adjacency(self) -> dict:
        adj = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def union(self, other: Graph) -> Graph:
        return Graph(self.vertices | other.vertices, self.edges | other.edges)

    def issubgraph(self, other: Graph) -> bool:
        return self.vertices <= other.vertices and self.edges <= other.edges

    def __len__(self):
        return len(self.vertices)
