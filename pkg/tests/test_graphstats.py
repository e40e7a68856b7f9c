import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from centrality_oracle import centralities
from conftest import random_temporal_graph
from zztemporal.complex import betti_numbers, vietoris_rips
from zztemporal.graphstats import (
    STATS_HEADER,
    UnionFind,
    centrality_stats,
    connectivity_stats,
    stats_series,
    stats_to_csv,
    vertex_centralities,
)
from zztemporal.staticgraph import Graph
from zztemporal.windowing import build_snapshots, make_plan


def cycle(n):
    return Graph.from_edges([(i, (i + 1) % n) for i in range(n)])


def test_connectivity_examples():
    assert connectivity_stats(Graph.from_edges([(0, 1), (2, 3)])) == (2, 2.0)
    assert connectivity_stats(Graph.from_edges([])) == (0, 0.0)
    assert connectivity_stats(cycle(5)) == (1, 5.0)


def test_union_find():
    uf = UnionFind(range(6))
    assert uf.union(0, 1) and uf.union(1, 2) and not uf.union(0, 2)
    assert sorted(uf.components()) == [1, 1, 1, 3]


def test_path_example():
    cd, cb, cc = centrality_stats(Graph.from_edges([("a", "b"), ("b", "c")]))
    assert cd == pytest.approx(2 / 3, abs=1e-15)
    assert cb == pytest.approx(1 / 3, abs=1e-15)
    assert cc == pytest.approx(7 / 9, abs=1e-15)


def test_star_degree():
    assert centrality_stats(Graph.from_edges([(0, 1), (0, 2), (0, 3)]))[0] == pytest.approx(0.5, abs=1e-15)


@pytest.mark.parametrize("n", [2, 3, 5, 8])
def test_complete_graph(n):
    cd, cb, cc = centrality_stats(Graph.from_edges(itertools.combinations(range(n), 2)))
    assert cd == pytest.approx(1.0) and cc == pytest.approx(1.0) and cb == 0.0


def test_small_graphs_are_zero():
    assert centrality_stats(Graph.from_edges([])) == (0.0, 0.0, 0.0)
    assert centrality_stats(Graph(frozenset([7]), frozenset())) == (0.0, 0.0, 0.0)


def random_graph(rng, n, p):
    return Graph.from_edges([e for e in itertools.combinations(range(n), 2) if rng.random() < p], range(n))


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**6), st.integers(2, 8), st.floats(0.1, 0.8))
def test_against_enumeration_oracle(seed, n, p):
    g = random_graph(random.Random(seed), n, p)
    got = vertex_centralities(g)
    want = centralities(g.vertices, g.edges)
    for v in g.vertices:
        for a, b in zip(got[v], want[v]):
            assert abs(a - b) <= 1e-12
            assert 0.0 <= a <= 1.0 + 1e-12


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_against_networkx(seed):
    g = random_graph(random.Random(seed), 9, 0.35)
    h = nx.Graph(list(g.edges))
    h.add_nodes_from(g.vertices)
    got = vertex_centralities(g)
    bc = nx.betweenness_centrality(h, normalized=True)
    cc = nx.closeness_centrality(h, wf_improved=True)
    dc = nx.degree_centrality(h)
    for v in g.vertices:
        assert got[v] == pytest.approx((dc[v], bc[v], cc[v]), abs=1e-12)


@given(st.integers(0, 10**6))
def test_relabeling_invariance(seed):
    rng = random.Random(seed)
    g = random_graph(rng, 7, 0.4)
    perm = list(range(7))
    rng.shuffle(perm)
    h = Graph.from_edges([(perm[u], perm[v]) for u, v in g.edges], [perm[v] for v in g.vertices])
    assert connectivity_stats(g) == connectivity_stats(h)
    assert centrality_stats(g) == pytest.approx(centrality_stats(h), abs=1e-15)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_series_consistency(seed):
    g = random_temporal_graph(random.Random(seed))
    seq = build_snapshots(g, make_plan(g.time_domain, 1.5, 0.5))
    rows = stats_series(seq.snapshots, seq.snapshot_labels)
    assert rows == stats_series(seq.snapshots, seq.snapshot_labels, threads=3)
    for row, snap in zip(rows, seq.snapshots):
        assert row.N_cc * row.S_cc_mean == pytest.approx(len(snap.vertices))
        assert row.N_cc == (betti_numbers(vietoris_rips(snap, 1, 2))[0] if snap.vertices else 0)
        assert all(0 <= c <= 1 + 1e-12 for c in (row.C_d_mean, row.C_b_mean, row.C_c_mean))


def test_csv_columns():
    rows = stats_series([cycle(4), Graph.from_edges([])], [0.5, 1.5])
    lines = stats_to_csv(rows).splitlines()
    assert lines[0] == ",".join(STATS_HEADER)
    assert lines[2] == "1.5,0,0.0,0.0,0.0,0.0"
