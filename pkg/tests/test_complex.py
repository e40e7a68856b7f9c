import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from zigzag_oracle import Homology
from zztemporal.complex import SimplicialComplex, betti_numbers, geodesic_distances, vietoris_rips
from zztemporal.errors import ValidationError
from zztemporal.staticgraph import Graph

TRIANGLE = Graph.from_edges([(0, 1), (1, 2), (0, 2)])
SQUARE = Graph.from_edges([(0, 1), (1, 2), (2, 3), (0, 3)])


def test_triangle():
    K = vietoris_rips(TRIANGLE, 1, 2)
    assert K.counts() == [3, 3, 1]
    assert betti_numbers(K) == [1, 0]


def test_four_cycle():
    K = vietoris_rips(SQUARE, 1, 2)
    assert K.counts() == [4, 4, 0]
    assert betti_numbers(K) == [1, 1]


def test_four_cycle_radius_two_fills_in():
    K = vietoris_rips(SQUARE, 2, 2)
    assert K.counts() == [4, 6, 4]
    assert betti_numbers(K) == [1, 0]


def test_radius_zero_is_vertices():
    K = vietoris_rips(SQUARE, 0, 2)
    assert K.counts() == [4, 0, 0]
    assert betti_numbers(K) == [4, 0]


def test_argument_checks():
    with pytest.raises(ValidationError):
        vietoris_rips(SQUARE, -1)
    with pytest.raises(ValidationError):
        betti_numbers(vietoris_rips(SQUARE, 1, 1), p_max=1)


def test_from_simplices_closes_faces():
    K = SimplicialComplex.from_simplices([(2, 0, 1)])
    assert K.counts() == [3, 3, 1]
    assert K.to_text().splitlines()[-1] == "0 1 2"


def test_geodesic_distances():
    g = Graph.from_edges([(0, 1), (1, 2), (5, 6)])
    d = geodesic_distances(g)
    assert d[(0, 2)] == 2
    assert d[(0, 5)] == float("inf")


def random_graph(seed, n=7, p=0.4):
    rng = random.Random(seed)
    return Graph.from_edges([e for e in itertools.combinations(range(n), 2) if rng.random() < p], range(n))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 3))
def test_simplices_are_pairwise_close(seed, r):
    g = random_graph(seed)
    d = geodesic_distances(g)
    K = vietoris_rips(g, r, 3)
    got = K.as_set()
    for k in range(1, 5):
        for s in itertools.combinations(sorted(g.vertices), k):
            assert (s in got) == all(d[(u, v)] <= r for u, v in itertools.combinations(s, 2))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_betti_against_quotient_oracle(seed):
    K = vietoris_rips(random_graph(seed), 1, 2)
    simplices = sorted(K.as_set(), key=lambda s: (len(s), s))
    index = {s: i for i, s in enumerate(simplices)}
    assert betti_numbers(K) == [Homology(simplices, p, index).dim for p in (0, 1)]


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_components_match_networkx(seed):
    g = random_graph(seed, 9, 0.2)
    h = nx.Graph(list(g.edges))
    h.add_nodes_from(g.vertices)
    assert betti_numbers(vietoris_rips(g, 1, 2))[0] == nx.number_connected_components(h)
