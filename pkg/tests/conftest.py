import random
from pathlib import Path

import pytest

from zztemporal.complex import SimplicialComplex
from zztemporal.temporal_graph import from_intervals
from zztemporal.zigzag import ZigzagSequence

FIXTURES = Path(__file__).parent / "fixtures"

CRITERIA: list[str] = []


@pytest.fixture
def criterion():
    """Record one acceptance line; the summary prints them after the run."""

    def record(number: int, ok: bool, detail: str) -> bool:
        CRITERIA.append(f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}")
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in sorted(CRITERIA, key=lambda x: int(x.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)


@pytest.fixture
def fixtures():
    return FIXTURES


def random_temporal_graph(rng: random.Random, max_vertices=10, t_max=10.0, max_edges=20):
    """Random graph on <= max_vertices vertices, 1-3 intervals per edge."""
    nv = rng.randint(2, max_vertices)
    pairs = [(u, v) for u in range(nv) for v in range(u + 1, nv)]
    chosen = rng.sample(pairs, rng.randint(1, min(len(pairs), max_edges)))
    intervals = {}
    for pair in chosen:
        ivs = []
        for _ in range(rng.randint(1, 3)):
            a = round(rng.uniform(0, t_max), 2)
            if rng.random() < 0.2:
                ivs.append((a, a))
            else:
                ivs.append((a, min(t_max, round(a + rng.uniform(0, t_max / 3), 2))))
        intervals[pair] = ivs
    return from_intervals(intervals)


def complex_of(*simplices, d_max=2):
    return SimplicialComplex.from_simplices(simplices, d_max)


def background_zigzag():
    """Two points, a hollow triangle that loses an edge, then a constant path."""
    K0 = complex_of((0,), (1,))
    K01 = complex_of((0, 1), (1, 2), (0, 2))
    K1 = complex_of((0, 1), (1, 2))
    return ZigzagSequence((K0, K01, K1, K1, K1), (0.0, 0.5, 1.0, 1.5, 2.0), 2.5)


# house: a=0, b=1, c=2, d=3, e=4; the square a-b-c-d and the pentagon a-b-e-c-d
# share the path c-d-a-b, and the roof b-e-c sits over the edge bc
SQUARE = [(0, 1), (1, 2), (2, 3), (0, 3)]
PENTAGON = [(0, 1), (1, 4), (2, 4), (2, 3), (0, 3)]
ROOF = [(1, 2, 4)]


def house_zigzags():
    """Four three-position zigzags with one, two, one and one H1 bars."""
    def zz(a, b, c):
        return ZigzagSequence((complex_of(*a), complex_of(*b), complex_of(*c)), (0.0, 0.5, 1.0), 1.5)

    return [
        zz(PENTAGON, PENTAGON, PENTAGON),
        zz(SQUARE, SQUARE + PENTAGON, PENTAGON),
        zz(PENTAGON, PENTAGON + ROOF, PENTAGON),
        zz(SQUARE, SQUARE + PENTAGON + ROOF, PENTAGON),
    ]
