import io
import random

import pytest
from hypothesis import given, strategies as st

from conftest import random_temporal_graph
from zztemporal.errors import ParseError, ValidationError
from zztemporal.temporal_graph import (
    WEEK_SECONDS,
    IntervalSet,
    edges_active_in,
    ingest_edge_list,
    ingest_schedule,
    parse_week_time,
    read_edge_csv,
    read_schedule_csv,
    write_edge_csv,
)


def test_single_row():
    g = ingest_edge_list([("a", "b", 0, 1)])
    assert g.vertices == {"a", "b"}
    assert list(g.edges[("a", "b")]) == [(0.0, 1.0)]


def test_duplicate_rows_merge():
    g = ingest_edge_list([("a", "b", 0, 2), ("b", "a", 1, 3)])
    assert list(g.edges[("a", "b")]) == [(0.0, 3.0)]


def test_touching_intervals_merge():
    assert list(IntervalSet([(2, 3), (0, 1), (1, 2), (5, 5)])) == [(0, 3), (5, 5)]


def test_method_fixture(fixtures):
    g = read_edge_csv(fixtures / "method_example.csv")
    assert len(g.vertices) == 5
    assert g.num_edges == 5
    assert g.time_domain == (0.0, 10.0)


@pytest.mark.parametrize(
    "rows,exc,match",
    [
        ([("a", "b", 0)], ParseError, "row 1"),
        ([("a", "b", 0, 1), ("a", "c", "x", 1)], ParseError, "row 2"),
        ([("a", "b", 2, 1)], ValidationError, "t_start"),
        ([("a", "a", 0, 1)], ValidationError, r"\(a, a\)"),
        ([], ValidationError, "no edges"),
    ],
)
def test_ingest_errors(rows, exc, match):
    with pytest.raises(exc, match=match):
        ingest_edge_list(rows)


def test_schedule_units_and_undirected_merge():
    g = ingest_schedule([("X", "Y", "00:00", "00:10")])
    assert list(g.edges[("X", "Y")]) == [(0.0, 600.0)]
    g = ingest_schedule([("X", "Y", 0, 600), ("Y", "X", 300, 900)])
    assert list(g.edges[("X", "Y")]) == [(0.0, 900.0)]


@pytest.mark.parametrize("text,secs", [("0:00", 0), ("08:30", 30600), ("167:59:30", 604770), ("42.5", 42.5)])
def test_week_time(text, secs):
    assert parse_week_time(text) == secs


def test_week_time_errors():
    with pytest.raises(ParseError):
        parse_week_time("8am")
    with pytest.raises(ValidationError):
        parse_week_time("169:00")
    with pytest.raises(ValidationError, match="arrival"):
        ingest_schedule([("X", "Y", "01:00", "00:30")])


def test_weekly_fixture(fixtures):
    g = read_schedule_csv(fixtures / "weekly_schedule.csv")
    assert g.time_domain == (0.0, WEEK_SECONDS)
    assert g.vertices == {"A", "B", "C"}
    buf = io.StringIO()
    write_edge_csv(g, buf)
    assert read_edge_csv(io.StringIO(buf.getvalue())) == g


def test_edges_active_in():
    g = ingest_edge_list([("a", "b", 0, 1), ("c", "d", 5, 10)])
    assert edges_active_in(g, (1, 2)) == {("a", "b")}
    assert edges_active_in(g, (1.5, 2)) == set()
    # clamping keeps windows that overrun the domain meaningful
    assert edges_active_in(g, (9, 12)) == {("c", "d")}
    assert edges_active_in(g, g.time_domain) == set(g.edges)


def test_method_window_breaks_cycle(fixtures):
    g = read_edge_csv(fixtures / "method_example.csv")
    active = edges_active_in(g, (4, 5))
    assert ("0", "4") not in active
    assert len(active) == 4


def test_header_checked():
    with pytest.raises(ParseError, match="header"):
        read_edge_csv(io.StringIO("a,b,c,d\n1,2,0,1\n"))
    with pytest.raises(ValidationError, match="empty"):
        read_edge_csv(io.StringIO(""))


@given(st.integers(0, 10**6))
def test_export_ingest_idempotent(seed):
    g = random_temporal_graph(random.Random(seed))
    buf = io.StringIO()
    write_edge_csv(g, buf)
    h = read_edge_csv(io.StringIO(buf.getvalue()))
    assert {tuple(map(int, p)): list(s) for p, s in h.edges.items()} == {p: list(s) for p, s in g.edges.items()}
    assert h.time_domain == g.time_domain
