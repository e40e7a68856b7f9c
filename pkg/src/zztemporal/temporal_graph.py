"""Temporal graphs whose undirected edges carry closed activation intervals.

An instant ``t`` is stored as the degenerate interval ``[t, t]`` so one model
covers both interval-valued data (timetables) and instant-valued data
(ordinal partition network transitions).
"""

from __future__ import annotations

import csv
import io
import math
import re
from bisect import bisect_right
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from zztemporal.errors import ParseError, ValidationError

WEEK_SECONDS = 7 * 86400
EDGE_HEADER = ("u", "v", "t_start", "t_end")
SCHEDULE_HEADER = ("origin", "destination", "departure", "arrival")


def canonical_pair(u, v):
    """Unordered pair as a sorted tuple; self-pairs are rejected."""
    if u == v:
        raise ValidationError(f"self-loop on vertex {u!r}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class IntervalSet:
    """Sorted, pairwise disjoint closed intervals.

    Overlapping or touching intervals are merged on construction, so
    ``IntervalSet([(0, 2), (1, 3)])`` holds the single interval ``[0, 3]``.
    """

    intervals: tuple[tuple[float, float], ...] = ()
    _ends: tuple[float, ...] = field(default=(), init=False, repr=False, compare=False)
    _starts: tuple[float, ...] = field(default=(), init=False, repr=False, compare=False)

    def __init__(self, intervals: Iterable[tuple[float, float]] = ()):
        merged: list[list[float]] = []
        for a, b in sorted((float(a), float(b)) for a, b in intervals):
            if a > b:
                raise ValidationError(f"interval [{a}, {b}] has start after end")
            if merged and a <= merged[-1][1]:
                merged[-1][1] = max(merged[-1][1], b)
            else:
                merged.append([a, b])
        ivs = tuple((a, b) for a, b in merged)
        object.__setattr__(self, "intervals", ivs)
        object.__setattr__(self, "_starts", tuple(a for a, _ in ivs))
        object.__setattr__(self, "_ends", tuple(b for _, b in ivs))

    def __len__(self):
        return len(self.intervals)

    def __iter__(self):
        return iter(self.intervals)

    def intersects(self, lo: float, hi: float) -> bool:
        """True if some interval meets the closed window ``[lo, hi]``."""
        k = bisect_right(self._starts, hi) - 1
        return k >= 0 and self._ends[k] >= lo

    def union(self, other: IntervalSet) -> IntervalSet:
        return IntervalSet(self.intervals + other.intervals)


@dataclass(frozen=True, eq=True)
class TemporalGraph:
    vertices: frozenset
    edges: dict
    time_domain: tuple[float, float]

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def sorted_edges(self):
        return sorted(self.edges)

    def rows(self):
        """Yield ``(u, v, t_start, t_end)`` rows, one per interval, in canonical order."""
        for pair in self.sorted_edges():
            for a, b in self.edges[pair]:
                yield (pair[0], pair[1], a, b)


def from_intervals(intervals: dict, time_domain=None) -> TemporalGraph:
    """Assemble a graph from ``{pair: [(a, b), ...]}`` with canonical pairs."""
    edges = {}
    for pair, ivs in intervals.items():
        iset = IntervalSet(ivs)
        if len(iset):
            edges[canonical_pair(*pair)] = iset
    vertices = frozenset(v for pair in edges for v in pair)
    if time_domain is None:
        if edges:
            time_domain = (
                min(iset.intervals[0][0] for iset in edges.values()),
                max(iset.intervals[-1][1] for iset in edges.values()),
            )
        else:
            time_domain = (0.0, 0.0)
    t_min, t_max = float(time_domain[0]), float(time_domain[1])
    for pair, iset in edges.items():
        if iset.intervals[0][0] < t_min or iset.intervals[-1][1] > t_max:
            raise ValidationError(f"edge {pair} has activity outside the time domain")
    return TemporalGraph(vertices, edges, (t_min, t_max))


def _number(value, row_no, name):
    try:
        x = float(value)
    except (TypeError, ValueError):
        raise ParseError(f"row {row_no}: {name} {value!r} is not a number") from None
    if not math.isfinite(x):
        raise ParseError(f"row {row_no}: {name} {value!r} is not finite")
    return x


def _vertex(value, row_no):
    if isinstance(value, str):
        value = value.strip()
        if not value:
            raise ParseError(f"row {row_no}: empty vertex identifier")
    return value


def ingest_edge_list(rows: Iterable[Sequence], *, first_row: int = 1) -> TemporalGraph:
    """Build a temporal graph from ``(u, v, t_start, t_end)`` rows.

    Repeated pairs accumulate intervals, which are then merged. Row numbers in
    error messages count from ``first_row``.
    """
    acc: dict = {}
    for row_no, row in enumerate(rows, start=first_row):
        if len(row) != 4:
            raise ParseError(f"row {row_no}: expected 4 fields, got {len(row)}")
        u, v = _vertex(row[0], row_no), _vertex(row[1], row_no)
        a = _number(row[2], row_no, "t_start")
        b = _number(row[3], row_no, "t_end")
        if a > b:
            raise ValidationError(f"row {row_no}: t_start {a} > t_end {b}")
        if u == v:
            raise ValidationError(f"row {row_no}: self-loop ({u}, {v})")
        acc.setdefault(canonical_pair(u, v), []).append((a, b))
    if not acc:
        raise ValidationError("no edges in input")
    return from_intervals(acc)


_CLOCK = re.compile(r"^(\d+):([0-5]\d)(?::([0-5]\d(?:\.\d+)?))?$")


def parse_week_time(value, row_no=0) -> float:
    """Seconds since the start of the week from seconds or ``HH:MM[:SS]``.

    Hours may run past 24 so a week-long timetable is written ``0:00`` to
    ``168:00``.
    """
    text = str(value).strip()
    m = _CLOCK.match(text)
    if m:
        secs = int(m.group(1)) * 3600 + int(m.group(2)) * 60 + float(m.group(3) or 0)
    else:
        try:
            secs = float(text)
        except ValueError:
            raise ParseError(f"row {row_no}: unknown time format {text!r}") from None
        if not math.isfinite(secs):
            raise ParseError(f"row {row_no}: unknown time format {text!r}")
    if secs < 0 or secs > WEEK_SECONDS:
        raise ValidationError(f"row {row_no}: time {text!r} outside the 7-day span")
    return secs


def ingest_schedule(rows: Iterable[Sequence], *, first_row: int = 1) -> TemporalGraph:
    """Each trip makes its (undirected) edge active from departure to arrival."""
    acc: dict = {}
    for row_no, row in enumerate(rows, start=first_row):
        if len(row) != 4:
            raise ParseError(f"row {row_no}: expected 4 fields, got {len(row)}")
        o, d = _vertex(row[0], row_no), _vertex(row[1], row_no)
        dep = parse_week_time(row[2], row_no)
        arr = parse_week_time(row[3], row_no)
        if arr < dep:
            raise ValidationError(f"row {row_no}: arrival before departure")
        if o == d:
            raise ValidationError(f"row {row_no}: self-loop ({o}, {d})")
        acc.setdefault(canonical_pair(o, d), []).append((dep, arr))
    if not acc:
        raise ValidationError("no trips in input")
    return from_intervals(acc)


def edges_active_in(g: TemporalGraph, window: tuple[float, float]) -> set:
    """Edges whose intervals meet the closed window (clamped to the time domain)."""
    lo = max(window[0], g.time_domain[0])
    hi = min(window[1], g.time_domain[1])
    if lo > hi:
        return set()
    return {pair for pair, iset in g.edges.items() if iset.intersects(lo, hi)}


def _read_table(source, header, what):
    if isinstance(source, (str, Path)):
        text = Path(source).read_text(encoding="utf-8")
    else:
        text = source.read()
    reader = csv.reader(io.StringIO(text))
    try:
        first = next(reader)
    except StopIteration:
        raise ValidationError(f"empty {what} file") from None
    if tuple(c.strip() for c in first) != header:
        raise ParseError(f"row 0: expected header {','.join(header)}")
    return [row for row in reader if row]


def read_edge_csv(source) -> TemporalGraph:
    """Read a ``u,v,t_start,t_end`` CSV (path or text stream)."""
    return ingest_edge_list(_read_table(source, EDGE_HEADER, "edge list"))


def read_schedule_csv(source) -> TemporalGraph:
    return ingest_schedule(_read_table(source, SCHEDULE_HEADER, "schedule"))


def format_float(x: float) -> str:
    return repr(float(x))


def write_edge_csv(g: TemporalGraph, target) -> None:
    """Write one row per activation interval; floats use round-trip repr."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(EDGE_HEADER)
    for u, v, a, b in g.rows():
        w.writerow((u, v, format_float(a), format_float(b)))
    if isinstance(target, (str, Path)):
        Path(target).write_text(buf.getvalue(), encoding="utf-8")
    else:
        target.write(buf.getvalue())
