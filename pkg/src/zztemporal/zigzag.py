"""Zigzag persistence of union zigzags ``K_0 -> K_01 <- K_1 -> ... <- K_n``.

The position-level zigzag is refined into single-simplex insertions and
deletions. Reordering all insertions before all deletions leaves the barcode
unchanged up to relabelling arrows, and the resulting up-down sequence is
read off from the ordinary persistence of ``K u (apex * K)``, where each
deleted simplex is coned in reverse deletion order. One GF(2) reduction of
that cone filtration therefore yields every zigzag interval.
"""

from __future__ import annotations

import csv
import io
import json
from bisect import bisect_right
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import NamedTuple

from zztemporal import _kernels
from zztemporal.complex import SimplicialComplex, vietoris_rips
from zztemporal.errors import StructuralError, ValidationError
from zztemporal.windowing import SnapshotSequence

DIAGRAM_HEADER = ("dimension", "birth", "death", "birth_position", "death_position")


@dataclass(frozen=True)
class ZigzagSequence:
    """Complexes at positions 0..2n; odd positions hold the unions."""

    complexes: tuple
    position_labels: tuple
    end_time: float

    def __post_init__(self):
        if len(self.complexes) != len(self.position_labels):
            raise ValidationError("one label per complex required")
        if len(self.complexes) % 2 == 0:
            raise ValidationError("a union zigzag has an odd number of positions")

    @property
    def n(self) -> int:
        return (len(self.complexes) - 1) // 2

    def reversed(self) -> ZigzagSequence:
        labels = tuple(-t for t in reversed(self.position_labels))
        return ZigzagSequence(tuple(reversed(self.complexes)), labels, self.end_time)


def build_zigzag(seq: SnapshotSequence, r: int = 1, d_max: int = 2, threads: int = 1) -> ZigzagSequence:
    graphs = seq.alternating()

    def rips(g):
        return vietoris_rips(g, r, d_max)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            complexes = list(pool.map(rips, graphs))
    else:
        complexes = [rips(g) for g in graphs]
    return ZigzagSequence(tuple(complexes), tuple(seq.labels()), seq.end_time)


class PersistencePair(NamedTuple):
    dimension: int
    birth: float
    death: float
    birth_position: int
    # first position at which the class is gone; 2n + 1 for survivors
    death_position: int


@dataclass(frozen=True)
class ZigzagDiagram:
    pairs: tuple
    p_max: int
    end_time: float

    def in_dim(self, p: int) -> list[PersistencePair]:
        return [x for x in self.pairs if x.dimension == p]

    def points(self, p: int) -> list[tuple[float, float]]:
        return [(x.birth, x.death) for x in self.in_dim(p)]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(DIAGRAM_HEADER)
        for x in self.pairs:
            w.writerow((x.dimension, repr(float(x.birth)), repr(float(x.death)), x.birth_position, x.death_position))
        return buf.getvalue()

    def to_json(self) -> str:
        doc = {
            "p_max": self.p_max,
            "end_time": self.end_time,
            "pairs": [x._asdict() for x in self.pairs],
        }
        return json.dumps(doc, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> ZigzagDiagram:
        doc = json.loads(text)
        pairs = tuple(PersistencePair(**x) for x in doc["pairs"])
        return cls(pairs, doc["p_max"], doc["end_time"])

    @classmethod
    def from_csv(cls, text: str, p_max: int = 1, end_time: float = float("nan")) -> ZigzagDiagram:
        rows = list(csv.reader(io.StringIO(text)))
        if not rows or tuple(rows[0]) != DIAGRAM_HEADER:
            raise ValidationError("not a diagram CSV")
        pairs = tuple(
            PersistencePair(int(d), float(b), float(e), int(bp), int(dp)) for d, b, e, bp, dp in rows[1:]
        )
        return cls(pairs, p_max, end_time)


def diagram_export(d: ZigzagDiagram, path, fmt: str | None = None) -> None:
    """Write ``d`` as CSV or JSON; the format defaults to the file suffix."""
    path = Path(path)
    fmt = fmt or path.suffix.lstrip(".").lower()
    if fmt == "csv":
        text = d.to_csv()
    elif fmt == "json":
        text = d.to_json()
    else:
        raise ValidationError(f"unknown diagram format {fmt!r}")
    try:
        path.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot write diagram to {path}: {exc.strerror}") from exc


class _Linearization(NamedTuple):
    dims: list            # per instance
    faces: list           # per instance: face instance ids
    ins_event: list       # per instance
    del_event: list       # per instance
    deletion_order: list  # instance ids in deletion order
    f_index: list         # per position: number of events applied


def _linearize(complexes) -> _Linearization:
    dims, faces, ins_event, del_event, deletion_order = [], [], [], [], []
    alive: dict = {}
    events = 0
    f_index = []

    def insert(simplices, q):
        nonlocal events
        for s in sorted(simplices, key=lambda s: (len(s), s)):
            try:
                fs = [alive[s[:k] + s[k + 1:]] for k in range(len(s))] if len(s) > 1 else []
            except KeyError:
                raise StructuralError(f"position {q}: simplex {s} inserted before its faces") from None
            alive[s] = len(dims)
            dims.append(len(s) - 1)
            faces.append(fs)
            ins_event.append(events)
            del_event.append(-1)
            events += 1

    def delete(simplices):
        nonlocal events
        for s in sorted(simplices, key=lambda s: (-len(s), s)):
            k = alive.pop(s)
            del_event[k] = events
            deletion_order.append(k)
            events += 1

    prev = frozenset()
    for q, K in enumerate(complexes):
        cur = K.as_set() if isinstance(K, SimplicialComplex) else frozenset(K)
        added, removed = cur - prev, prev - cur
        if q % 2 == 1 and removed:
            raise StructuralError(f"position {q}: union complex misses simplices of position {q - 1}")
        if q % 2 == 0 and q > 0 and added:
            raise StructuralError(f"position {q}: complex is not contained in the union at position {q - 1}")
        delete(removed)
        insert(added, q)
        f_index.append(events)
        prev = cur
    delete(prev)
    return _Linearization(dims, faces, ins_event, del_event, deletion_order, f_index)


def _cone_filtration(lin: _Linearization):
    """Apex first, then insertions, then cones in reverse deletion order.

    With the apex as the oldest vertex its component is the single essential
    class, and every remaining pair is a bar of the extended sequence
    ``H(L_1) -> ... -> H(K) -> H(K, L) -> ... -> H(K, K)``.
    """
    n = len(lin.dims)
    cone_index = [0] * n
    cone_of = {}
    for j, k in enumerate(lin.deletion_order):
        g = 2 * n - j
        cone_index[k] = g
        cone_of[g] = k
    columns = [[] for _ in range(2 * n + 1)]
    dims = [0] * (2 * n + 1)
    for k in range(n):
        columns[k + 1] = [f + 1 for f in lin.faces[k]]
        dims[k + 1] = lin.dims[k]
        g = cone_index[k]
        columns[g] = [k + 1] + ([cone_index[f] for f in lin.faces[k]] if lin.faces[k] else [0])
        dims[g] = lin.dims[k] + 1
    return columns, dims, cone_of


def zigzag_intervals(zz: ZigzagSequence, p_max: int = 1, reduce=None) -> list[tuple[int, int, int]]:
    """Interval decomposition as ``(dimension, first_position, last_position)``.

    Both positions are inclusive. ``reduce`` overrides the reduction backend.
    """
    lin = _linearize(zz.complexes)
    n = len(lin.dims)
    if n == 0:
        return []
    columns, dims, cone_of = _cone_filtration(lin)
    low = (reduce or _kernels.reduce_boundary)(columns, dims)
    unpaired = set(range(2 * n + 1))
    events = []
    for death, birth in enumerate(low):
        if birth < 0:
            continue
        unpaired.discard(birth)
        unpaired.discard(death)
        if death <= n:
            # ordinary: born and killed by insertions
            dim, ev = lin.dims[birth - 1], (lin.ins_event[birth - 1], lin.ins_event[death - 1])
        elif birth <= n:
            # extended: born by an insertion, killed by the cone of a deletion
            dim, ev = lin.dims[birth - 1], (lin.ins_event[birth - 1], lin.del_event[cone_of[death]])
        else:
            # relative: a (p+1)-class of (K, L) is a p-cycle living in the deletion phase
            k = cone_of[birth]
            dim, ev = lin.dims[k], (lin.del_event[cone_of[death]], lin.del_event[k])
        events.append((dim, ev))
    if unpaired != {0}:
        raise StructuralError(f"cone filtration left unexpected essential classes {sorted(unpaired)}")
    out = []
    f = lin.f_index
    for dim, (e_birth, e_death) in events:
        if e_birth > e_death:
            # the insertion was moved ahead of the deletion: in the original
            # order this is a one-step class of one dimension lower
            e_birth, e_death, dim = e_death, e_birth, dim - 1
        if dim > p_max:
            continue
        first = bisect_right(f, e_birth)
        last = bisect_right(f, e_death) - 1
        if first <= last:
            out.append((dim, first, last))
    out.sort()
    return out


def zigzag_persistence(zz: ZigzagSequence, p_max: int = 1, index_coords: bool = False, reduce=None) -> ZigzagDiagram:
    """Persistence pairs in time (default) or index coordinates.

    A class alive on positions ``first..last`` is born at the label of
    ``first`` and dies at the label of ``last + 1``, or at ``end_time`` if it
    survives the final complex. Index coordinates label position ``q`` as
    ``q / 2`` with survivors dying at ``n + 0.5``.
    """
    top = len(zz.complexes) - 1
    if index_coords:
        labels = [q / 2 for q in range(top + 1)]
        end = zz.n + 0.5
    else:
        labels = list(zz.position_labels)
        end = zz.end_time
    pairs = []
    for dim, first, last in zigzag_intervals(zz, p_max, reduce):
        death = labels[last + 1] if last < top else end
        pairs.append(PersistencePair(dim, labels[first], death, first, last + 1))
    pairs.sort()
    return ZigzagDiagram(tuple(pairs), p_max, end)
