"""Ordinal partition networks of scalar time series.

A delay embedding ``v_i = [x_i, x_{i+tau}, ..., x_{i+(m-1)tau}]`` is mapped
to the permutation that sorts it (ties by index). Consecutive distinct
permutations become an undirected edge active at the instant of the first
vector of the pair.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from zztemporal.errors import ParseError, ValidationError
from zztemporal.temporal_graph import TemporalGraph, from_intervals


@dataclass(frozen=True)
class TimeSeries:
    samples: np.ndarray
    sample_rate: float
    t0: float = 0.0

    def __post_init__(self):
        if not self.sample_rate > 0:
            raise ValidationError(f"sample_rate must be positive, got {self.sample_rate}")
        object.__setattr__(self, "samples", np.asarray(self.samples, dtype=float))

    def __len__(self):
        return len(self.samples)

    def times(self) -> np.ndarray:
        return self.t0 + np.arange(len(self.samples)) / self.sample_rate


@dataclass(frozen=True)
class PermutationSequence:
    m: int
    tau: int
    perms: list
    start_indices: list


def _check_finite(values):
    if not np.all(np.isfinite(values)):
        raise ValidationError("time series contains non-finite values")


def assign_permutation(v) -> tuple:
    """Permutation ``p`` with ``v[p[0]] <= v[p[1]] <= ...``; ties keep index order.

    >>> assign_permutation([1.0, 3.0, 2.0])
    (0, 2, 1)
    """
    v = np.asarray(v, dtype=float)
    if v.ndim != 1 or len(v) < 2:
        raise ValidationError("need a vector of length >= 2")
    _check_finite(v)
    return tuple(int(k) for k in np.argsort(v, kind="stable"))


def _embedding_ranks(samples: np.ndarray, m: int, tau: int) -> np.ndarray:
    need = (m - 1) * tau + 1
    if len(samples) < need:
        raise ValidationError(f"series of length {len(samples)} too short: m={m}, tau={tau} need {need} samples")
    windows = np.lib.stride_tricks.sliding_window_view(samples, need)[:, ::tau]
    return np.argsort(windows, axis=1, kind="stable")


def permutation_sequence(x: TimeSeries, m: int, tau: int) -> PermutationSequence:
    if m < 2 or tau < 1:
        raise ValidationError(f"need m >= 2 and tau >= 1, got m={m}, tau={tau}")
    _check_finite(x.samples)
    ranks = _embedding_ranks(x.samples, m, tau)
    perms = [tuple(int(k) for k in row) for row in ranks]
    return PermutationSequence(m, tau, perms, list(range(len(perms))))


def permutation_entropy(x: TimeSeries, m: int, tau: int) -> float:
    """Shannon entropy (bits) of the ordinal pattern distribution over log2(m!)."""
    ranks = _embedding_ranks(x.samples, m, tau)
    codes = ranks @ (m ** np.arange(m))
    _, counts = np.unique(codes, return_counts=True)
    p = counts / counts.sum()
    return float(-(p * np.log2(p)).sum() / math.log2(math.factorial(m)))


def entropy_curve(x: TimeSeries, m: int, tau_max: int) -> np.ndarray:
    """Normalized permutation entropy for tau = 1..tau_max (index 0 is tau=1)."""
    if tau_max < 2:
        raise ValidationError(f"tau_max must be >= 2, got {tau_max}")
    _check_finite(x.samples)
    if len(x.samples) < (m - 1) * tau_max + 1:
        raise ValidationError(
            f"series of length {len(x.samples)} too short for tau_max={tau_max} (need {(m - 1) * tau_max + 1})"
        )
    return np.array([permutation_entropy(x, m, tau) for tau in range(1, tau_max + 1)])


def mspe_delay(x: TimeSeries, m: int = 3, tau_max: int = 100) -> int:
    """Delay at the first interior local maximum of the entropy curve.

    A maximum must rise strictly from the left (``h(tau) > h(tau-1)``) and not
    fall short on the right (``h(tau) >= h(tau+1)``), which keeps flat curves
    from reporting a spurious peak. Without one, the global argmax is used.
    """
    h = entropy_curve(x, m, tau_max)
    for k in range(1, len(h) - 1):
        if h[k] > h[k - 1] and h[k] >= h[k + 1]:
            return k + 1
    return int(np.argmax(h)) + 1


def perm_label(perm) -> str:
    sep = "" if len(perm) <= 10 else "-"
    return sep.join(str(k) for k in perm)


def build_opn(ps: PermutationSequence, sample_rate: float, t0: float = 0.0) -> TemporalGraph:
    """Temporal OPN: one instant per transition between distinct permutations."""
    if not ps.perms:
        raise ValidationError("empty permutation sequence")
    instants: dict = {}
    labels = [perm_label(p) for p in ps.perms]
    for k in range(len(labels) - 1):
        a, b = labels[k], labels[k + 1]
        if a == b:
            continue
        t = t0 + ps.start_indices[k] / sample_rate
        pair = (a, b) if a < b else (b, a)
        instants.setdefault(pair, []).append((t, t))
    return from_intervals(instants)


def read_series(source, fs: float | None = None) -> TimeSeries:
    """Read a single-column sample CSV (needs ``fs``) or a two-column ``t,x`` CSV."""
    if isinstance(source, (str, Path)):
        text = Path(source).read_text(encoding="utf-8")
    else:
        text = source.read()
    rows = [r for r in csv.reader(io.StringIO(text)) if r]
    if not rows:
        raise ValidationError("empty time-series file")
    header = [c.strip() for c in rows[0]]
    if header == ["t", "x"] or header == ["x"]:
        rows = rows[1:]
    if not rows:
        raise ValidationError("time-series file has no samples")
    width = len(rows[0])
    try:
        data = np.array([[float(c) for c in r] for r in rows], dtype=float)
    except ValueError as exc:
        raise ParseError(f"non-numeric sample: {exc}") from None
    if data.ndim != 2 or data.shape[1] != width or width not in (1, 2):
        raise ParseError("time series must have one column (x) or two columns (t,x)")
    _check_finite(data)
    if width == 1:
        if fs is None:
            raise ValidationError("single-column series needs a sampling rate (--fs)")
        return TimeSeries(data[:, 0], float(fs))
    t = data[:, 0]
    if fs is None:
        if len(t) < 2:
            raise ValidationError("cannot infer sampling rate from one sample")
        # t columns written at 1/fs spacing carry rounding noise in the last digits
        fs = float(f"{1.0 / float(np.median(np.diff(t))):.9g}")
    return TimeSeries(data[:, 1], float(fs), float(t[0]))


def write_series(x: TimeSeries, target) -> None:
    buf = io.StringIO()
    buf.write("t,x\n")
    for t, v in zip(x.times(), x.samples):
        buf.write(f"{float(t)!r},{float(v)!r}\n")
    if isinstance(target, (str, Path)):
        Path(target).write_text(buf.getvalue(), encoding="utf-8")
    else:
        target.write(buf.getvalue())
