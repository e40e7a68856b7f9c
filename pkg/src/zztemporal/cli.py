"""Command-line pipelines: temporal graph or time series in, diagrams and statistics out.

Every option can also come from a flat ``key = value`` config file given with
``--config``; keys are the long option names (``index-coords`` or
``index_coords``). Flags on the command line win over the file.
"""

from __future__ import annotations

import argparse
import io
import logging
import sys
from dataclasses import dataclass
from pathlib import Path

from zztemporal import __version__, _kernels
from zztemporal.dynamics import LorenzConfig, simulate_lorenz
from zztemporal.errors import ConfigurationError, ParseError, ZigzagError
from zztemporal.graphstats import stats_series, stats_to_csv
from zztemporal.opn import build_opn, mspe_delay, permutation_sequence, read_series, write_series
from zztemporal.temporal_graph import TemporalGraph, read_edge_csv, read_schedule_csv, write_edge_csv
from zztemporal.windowing import build_snapshots, make_plan
from zztemporal.zigzag import build_zigzag, zigzag_persistence

log = logging.getLogger("zztemporal")

EXIT_CODES = {"parse": 3, "validation": 4, "structural": 5, "io": 6}


@dataclass
class PipelineConfig:
    input: str = "-"
    kind: str = "edges"
    width: float = 1.0
    overlap: float = 0.0
    r: int = 1
    d_max: int = 2
    p_max: int = 1
    index_coords: bool = False
    threads: int = 1
    fs: float | None = None
    m: int = 6
    tau: int | None = 30  # None selects the delay by MsPE
    tau_max: int = 100
    window_mult: float = 10.0


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot read {path}: {exc.strerror}") from None


def _write_text(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc.strerror}") from None


def load_graph(cfg: PipelineConfig) -> TemporalGraph:
    text = io.StringIO(_read_text(cfg.input))
    if cfg.kind == "edges":
        g = read_edge_csv(text)
    elif cfg.kind == "schedule":
        g = read_schedule_csv(text)
    else:
        raise ConfigurationError(f"input kind {cfg.kind!r} is not a temporal graph")
    log.info("graph: %d vertices, %d edges, domain %s", len(g.vertices), g.num_edges, g.time_domain)
    return g


def graph_outputs(g: TemporalGraph, cfg: PipelineConfig, width: float) -> dict:
    """Diagram and statistics CSV text for one temporal graph."""
    plan = make_plan(g.time_domain, width, cfg.overlap)
    log.info("%d windows of width %r, step %r", plan.count, plan.width, plan.step)
    seq = build_snapshots(g, plan, cfg.threads)
    zz = build_zigzag(seq, cfg.r, cfg.d_max, cfg.threads)
    diagram = zigzag_persistence(zz, cfg.p_max, index_coords=cfg.index_coords)
    log.info("%d persistence pairs (%s reduction)", len(diagram.pairs), _kernels.BACKEND)
    stats = stats_series(seq.snapshots, seq.snapshot_labels, cfg.threads)
    return {"diagram.csv": diagram.to_csv(), "stats.csv": stats_to_csv(stats)}


def run_temporal_pipeline(cfg: PipelineConfig) -> dict:
    """Edge list or schedule to ``{"diagram.csv": text, "stats.csv": text}``."""
    return graph_outputs(load_graph(cfg), cfg, cfg.width)


def run_opn_pipeline(cfg: PipelineConfig, series=None) -> dict:
    """Time series to diagram, statistics and the OPN as a temporal edge CSV.

    The window spans ``window_mult * tau`` samples. Feeding ``opn_edges.csv``
    back through :func:`run_temporal_pipeline` with ``width`` equal to that
    span in seconds reproduces the diagram.
    """
    x = series if series is not None else read_series(io.StringIO(_read_text(cfg.input)), cfg.fs)
    tau = cfg.tau if cfg.tau is not None else mspe_delay(x, cfg.m, cfg.tau_max)
    log.info("%d samples at %r Hz, m=%d, tau=%d", len(x), x.sample_rate, cfg.m, tau)
    g = build_opn(permutation_sequence(x, cfg.m, tau), x.sample_rate, x.t0)
    buf = io.StringIO()
    write_edge_csv(g, buf)
    width = opn_window_width(cfg, tau, x.sample_rate)
    out = graph_outputs(g, cfg, width)
    out["opn_edges.csv"] = buf.getvalue()
    return out


def opn_window_width(cfg: PipelineConfig, tau: int, fs: float) -> float:
    return cfg.window_mult * tau / fs


# argument parsing


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigurationError(message)


def _tau(value):
    if str(value).strip().lower() == "auto":
        return None
    try:
        tau = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"tau must be 'auto' or a positive integer, got {value!r}") from None
    if tau < 1:
        raise argparse.ArgumentTypeError(f"tau must be positive, got {tau}")
    return tau


def _kind(value):
    if value not in ("edges", "schedule", "timeseries"):
        raise argparse.ArgumentTypeError(f"kind must be edges, schedule or timeseries, got {value!r}")
    return value


def _flag(value):
    if isinstance(value, bool):
        return value
    text = str(value).strip().lower()
    if text in ("1", "true", "yes", "on"):
        return True
    if text in ("0", "false", "no", "off"):
        return False
    raise argparse.ArgumentTypeError(f"expected a boolean, got {value!r}")


def _add_window(p, width=True):
    if width:
        p.add_argument("--width", type=float, default=1.0, help="full window width in time units")
    p.add_argument("--overlap", type=float, default=0.0, help="overlap fraction of adjacent windows, in [0, 1)")


def _add_zigzag(p):
    p.add_argument("--r", type=int, default=1, help="Vietoris-Rips hop radius")
    p.add_argument("--d-max", type=int, default=2, help="largest simplex dimension")
    p.add_argument("--pmax", type=int, default=1, help="largest homology dimension reported")
    p.add_argument("--index-coords", type=_flag, nargs="?", const=True, default=False,
                   help="report births and deaths as position/2 instead of times")


def _add_opn(p):
    p.add_argument("--fs", type=float, default=None, help="sampling rate for single-column input")
    p.add_argument("--m", type=int, default=6, help="embedding dimension")
    p.add_argument("--tau", type=_tau, default=30, help="delay in samples, or 'auto'")
    p.add_argument("--tau-max", type=int, default=100, help="largest delay scanned by --tau auto")
    p.add_argument("--window-mult", type=float, default=10.0, help="window width in multiples of tau")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--config", help="flat key = value file with defaults for any option")
    common.add_argument("--threads", type=int, default=1, help="worker threads for per-window stages")
    common.add_argument("-v", "--verbose", action="count", default=0, help="log progress to stderr")

    parser = _Parser(prog="zztemporal", description="Zigzag persistence of temporal graphs and time series.")
    parser.add_argument("--version", action="version", version=f"zztemporal {__version__} ({_kernels.BACKEND} kernels)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("ingest", parents=[common], help="normalize an edge list or schedule to edge CSV")
    p.add_argument("--input", default="-")
    p.add_argument("--kind", type=_kind, default="edges")
    p.add_argument("--out", default="-")

    p = sub.add_parser("lorenz", parents=[common], help="simulate the x component of the Lorenz system")
    p.add_argument("--sigma", type=float, default=10.0)
    p.add_argument("--rho", type=float, default=166.15)
    p.add_argument("--beta", type=float, default=8.0 / 3.0)
    p.add_argument("--fs", type=float, default=100.0)
    p.add_argument("--duration", type=float, default=500.0)
    p.add_argument("--keep", type=float, default=70.0)
    p.add_argument("--out", default="-")

    p = sub.add_parser("opn", parents=[common], help="ordinal partition network pipeline")
    p.add_argument("--input", default="-")
    _add_opn(p)
    _add_window(p, width=False)
    _add_zigzag(p)
    p.add_argument("--out", default="-", help="diagram CSV")
    p.add_argument("--stats-out", help="statistics CSV")
    p.add_argument("--edges-out", help="OPN temporal edge CSV")
    p.set_defaults(overlap=0.8)

    p = sub.add_parser("zigzag", parents=[common], help="zigzag persistence diagram of a temporal graph")
    p.add_argument("--input", default="-")
    p.add_argument("--kind", type=_kind, default="edges")
    _add_window(p)
    _add_zigzag(p)
    p.add_argument("--out", default="-", help="diagram file; .json selects JSON")

    p = sub.add_parser("stats", parents=[common], help="connectivity and centrality per snapshot")
    p.add_argument("--input", default="-")
    p.add_argument("--kind", type=_kind, default="edges")
    _add_window(p)
    p.add_argument("--out", default="-")

    p = sub.add_parser("all", parents=[common], help="full pipeline into an output directory")
    p.add_argument("--input", default="-")
    p.add_argument("--kind", type=_kind, default="edges")
    _add_window(p)
    _add_zigzag(p)
    _add_opn(p)
    p.add_argument("--out-dir", required=True)
    parser.subcommands = sub.choices
    return parser


def read_config_file(path: str) -> dict:
    out = {}
    for no, line in enumerate(_read_text(path).splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ParseError(f"{path}:{no}: expected key = value")
        out[key.strip().replace("-", "_")] = value.strip()
    return out


def parse_args(argv) -> argparse.Namespace:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.config:
        values = read_config_file(args.config)
        subparser = parser.subcommands[args.command]
        known = {a.dest for a in subparser._actions}
        unknown = sorted(set(values) - known - {"config"})
        if unknown:
            raise ConfigurationError(f"unknown config keys for {args.command}: {', '.join(unknown)}")
        # string defaults pass through each option's type on the reparse
        subparser.set_defaults(**values)
        args = parser.parse_args(argv)
    return args


def _config(args) -> PipelineConfig:
    cfg = PipelineConfig()
    for name in ("input", "kind", "width", "overlap", "r", "d_max", "threads", "fs", "m", "tau", "tau_max", "window_mult"):
        if hasattr(args, name):
            setattr(cfg, name, getattr(args, name))
    if hasattr(args, "pmax"):
        cfg.p_max = args.pmax
        cfg.index_coords = bool(args.index_coords)
    if cfg.threads < 1:
        raise ConfigurationError(f"threads must be at least 1, got {cfg.threads}")
    if cfg.p_max < 0 or cfg.d_max < cfg.p_max + 1:
        raise ConfigurationError(f"need 0 <= pmax < d-max, got pmax={cfg.p_max}, d-max={cfg.d_max}")
    return cfg


def _cmd_ingest(args):
    g = load_graph(_config(args))
    buf = io.StringIO()
    write_edge_csv(g, buf)
    _write_text(args.out, buf.getvalue())


def _cmd_lorenz(args):
    x = simulate_lorenz(LorenzConfig(args.sigma, args.rho, args.beta, args.fs, args.duration, args.keep))
    buf = io.StringIO()
    write_series(x, buf)
    _write_text(args.out, buf.getvalue())


def _cmd_opn(args):
    out = run_opn_pipeline(_config(args))
    _write_text(args.out, out["diagram.csv"])
    if args.stats_out:
        _write_text(args.stats_out, out["stats.csv"])
    if args.edges_out:
        _write_text(args.edges_out, out["opn_edges.csv"])


def _cmd_zigzag(args):
    cfg = _config(args)
    g = load_graph(cfg)
    plan = make_plan(g.time_domain, cfg.width, cfg.overlap)
    zz = build_zigzag(build_snapshots(g, plan, cfg.threads), cfg.r, cfg.d_max, cfg.threads)
    d = zigzag_persistence(zz, cfg.p_max, index_coords=cfg.index_coords)
    _write_text(args.out, d.to_json() if args.out.lower().endswith(".json") else d.to_csv())


def _cmd_stats(args):
    cfg = _config(args)
    g = load_graph(cfg)
    seq = build_snapshots(g, make_plan(g.time_domain, cfg.width, cfg.overlap), cfg.threads)
    _write_text(args.out, stats_to_csv(stats_series(seq.snapshots, seq.snapshot_labels, cfg.threads)))


def _cmd_all(args):
    cfg = _config(args)
    out = run_opn_pipeline(cfg) if cfg.kind == "timeseries" else run_temporal_pipeline(cfg)
    target = Path(args.out_dir)
    try:
        target.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise OSError(f"cannot create {target}: {exc.strerror}") from None
    for name, text in sorted(out.items()):
        _write_text(str(target / name), text)


COMMANDS = {
    "ingest": _cmd_ingest,
    "lorenz": _cmd_lorenz,
    "opn": _cmd_opn,
    "zigzag": _cmd_zigzag,
    "stats": _cmd_stats,
    "all": _cmd_all,
}


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parse_args(argv)
        logging.basicConfig(
            stream=sys.stderr,
            level=logging.WARNING - 10 * min(args.verbose, 2),
            format="%(levelname)s %(name)s: %(message)s",
        )
        COMMANDS[args.command](args)
    except ZigzagError as exc:
        print(f"error: {exc.category}: {exc}", file=sys.stderr)
        return EXIT_CODES.get(exc.category, 1)
    except OSError as exc:
        print(f"error: io: {exc}", file=sys.stderr)
        return EXIT_CODES["io"]
    return 0


if __name__ == "__main__":
    sys.exit(main())
