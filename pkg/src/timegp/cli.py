"""Command-line front end: run experiments, sweep group counts, plot results.

Config files are flat ``key=value`` text; every key has a flag twin and
flags win.  CSV schema (fixed):

    generation,best_fitness_mean,best_fitness_sd,avg_fitness_mean,
    avg_fitness_sd,avg_size_mean,avg_size_sd,avg_duration_mean

The combined sweep CSV appends a ``groups`` column.  SDs are sample (n-1).
Exit codes: 0 success, 2 usage error, 1 runtime failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from pathlib import Path

from . import __version__
from .breeding import BreedPlan
from .engine import AggregateRow, ExperimentConfig, aggregate, run_experiment
from .errors import ConfigurationError, GPError, UsageError
from .plotting import line_chart_svg
from .timing import TimerMode

CSV_HEADER = ("generation,best_fitness_mean,best_fitness_sd,avg_fitness_mean,"
              "avg_fitness_sd,avg_size_mean,avg_size_sd,avg_duration_mean")

METRICS = ("avg_size", "best_fitness", "avg_fitness")

_INT_KEYS = {"bits", "pop", "gens", "groups", "runs", "seed", "workers",
             "tournament", "max_depth"}
_FLOAT_KEYS = {"xo_prob"}
_STR_KEYS = {"timer", "out", "prefix", "metric"}
_ALL_KEYS = _INT_KEYS | _FLOAT_KEYS | _STR_KEYS

_DEFAULTS = {
    "pop": 1024, "gens": 50, "groups": "1", "runs": 1, "seed": 0,
    "timer": "cost", "workers": 1, "tournament": 7, "xo_prob": 0.9,
    "max_depth": 17, "out": None, "prefix": "sweep", "metric": "avg_size",
}


def _parse_config_file(path: str) -> dict:
    values = {}
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read config file: {exc}") from exc
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected key=value, got {raw!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        if key not in _ALL_KEYS:
            raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
        try:
            if key in _INT_KEYS and key != "groups":
                values[key] = int(value)
            elif key in _FLOAT_KEYS:
                values[key] = float(value)
            else:
                values[key] = value
        except ValueError as exc:
            raise UsageError(f"{path}:{lineno}: bad value for {key!r}: {value!r}") from exc
    return values


def _merged_settings(args) -> dict:
    settings = dict(_DEFAULTS)
    if getattr(args, "config", None):
        settings.update(_parse_config_file(args.config))
    for key in _ALL_KEYS:
        flag = getattr(args, key, None)
        if flag is not None:
            settings[key] = flag
    return settings


def _timer_mode(name: str) -> TimerMode:
    try:
        return TimerMode(name)
    except ValueError:
        raise UsageError(f"timer must be 'cost' or 'wall', got {name!r}") from None


def _build_config(settings: dict, groups: int) -> ExperimentConfig:
    if settings.get("bits") is None:
        raise UsageError("missing required setting 'bits' (--bits or config file)")
    xo = settings["xo_prob"]
    plan = BreedPlan(crossover_prob=xo, reproduction_prob=1.0 - xo,
                     tournament_k=settings["tournament"])
    return ExperimentConfig(
        num_bits=settings["bits"],
        population_size=settings["pop"],
        generations=settings["gens"],
        groups=groups,
        runs=settings["runs"],
        timer_mode=_timer_mode(settings["timer"]),
        workers=settings["workers"],
        master_seed=settings["seed"],
        plan=plan,
        max_depth=settings["max_depth"],
    )


def _csv_text(rows: list[AggregateRow], groups: int | None = None) -> str:
    buf = io.StringIO()
    header = CSV_HEADER + (",groups" if groups is not None else "")
    buf.write(header + "\n")
    for r in rows:
        fields = [str(r.generation), str(r.best_fitness_mean),
                  str(r.best_fitness_sd), str(r.avg_fitness_mean),
                  str(r.avg_fitness_sd), str(r.avg_size_mean),
                  str(r.avg_size_sd), str(r.avg_duration_mean)]
        if groups is not None:
            fields.append(str(groups))
        buf.write(",".join(fields) + "\n")
    return buf.getvalue()


def _write_text(path: str | None, text: str):
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8", newline="")


def _warn_if_long_running(config: ExperimentConfig):
    # large configurations (12+ bits, long runs) are accepted but worth flagging
    evals = config.population_size * (config.generations + 1) * config.runs
    if config.num_bits >= 12 or evals >= 10_000_000:
        print(f"note: large configuration ({config.num_bits} bits, "
              f"~{evals} evaluations); this may take a long time",
              file=sys.stderr)


def cmd_run(args) -> int:
    settings = _merged_settings(args)
    groups = int(settings["groups"])
    config = _build_config(settings, groups)
    _warn_if_long_running(config)
    rows = aggregate(run_experiment(config))
    _write_text(settings["out"], _csv_text(rows))
    return 0


def _parse_group_list(raw: str) -> list[int]:
    try:
        counts = [int(s) for s in raw.split(",") if s.strip()]
    except ValueError:
        raise UsageError(f"bad group list: {raw!r}") from None
    if not counts:
        raise UsageError("empty group list")
    if len(set(counts)) != len(counts):
        raise UsageError(f"duplicate group counts in {raw!r}")
    return counts


def cmd_sweep(args) -> int:
    settings = _merged_settings(args)
    counts = _parse_group_list(str(settings["groups"]))
    out_dir = Path(settings["out"] or ".")
    prefix = settings["prefix"]
    out_dir.mkdir(parents=True, exist_ok=True)

    combined = [CSV_HEADER + ",groups\n"]
    for g in counts:
        config = _build_config(settings, g)
        if g == counts[0]:
            _warn_if_long_running(config)
        rows = aggregate(run_experiment(config))
        per_group = _csv_text(rows)
        (out_dir / f"{prefix}_g{g}.csv").write_text(per_group, encoding="utf-8",
                                                    newline="")
        combined.extend(_csv_text(rows, groups=g).splitlines(keepends=True)[1:])
    (out_dir / f"{prefix}_all.csv").write_text("".join(combined),
                                               encoding="utf-8", newline="")
    return 0


def _read_series(csv_path: str, metric: str) -> dict:
    column = metric + "_mean"
    try:
        text = Path(csv_path).read_text(encoding="utf-8")
    except OSError as exc:
        raise GPError(f"cannot read {csv_path}: {exc}") from exc
    reader = csv.DictReader(io.StringIO(text))
    rows = list(reader)
    if not rows:
        raise GPError(f"{csv_path}: no data rows")
    if column not in rows[0]:
        raise GPError(f"{csv_path}: missing column {column!r}")
    has_groups = "groups" in rows[0]
    series: dict[str, tuple[list[float], list[float]]] = {}
    keys = sorted({int(r["groups"]) for r in rows}) if has_groups else [None]
    for key in keys:
        sel = [r for r in rows if not has_groups or int(r["groups"]) == key]
        xs = [float(r["generation"]) for r in sel]
        ys = [float(r[column]) for r in sel]
        label = f"{key} groups" if has_groups else metric
        series[label] = (xs, ys)
    return series


def cmd_plot(args) -> int:
    metric = args.metric or "avg_size"
    if metric not in METRICS:
        raise UsageError(
            f"unknown metric {metric!r}; valid metrics: {', '.join(METRICS)}")
    series = _read_series(args.csv, metric)
    svg = line_chart_svg(series, x_label="generation", y_label=metric)
    out = args.out or str(Path(args.csv).with_suffix(".svg"))
    Path(out).write_text(svg, encoding="utf-8", newline="")
    return 0


def cmd_version(args) -> int:
    print(f"timegp {__version__}")
    return 0


def _add_common_flags(sub):
    sub.add_argument("--config", help="key=value config file")
    sub.add_argument("--bits", type=int, help="parity problem bit width")
    sub.add_argument("--pop", type=int, help="population size")
    sub.add_argument("--gens", type=int, help="number of generations")
    sub.add_argument("--groups", help="group count (run) or comma list (sweep)")
    sub.add_argument("--runs", type=int, help="replicate runs")
    sub.add_argument("--seed", type=int, help="master seed")
    sub.add_argument("--timer", choices=("cost", "wall"), help="timer back-end")
    sub.add_argument("--workers", type=int, help="worker threads")
    sub.add_argument("--tournament", type=int, help="tournament size")
    sub.add_argument("--xo-prob", dest="xo_prob", type=float,
                     help="crossover probability")
    sub.add_argument("--max-depth", dest="max_depth", type=int,
                     help="tree depth limit")
    sub.add_argument("--out", help="output path (run: CSV; sweep: directory)")
    sub.add_argument("--prefix", help="sweep output file prefix")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="timegp",
        description="Tree GP with evaluation-time-grouped breeding")
    subs = parser.add_subparsers(dest="command", required=True)

    p_run = subs.add_parser("run", help="run one experiment, emit CSV")
    _add_common_flags(p_run)
    p_run.set_defaults(func=cmd_run)

    p_sweep = subs.add_parser("sweep", help="sweep group counts, emit CSVs")
    _add_common_flags(p_sweep)
    p_sweep.set_defaults(func=cmd_sweep)

    p_plot = subs.add_parser("plot", help="plot a results CSV as SVG")
    p_plot.add_argument("csv", help="combined sweep CSV (or single-run CSV)")
    p_plot.add_argument("--metric", help="one of: " + ", ".join(METRICS))
    p_plot.add_argument("--out", help="output SVG path")
    p_plot.set_defaults(func=cmd_plot)

    p_version = subs.add_parser("version", help="print version")
    p_version.set_defaults(func=cmd_version)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (UsageError, ConfigurationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (GPError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry():  # console-script hook
    sys.exit(main())

if __name__ == "__main__":
    entry()
