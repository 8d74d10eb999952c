"""
Genetic Fuzzy Airfoil Toolkit
Brute-force, cascaded and clustered genetic fuzzy regressors for airfoil self-noise.

Main entry point: cluster, train, compare, predict and describe.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

from pydantic import ValidationError
from rich.console import Console
from rich.markup import escape
from rich.panel import Panel
from rich.progress import BarColumn, Progress, SpinnerColumn, TextColumn, TimeElapsedColumn
from rich.table import Table

from config import ExperimentConfig, ExperimentPreset, load_settings, resolve_config
from src.harness import cluster_report, compare, load_model, predict_file, run_experiment
from src.utils.errors import ConfigError, ToolkitError
from src.utils.logger import get_logger, setup_logger

console = Console()
logger = get_logger("gfs.cli")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INTERNAL = 3


class CliParser(argparse.ArgumentParser):
    """argparse with usage errors mapped to exit code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> CliParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None,
                        help="Override the split, clustering and GA seeds")
    common.add_argument("--out", type=Path, default=None, help="Output directory")
    common.add_argument("--log-frequency", action="store_true",
                        help="Scale log10(frequency) instead of frequency")
    common.add_argument("--threads", type=int, default=None,
                        help="Worker threads for fitness evaluation and elbow fits")

    parser = CliParser(
        prog="gfs",
        description="Genetic fuzzy systems on the airfoil self-noise dataset",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="presets: " + ", ".join(p.value for p in ExperimentPreset),
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=CliParser)

    p = sub.add_parser("cluster", parents=[common], help="Elbow analysis over a cluster-count range")
    p.add_argument("--config", default=ExperimentPreset.CLUSTERED_FCM_15.value,
                   help="TOML file or preset name")
    p.add_argument("--c-min", type=int, default=None)
    p.add_argument("--c-max", type=int, default=None)

    p = sub.add_parser("train", parents=[common], help="Train one experiment")
    p.add_argument("--config", required=True, help="TOML file or preset name")

    p = sub.add_parser("compare", parents=[common], help="Train several experiments and tabulate them")
    p.add_argument("--config", action="append", default=None,
                   help="TOML file or preset name (repeatable; default: every preset)")

    p = sub.add_parser("predict", parents=[common], help="Predict a CSV with a saved model")
    p.add_argument("model", type=Path, help="Saved model.json")
    p.add_argument("input", type=Path, help="Canonical CSV (frequency,angle,chord,velocity,thickness[,noise])")

    p = sub.add_parser("describe", help="Show the structure of a saved model")
    p.add_argument("model", type=Path, help="Saved model.json")
    return parser


def prepare_config(value: str, args, settings) -> ExperimentConfig:
    """Resolve ``--config`` and apply the command-line overrides."""
    config = resolve_config(value)
    if args.seed is not None:
        config = config.with_seed(args.seed)
    if args.log_frequency:
        config = config.model_copy(update={'data': config.data.model_copy(update={'log_frequency': True})})
    if args.out is not None:
        config = config.model_copy(update={
            'output': config.output.model_copy(update={'directory': str(args.out)}),
        })
    return config.resolved(data_path=settings.data_path, output_root=settings.output_dir)


def _progress() -> Progress:
    return Progress(
        SpinnerColumn(),
        TextColumn("[progress.description]{task.description}"),
        BarColumn(),
        TextColumn("{task.completed}/{task.total}"),
        TimeElapsedColumn(),
        console=console,
    )


def cmd_cluster(args, settings) -> int:
    config = prepare_config(args.config, args, settings)
    c_min = args.c_min if args.c_min is not None else config.clustering.c_min
    c_max = args.c_max if args.c_max is not None else config.clustering.c_max
    if c_min < 2 or c_max < c_min:
        raise ConfigError(f"--c-min/--c-max must satisfy 2 <= c_min <= c_max, got {c_min}..{c_max}")
    out_dir = Path(config.output.directory)
    with _progress() as progress:
        task = progress.add_task("[cyan]Fitting FCM over the cluster range...", total=None)
        report = cluster_report(config, out_dir, args.c_min, args.c_max, threads=args.threads)
        progress.update(task, completed=True)

    table = Table(title="Elbow curve", title_style="bold cyan")
    table.add_column("c", justify="right", style="cyan")
    table.add_column("J", justify="right")
    table.add_column("PC", justify="right", style="green")
    table.add_column("Xie-Beni", justify="right", style="yellow")
    for row in report.curve.validity_frame().itertuples(index=False):
        marker = " ◀" if row.c == report.knee else ""
        table.add_row(f"{row.c}{marker}", f"{row.J:.4f}", f"{row.partition_coefficient:.4f}", f"{row.xie_beni:.4f}")
    console.print(table)
    console.print(f"✓ Knee suggestion: c={report.knee}; configured clusters: c={report.chosen}")
    console.print(f"✓ Wrote {', '.join(str(p) for p in report.files.values())}")
    return EXIT_OK


def cmd_train(args, settings) -> int:
    config = prepare_config(args.config, args, settings)
    with _progress() as progress:
        task = progress.add_task(f"[cyan]Evolving {config.name}...", total=config.ga.generations)
        report = run_experiment(
            config,
            threads=args.threads,
            on_generation=lambda stats: progress.update(
                task, advance=1, description=f"[cyan]{config.name} best={stats.best:.5f}"
            ),
        )

    table = Table(title=f"{report.name} ({report.kind})", title_style="bold cyan", show_header=False)
    table.add_column("Metric", style="cyan")
    table.add_column("Value", justify="right")
    table.add_row("Parameters", str(report.parameter_count))
    table.add_row("RMSE train (dB)", f"{report.rmse_train_dB:.4f}")
    table.add_row("RMSE test (dB)", f"{report.rmse_test_dB:.4f}")
    table.add_row("MAE test (dB)", f"{report.mae_test_dB:.4f}")
    table.add_row("Test prediction std (dB)", f"{report.prediction_std_test_dB:.4f}")
    table.add_row("Uncovered train / test", f"{report.uncovered_train} / {report.uncovered_test}")
    table.add_row("Training time (s)", f"{report.wall_clock_seconds:.2f}")
    console.print(table)
    console.print(f"✓ Outputs in {config.output.directory}")
    return EXIT_OK


def cmd_compare(args, settings) -> int:
    names = args.config or [p.value for p in ExperimentPreset]
    configs = [prepare_config(name, args, settings) for name in names]
    # every run writes under one comparison directory
    out_dir = args.out if args.out is not None else Path(settings.output_dir) / "comparison"
    configs = [c.model_copy(update={'output': c.output.model_copy(update={'directory': None})}) for c in configs]

    with _progress() as progress:
        tasks = {c.name: progress.add_task(f"[cyan]{c.name}", total=c.ga.generations) for c in configs}
        table = compare(
            configs,
            out_dir=out_dir,
            threads=args.threads,
            on_generation=lambda name, stats: progress.advance(tasks[name]),
        )

    view = Table(title="Comparison", title_style="bold cyan")
    view.add_column("Name", style="cyan", no_wrap=True)
    view.add_column("Params", justify="right")
    view.add_column("Ratio", justify="right", style="magenta")
    view.add_column("RMSE train", justify="right")
    view.add_column("RMSE test", justify="right", style="bold green")
    view.add_column("Uncovered", justify="right", style="red")
    view.add_column("Time (s)", justify="right", style="blue")
    for row in table.itertuples(index=False):
        view.add_row(
            row.name,
            str(row.parameter_count),
            f"{row.parameter_ratio:.1f}x",
            f"{row.rmse_train_dB:.3f}",
            f"{row.rmse_test_dB:.3f}",
            f"{row.uncovered_train}/{row.uncovered_test}",
            f"{row.wall_clock_seconds:.2f}",
        )
    console.print(view)
    console.print(f"✓ Wrote {out_dir / 'comparison.csv'} and {out_dir / 'comparison.txt'}")
    return EXIT_OK


def cmd_predict(args, settings) -> int:
    out_dir = args.out if args.out is not None else Path(settings.output_dir)
    output = out_dir / f"{args.input.stem}_predictions.csv"
    frame = predict_file(args.model, args.input, output)
    uncovered = int((frame['covered'] == 0).sum())
    console.print(f"✓ Predicted {len(frame)} rows ({uncovered} uncovered) → {output}")
    return EXIT_OK


def cmd_describe(args, settings) -> int:
    model = load_model(args.model)
    info = model.describe()
    segments = info.pop('segments')

    table = Table(title=f"Model {info['name']}", title_style="bold cyan", show_header=False)
    table.add_column("Field", style="cyan")
    table.add_column("Value")
    for key, value in info.items():
        table.add_row(str(key), json.dumps(value) if isinstance(value, (list, dict)) else str(value))
    console.print(table)

    layout = Table(title="Genome layout", title_style="bold cyan")
    layout.add_column("Segment", style="cyan")
    layout.add_column("Offset", justify="right")
    layout.add_column("Length", justify="right")
    layout.add_column("Kind", style="yellow")
    for seg in segments:
        layout.add_row(seg['name'], str(seg['offset']), str(seg['length']), seg['kind'])
    console.print(layout)
    return EXIT_OK


COMMANDS = {
    'cluster': cmd_cluster,
    'train': cmd_train,
    'compare': cmd_compare,
    'predict': cmd_predict,
    'describe': cmd_describe,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, run the command and map failures to exit codes."""
    args = build_parser().parse_args(argv)
    try:
        settings = load_settings()
    except ValidationError as e:
        console.print(f"[bold red]Invalid settings:[/bold red] {escape(str(e))}")
        return EXIT_USAGE
    setup_logger(level=getattr(logging, settings.log_level.upper(), logging.INFO), log_dir=settings.log_dir)
    if getattr(args, 'threads', None) is None:
        args.threads = settings.threads

    try:
        if args.threads < 1:
            raise ConfigError(f"--threads must be >= 1, got {args.threads}")
        console.print(Panel.fit(
            "[bold cyan]Genetic Fuzzy Airfoil Toolkit[/bold cyan]\n"
            f"[dim]{args.command}[/dim]",
            border_style="cyan"
        ))
        return COMMANDS[args.command](args, settings)
    except KeyboardInterrupt:
        console.print("\n[yellow]Interrupted by user[/yellow]")
        return EXIT_INTERNAL
    except ToolkitError as e:
        logger.error(f"{type(e).__name__}: {e}")
        console.print(f"\n[bold red]Error:[/bold red] {escape(str(e))}")
        return e.exit_code
    except Exception as e:
        logger.exception(f"Unexpected failure: {e}")
        console.print(f"\n[bold red]Internal error:[/bold red] {escape(str(e))}")
        console.print(f"[dim]Check {settings.log_dir}/errors_*.log for details[/dim]")
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
