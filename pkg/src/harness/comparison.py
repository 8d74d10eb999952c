"""Side-by-side comparison of several experiments on the same split."""

from functools import partial
from pathlib import Path
from typing import Callable, List, Optional, Sequence

import pandas as pd

from config.experiment import ExperimentConfig
from src.genetic import GenerationStats
from src.harness.experiment import ExperimentReport, run_experiment
from src.utils.errors import ConfigError
from src.utils.logger import get_logger

logger = get_logger(__name__)

COLUMNS = [
    'name',
    'kind',
    'parameter_count',
    'parameter_ratio',
    'rmse_train_dB',
    'rmse_test_dB',
    'mae_test_dB',
    'prediction_std_test_dB',
    'uncovered_train',
    'uncovered_test',
    'wall_clock_seconds',
]


def check_comparable(configs: Sequence[ExperimentConfig]) -> None:
    """
    Raises:
        ConfigError: fewer than two configs, or differing dataset / split settings
    """
    if len(configs) < 2:
        raise ConfigError(f"a comparison needs at least 2 configs, got {len(configs)}")
    reference = configs[0].data
    for config in configs[1:]:
        data = config.data
        if (data.path, data.train_fraction, data.split_seed) != (
            reference.path, reference.train_fraction, reference.split_seed
        ):
            raise ConfigError(
                f"{config.name} uses a different dataset or split than {configs[0].name}"
            )


def comparison_table(reports: Sequence[ExperimentReport]) -> pd.DataFrame:
    """One row per report; ``parameter_ratio`` is relative to the smallest model."""
    frame = pd.DataFrame([
        {column: getattr(report, column) for column in COLUMNS if column != 'parameter_ratio'}
        for report in reports
    ])
    frame['parameter_ratio'] = frame['parameter_count'] / frame['parameter_count'].min()
    return frame[COLUMNS]


def compare(
    configs: Sequence[ExperimentConfig],
    out_dir: Optional[Path] = None,
    threads: int = 1,
    on_generation: Optional[Callable[[str, GenerationStats], None]] = None,
) -> pd.DataFrame:
    """
    Run every config in turn and tabulate the results.

    Experiments run sequentially so their wall-clock times are not contended.
    With ``out_dir`` each run writes into its own subdirectory and the table
    is written as ``comparison.csv`` and ``comparison.txt``.
    """
    check_comparable(configs)
    reports: List[ExperimentReport] = []
    for position, config in enumerate(configs, start=1):
        if out_dir is not None:
            run_dir = Path(out_dir) / f"{position:02d}-{config.name}"
            config = config.model_copy(update={
                'output': config.output.model_copy(update={'directory': str(run_dir)}),
            })
        callback = partial(on_generation, config.name) if on_generation is not None else None
        reports.append(run_experiment(config, threads=threads, on_generation=callback))

    table = comparison_table(reports)
    if out_dir is not None:
        write_comparison(table, Path(out_dir))
    logger.info(f"✓ Compared {len(reports)} experiments")
    return table


def write_comparison(table: pd.DataFrame, out_dir: Path) -> None:
    out_dir.mkdir(parents=True, exist_ok=True)
    table.to_csv(out_dir / 'comparison.csv', index=False, lineterminator='\n', float_format='%.6f')
    (out_dir / 'comparison.txt').write_text(
        table.to_string(index=False, float_format=lambda v: f"{v:.4f}") + '\n',
        encoding='utf-8',
    )
