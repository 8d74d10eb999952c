"""Experiment pipeline: load, split, scale, cluster, build, evolve, evaluate, write."""

import json
import time
from contextlib import contextmanager
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Dict, Iterator, List, Optional, Union

import numpy as np
import pandas as pd
from pydantic import BaseModel

from config.experiment import ExperimentConfig, save_config
from src.architectures import (
    Regressor,
    RegressorKind,
    build_brute,
    build_clustered_fcm,
    build_clustered_gauss,
    build_gft,
)
from src.clustering.fcm import INPUTS, ClusterModel, fcm_fit
from src.data import Dataset, apply_matrix, fit_scaler, load_airfoil, split
from src.genetic import GenerationStats, RegressionObjective, evolve
from src.harness.metrics import ErrorMetrics, RegressionMetrics
from src.harness.model_io import TrainedModel, save_model
from src.harness.plots import write_run_script
from src.utils.errors import ConfigError, StageError
from src.utils.logger import get_logger

logger = get_logger(__name__)

class ExperimentReport(BaseModel):
    """Outcome of one run; every error metric is in dB."""
    name: str
    kind: str
    parameter_count: int
    rmse_train_dB: float
    rmse_test_dB: float
    mae_train_dB: float
    mae_test_dB: float
    prediction_std_test_dB: float
    uncovered_train: int
    uncovered_test: int
    train_samples: int
    test_samples: int
    fallback: float
    best_fitness: float
    fitness_history: List[Dict[str, Union[int, float]]]
    wall_clock_seconds: float
    preparation_seconds: float
    config: Dict[str, Any]


@dataclass(frozen=True, eq=False)
class ExperimentRun:
    """Report plus the in-memory artifacts it was computed from."""
    report: ExperimentReport
    model: TrainedModel
    train: Dataset
    test: Dataset
    predictions_train: pd.DataFrame
    predictions_test: pd.DataFrame
    history: List[GenerationStats]


@contextmanager
def stage(name: str) -> Iterator[None]:
    """Tag any error raised inside with the pipeline stage."""
    try:
        yield
    except StageError:
        raise
    except Exception as e:
        raise StageError(name, e) from e


def build_regressor(
    config: ExperimentConfig,
    n_inputs: int,
    fallback: float,
    cluster: Optional[ClusterModel] = None,
) -> Regressor:
    """Regressor for the configured variant; clustered variants need a fitted ClusterModel."""
    model = config.model
    if model.kind is RegressorKind.BRUTE:
        return build_brute(n_inputs, model.mf_count, model.order, fallback=fallback)
    if model.kind is RegressorKind.GFT:
        return build_gft(n_inputs, model.mf_count, model.order, input_order=model.input_order, fallback=fallback)
    if cluster is None:
        raise ConfigError(f"{model.kind.value} needs a fitted cluster model")
    centers = cluster.input_projection(n_inputs)
    if model.kind is RegressorKind.CLUSTERED_GAUSS:
        return build_clustered_gauss(centers, fallback=fallback)
    return build_clustered_fcm(centers, fuzzifier=cluster.fuzzifier, fallback=fallback)


def cluster_points(config: ExperimentConfig, X: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Points FCM runs on: scaled inputs, optionally with the scaled target appended."""
    if config.clustering.space == INPUTS:
        return X
    return np.column_stack((X, y))


def _predictions_frame(dataset: Dataset, predicted_db: np.ndarray) -> pd.DataFrame:
    return pd.DataFrame({
        'index': dataset.indices,
        'actual_dB': dataset.target,
        'predicted_dB': predicted_db,
    })


def train(
    config: ExperimentConfig,
    threads: int = 1,
    on_generation: Optional[Callable[[GenerationStats], None]] = None,
) -> ExperimentRun:
    """
    Run the pipeline in memory (nothing is written).

    Args:
        config: Resolved experiment config (``data.path`` must be set)
        threads: Worker threads for fitness evaluation
        on_generation: Per-generation callback (progress display)

    Returns:
        ExperimentRun

    Raises:
        StageError: wrapping the first upstream failure with its stage name
    """
    if config.data.path is None:
        raise StageError('load', ConfigError("no dataset path configured"))

    started = time.perf_counter()
    with stage('load'):
        dataset = load_airfoil(config.data.path, strict_ranges=config.data.strict_ranges)
    with stage('split'):
        train_set, test_set = split(dataset, config.data.train_fraction, config.data.split_seed)
    with stage('scale'):
        scaler = fit_scaler(train_set, log_frequency=config.data.log_frequency)
        X_train, y_train = apply_matrix(scaler, train_set)
        X_test, _ = apply_matrix(scaler, test_set, clamp=True)
        fallback = float(np.mean(y_train))

    cluster = None
    if config.is_clustered:
        with stage('cluster'):
            c = config.clustering
            cluster = fcm_fit(
                cluster_points(config, X_train, y_train),
                c.n_clusters,
                m=c.fuzzifier,
                tol=c.tol,
                max_iter=c.max_iter,
                seed=c.seed,
                n_init=c.n_init,
                space=c.space,
            )
    preparation = time.perf_counter() - started

    with stage('build'):
        regressor = build_regressor(config, X_train.shape[1], fallback, cluster)
        objective = RegressionObjective(regressor, X_train, y_train)
    logger.info(f"Training {config.name}: {regressor.kind.value} with {regressor.parameter_count} parameters")

    with stage('evolve'):
        evolve_started = time.perf_counter()
        result = evolve(regressor.layout, objective, config.ga, threads=threads, on_generation=on_generation)
        wall_clock = time.perf_counter() - evolve_started

    with stage('evaluate'):
        genes = result.best.genes
        genes.setflags(write=False)
        model = TrainedModel(
            name=config.name,
            regressor=regressor,
            genes=genes,
            scaler=scaler,
            cluster=cluster.to_dict() if cluster is not None else None,
        )
        y_fit, covered_train = model.predict_scaled(X_train)
        y_out, covered_test = model.predict_scaled(X_test)
        pred_train = scaler.invert_target(y_fit)
        pred_test = scaler.invert_target(y_out)
        train_metrics: RegressionMetrics = ErrorMetrics.summarize(pred_train, train_set.target, covered_train)
        test_metrics: RegressionMetrics = ErrorMetrics.summarize(pred_test, test_set.target, covered_test)

        report = ExperimentReport(
            name=config.name,
            kind=regressor.kind.value,
            parameter_count=regressor.parameter_count,
            rmse_train_dB=train_metrics.rmse_db,
            rmse_test_dB=test_metrics.rmse_db,
            mae_train_dB=train_metrics.mae_db,
            mae_test_dB=test_metrics.mae_db,
            prediction_std_test_dB=test_metrics.prediction_std_db,
            uncovered_train=train_metrics.uncovered,
            uncovered_test=test_metrics.uncovered,
            train_samples=len(train_set),
            test_samples=len(test_set),
            fallback=fallback,
            best_fitness=float(result.best.fitness),
            fitness_history=[
                {'generation': s.generation, 'best': s.best, 'mean': s.mean, 'worst': s.worst}
                for s in result.history
            ],
            wall_clock_seconds=wall_clock,
            preparation_seconds=preparation,
            config=config.model_dump(mode='json'),
        )

    logger.info(
        f"✓ {config.name}: RMSE train {report.rmse_train_dB:.3f} dB, test {report.rmse_test_dB:.3f} dB, "
        f"{report.uncovered_test} uncovered test samples"
    )
    return ExperimentRun(
        report=report,
        model=model,
        train=train_set,
        test=test_set,
        predictions_train=_predictions_frame(train_set, pred_train),
        predictions_test=_predictions_frame(test_set, pred_test),
        history=list(result.history),
    )


def write_outputs(run: ExperimentRun, config: ExperimentConfig, out_dir: Path) -> Dict[str, Path]:
    """Write every per-run file into ``out_dir`` and return their paths by name."""
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = {
        'report': out_dir / 'report.json',
        'fitness': out_dir / 'fitness.csv',
        'predictions_train': out_dir / 'predictions_train.csv',
        'predictions_test': out_dir / 'predictions_test.csv',
        'model': out_dir / 'model.json',
        'config': out_dir / 'config.toml',
    }
    paths['report'].write_text(json.dumps(run.report.model_dump(), indent=2), encoding='utf-8')
    pd.DataFrame(run.report.fitness_history, columns=['generation', 'best', 'mean', 'worst']).to_csv(
        paths['fitness'], index=False, lineterminator='\n'
    )
    run.predictions_train.to_csv(paths['predictions_train'], index=False, lineterminator='\n')
    run.predictions_test.to_csv(paths['predictions_test'], index=False, lineterminator='\n')
    save_model(run.model, paths['model'])
    save_config(config, paths['config'])
    if config.output.write_plots:
        paths['plot'] = write_run_script(out_dir, config.name)
    return paths


def run_experiment(
    config: ExperimentConfig,
    threads: int = 1,
    on_generation: Optional[Callable[[GenerationStats], None]] = None,
) -> ExperimentReport:
    """
    Train one configuration and write its report, fitness curve, prediction
    CSVs, model and config echo to ``config.output.directory``.
    """
    run = train(config, threads=threads, on_generation=on_generation)
    if config.output.directory is not None:
        with stage('write'):
            paths = write_outputs(run, config, Path(config.output.directory))
        logger.info(f"✓ Wrote {len(paths)} files to {config.output.directory}")
    return run.report
