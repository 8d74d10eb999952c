"""Elbow analysis of the training split, written as CSV plus a short note."""

from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Optional

from config.experiment import ExperimentConfig
from src.clustering import ElbowCurve, elbow_curve
from src.data import apply_matrix, fit_scaler, load_airfoil, split
from src.harness.experiment import cluster_points, stage
from src.harness.plots import write_elbow_script
from src.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class ClusterReport:
    curve: ElbowCurve
    knee: int
    chosen: int
    files: Dict[str, Path]


def cluster_report(
    config: ExperimentConfig,
    out_dir: Optional[Path] = None,
    c_min: Optional[int] = None,
    c_max: Optional[int] = None,
    threads: int = 1,
) -> ClusterReport:
    """
    Elbow curve over ``c_min..c_max`` on the scaled training split.

    The knee is only a suggestion; the cluster count actually used is
    ``config.clustering.n_clusters``.
    """
    c = config.clustering
    c_min = c.c_min if c_min is None else c_min
    c_max = c.c_max if c_max is None else c_max

    with stage('load'):
        dataset = load_airfoil(config.data.path, strict_ranges=config.data.strict_ranges)
    with stage('split'):
        train_set, _ = split(dataset, config.data.train_fraction, config.data.split_seed)
    with stage('scale'):
        scaler = fit_scaler(train_set, log_frequency=config.data.log_frequency)
        X, y = apply_matrix(scaler, train_set)
    with stage('cluster'):
        curve = elbow_curve(
            cluster_points(config, X, y),
            c_min,
            c_max,
            m=c.fuzzifier,
            tol=c.tol,
            max_iter=c.max_iter,
            seed=c.seed,
            n_init=c.n_init,
            threads=threads,
        )
    knee = curve.knee()

    files: Dict[str, Path] = {}
    if out_dir is not None:
        with stage('write'):
            out_dir = Path(out_dir)
            out_dir.mkdir(parents=True, exist_ok=True)
            files['elbow'] = out_dir / 'elbow.csv'
            curve.to_frame().to_csv(files['elbow'], index=False, lineterminator='\n')
            files['validity'] = out_dir / 'cluster_validity.csv'
            curve.validity_frame().to_csv(files['validity'], index=False, lineterminator='\n')
            files['note'] = out_dir / 'cluster_choice.txt'
            files['note'].write_text(
                f"space = {c.space}\nrange = {c_min}..{c_max}\n"
                f"knee_suggestion = {knee}\nchosen_clusters = {c.n_clusters}\n",
                encoding='utf-8',
            )
            if config.output.write_plots:
                files['plot'] = write_elbow_script(out_dir, knee)

    logger.info(f"✓ Elbow analysis: knee at c={knee}, using c={c.n_clusters}")
    return ClusterReport(curve=curve, knee=knee, chosen=c.n_clusters, files=files)
