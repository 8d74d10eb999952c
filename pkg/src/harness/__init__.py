"""Experiment harness package initialization."""

from .metrics import ErrorMetrics, RegressionMetrics
from .model_io import FORMAT_VERSION, SavedModel, TrainedModel, save_model, load_model, predict_file
from .experiment import (
    ExperimentReport,
    ExperimentRun,
    build_regressor,
    train,
    write_outputs,
    run_experiment,
)
from .comparison import compare, comparison_table, check_comparable
from .cluster_report import ClusterReport, cluster_report

__all__ = [
    'ErrorMetrics',
    'RegressionMetrics',
    'FORMAT_VERSION',
    'SavedModel',
    'TrainedModel',
    'save_model',
    'load_model',
    'predict_file',
    'ExperimentReport',
    'ExperimentRun',
    'build_regressor',
    'train',
    'write_outputs',
    'run_experiment',
    'compare',
    'comparison_table',
    'check_comparable',
    'ClusterReport',
    'cluster_report',
]
