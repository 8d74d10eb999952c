"""Experiment presets, one per regressor family and size."""

from enum import Enum
from pathlib import Path
from typing import Dict

from config.experiment import (
    ClusteringSection,
    ExperimentConfig,
    ModelSection,
    load_config,
)
from src.architectures.base import RegressorKind
from src.genetic.algorithm import GaConfig
from src.utils.errors import ConfigError


class ExperimentPreset(Enum):
    """Shipped experiment presets."""
    BRUTE_5MF_O1 = "brute-5mf-o1"
    GFT_3MF_O0 = "gft-3mf-o0"
    GFT_3MF_O1 = "gft-3mf-o1"
    GFT_5MF_O0 = "gft-5mf-o0"
    GFT_5MF_O1 = "gft-5mf-o1"
    CLUSTERED_GAUSS_15 = "clustered-gauss-15"
    CLUSTERED_FCM_15 = "clustered-fcm-15"


def _preset(preset: ExperimentPreset, kind: RegressorKind, mf_count: int = 5, order: int = 1) -> ExperimentConfig:
    return ExperimentConfig(
        name=preset.value,
        model=ModelSection(kind=kind, mf_count=mf_count, order=order),
        clustering=ClusteringSection(n_clusters=15),
        ga=GaConfig(population_size=50, generations=100),
    )


# All presets share the split, clustering and GA seeds so they can be compared
PRESETS: Dict[ExperimentPreset, ExperimentConfig] = {
    ExperimentPreset.BRUTE_5MF_O1: _preset(ExperimentPreset.BRUTE_5MF_O1, RegressorKind.BRUTE, 5, 1),
    ExperimentPreset.GFT_3MF_O0: _preset(ExperimentPreset.GFT_3MF_O0, RegressorKind.GFT, 3, 0),
    ExperimentPreset.GFT_3MF_O1: _preset(ExperimentPreset.GFT_3MF_O1, RegressorKind.GFT, 3, 1),
    ExperimentPreset.GFT_5MF_O0: _preset(ExperimentPreset.GFT_5MF_O0, RegressorKind.GFT, 5, 0),
    ExperimentPreset.GFT_5MF_O1: _preset(ExperimentPreset.GFT_5MF_O1, RegressorKind.GFT, 5, 1),
    ExperimentPreset.CLUSTERED_GAUSS_15: _preset(ExperimentPreset.CLUSTERED_GAUSS_15, RegressorKind.CLUSTERED_GAUSS),
    ExperimentPreset.CLUSTERED_FCM_15: _preset(ExperimentPreset.CLUSTERED_FCM_15, RegressorKind.CLUSTERED_FCM),
}


def get_preset(name: str) -> ExperimentConfig:
    """Independent copy of a named preset."""
    try:
        preset = ExperimentPreset(name)
    except ValueError as e:
        known = ', '.join(p.value for p in ExperimentPreset)
        raise ConfigError(f"unknown preset {name!r} (known: {known})") from e
    return PRESETS[preset].model_copy(deep=True)


def resolve_config(value: str) -> ExperimentConfig:
    """A ``--config`` argument: a TOML file path or a preset name."""
    if Path(value).suffix == '.toml' or Path(value).is_file():
        return load_config(value)
    return get_preset(value)
