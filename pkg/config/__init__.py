"""Configuration package initialization."""

from .settings import load_settings, Settings
from .experiment import (
    DataSection,
    ModelSection,
    ClusteringSection,
    OutputSection,
    ExperimentConfig,
    load_config,
    save_config,
)
from .presets import ExperimentPreset, PRESETS, get_preset, resolve_config

__all__ = [
    'load_settings',
    'Settings',
    'DataSection',
    'ModelSection',
    'ClusteringSection',
    'OutputSection',
    'ExperimentConfig',
    'load_config',
    'save_config',
    'ExperimentPreset',
    'PRESETS',
    'get_preset',
    'resolve_config',
]
