"""Utilities package initialization."""

from .logger import setup_logger, get_logger
from .errors import (
    ToolkitError,
    ConfigError,
    DataError,
    ClusteringError,
    GenomeError,
    ModelFormatError,
    StageError,
)
from .validators import is_finite_number, in_range, require_finite, require_fraction

__all__ = [
    'setup_logger',
    'get_logger',
    'ToolkitError',
    'ConfigError',
    'DataError',
    'ClusteringError',
    'GenomeError',
    'ModelFormatError',
    'StageError',
    'is_finite_number',
    'in_range',
    'require_finite',
    'require_fraction',
]
