"""Data package initialization."""

from .models import Sample, LoadReport, FEATURE_NAMES, TARGET_NAME, COLUMN_NAMES
from .dataset import Dataset, split
from .loader import load_airfoil, export_csv, read_csv
from .scaler import Scaler, fit_scaler, apply, apply_matrix, invert_target

__all__ = [
    'Sample',
    'LoadReport',
    'FEATURE_NAMES',
    'TARGET_NAME',
    'COLUMN_NAMES',
    'Dataset',
    'split',
    'load_airfoil',
    'export_csv',
    'read_csv',
    'Scaler',
    'fit_scaler',
    'apply',
    'apply_matrix',
    'invert_target',
]
