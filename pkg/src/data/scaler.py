"""Min-max scaling of inputs and target into the unit box."""

from dataclasses import dataclass
from typing import Any, Dict, Tuple

import numpy as np

from src.data.dataset import Dataset
from src.data.models import Sample
from src.utils.errors import DataError


@dataclass(frozen=True)
class Scaler:
    """Per-feature (min, max) pairs over the five inputs and the target.

    With ``log_frequency`` the first input is scaled as ``log10(frequency)``.
    """
    feature_min: tuple
    feature_max: tuple
    target_min: float
    target_max: float
    log_frequency: bool = False

    @property
    def target_range(self) -> float:
        return self.target_max - self.target_min

    def _prepare(self, X: np.ndarray) -> np.ndarray:
        X = np.array(X, dtype=float)
        if self.log_frequency:
            X[..., 0] = np.log10(X[..., 0])
        return X

    def transform_features(self, X: np.ndarray, clamp: bool = False) -> np.ndarray:
        """
        Scale raw inputs (one row or a matrix) to [0, 1] per feature.

        Args:
            X: Raw input vector or n x 5 matrix
            clamp: Clip values outside the fitted range (used at predict time)
        """
        lo = np.asarray(self.feature_min)
        hi = np.asarray(self.feature_max)
        scaled = (self._prepare(X) - lo) / (hi - lo)
        if clamp:
            scaled = np.clip(scaled, 0.0, 1.0)
        return scaled

    def transform_target(self, y):
        return (np.asarray(y, dtype=float) - self.target_min) / self.target_range

    def invert_target(self, y_scaled):
        """Map scaled targets back to dB."""
        return np.asarray(y_scaled, dtype=float) * self.target_range + self.target_min

    def to_dict(self) -> Dict[str, Any]:
        return {
            'feature_min': list(self.feature_min),
            'feature_max': list(self.feature_max),
            'target_min': self.target_min,
            'target_max': self.target_max,
            'log_frequency': self.log_frequency,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Scaler":
        return cls(
            feature_min=tuple(float(v) for v in data['feature_min']),
            feature_max=tuple(float(v) for v in data['feature_max']),
            target_min=float(data['target_min']),
            target_max=float(data['target_max']),
            log_frequency=bool(data['log_frequency']),
        )


def fit_scaler(dataset: Dataset, log_frequency: bool = False) -> Scaler:
    """
    Fit min-max bounds on a dataset (normally the training split).

    Raises:
        DataError: if any input or the target is constant
    """
    X = dataset.features.copy()
    if log_frequency:
        X[:, 0] = np.log10(X[:, 0])
    lo = X.min(axis=0)
    hi = X.max(axis=0)

    constant = [name for name, a, b in zip(dataset.feature_names, lo, hi) if not b > a]
    if not dataset.target.max() > dataset.target.min():
        constant.append(dataset.target_name)
    if constant:
        raise DataError(f"cannot scale constant feature(s): {', '.join(constant)}")

    return Scaler(
        feature_min=tuple(float(v) for v in lo),
        feature_max=tuple(float(v) for v in hi),
        target_min=float(dataset.target.min()),
        target_max=float(dataset.target.max()),
        log_frequency=log_frequency,
    )


def apply(scaler: Scaler, sample: Sample) -> np.ndarray:
    """Scaled six-vector (five inputs then the target) for one sample."""
    features = scaler.transform_features(np.array(sample.features()))
    return np.append(features, scaler.transform_target(sample.noise))


def invert_target(scaler: Scaler, y_scaled):
    """Scaled target back to dB."""
    return scaler.invert_target(y_scaled)


def apply_matrix(scaler: Scaler, dataset: Dataset, clamp: bool = False) -> Tuple[np.ndarray, np.ndarray]:
    """Scaled (n x 5 inputs, n targets) for a whole dataset."""
    return scaler.transform_features(dataset.features, clamp=clamp), scaler.transform_target(dataset.target)
