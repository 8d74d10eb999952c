"""Common regressor contract for the four architectures."""

from abc import ABC, abstractmethod
from enum import Enum
from typing import Any, Dict, Tuple

import numpy as np

from src.genetic.layout import GenomeLayout
from src.utils.errors import GenomeError
from src.utils.validators import require_finite


class RegressorKind(str, Enum):
    """Available regressor variants."""
    BRUTE = 'brute'
    GFT = 'gft'
    CLUSTERED_GAUSS = 'clustered-gauss'
    CLUSTERED_FCM = 'clustered-fcm'


class Regressor(ABC):
    """
    Trainable fuzzy regressor: a genome layout plus a pure prediction function
    from (genes, scaled inputs) to scaled outputs.
    """

    kind: RegressorKind

    def __init__(self, n_inputs: int, fallback: float = 0.5):
        self.n_inputs = int(n_inputs)
        self.fallback = float(fallback)

    @property
    @abstractmethod
    def layout(self) -> GenomeLayout:
        ...

    @property
    def parameter_count(self) -> int:
        return self.layout.total_length

    @abstractmethod
    def _predict(self, genes: np.ndarray, X: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        ...

    @abstractmethod
    def structure(self) -> Dict[str, Any]:
        """Everything except the genes needed to rebuild this regressor."""

    def predict_batch(self, genes, X) -> Tuple[np.ndarray, np.ndarray]:
        """
        Scaled predictions for an n x d matrix.

        Returns:
            (outputs, covered) where uncovered rows carry the fallback value
        """
        genes = np.asarray(genes, dtype=float)
        if genes.shape != (self.layout.total_length,):
            raise GenomeError(f"expected {self.layout.total_length} genes, got {genes.size}")
        X = require_finite(X, "x")
        if X.ndim == 1:
            X = X.reshape(1, -1)
        if X.shape[1] != self.n_inputs:
            raise ValueError(f"expected {self.n_inputs} inputs, got {X.shape[1]}")
        return self._predict(genes, X)

    def predict(self, genes, x) -> float:
        """Scaled prediction for one input vector."""
        y, _ = self.predict_batch(genes, np.asarray(x, dtype=float).reshape(1, -1))
        return float(y[0])

    def describe(self) -> Dict[str, Any]:
        return {
            'kind': self.kind.value,
            'inputs': self.n_inputs,
            'parameters': self.parameter_count,
            'segments': self.layout.describe(),
        }

    def to_dict(self) -> Dict[str, Any]:
        return {'kind': self.kind.value, 'n_inputs': self.n_inputs, 'fallback': self.fallback, **self.structure()}
