"""Regression fitness for trainable fuzzy regressors."""

from typing import Protocol, Tuple

import numpy as np


class SupportsPredict(Protocol):
    def predict_batch(self, genes: np.ndarray, X: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        ...


def rmse(predicted: np.ndarray, actual: np.ndarray) -> float:
    return float(np.sqrt(np.mean((np.asarray(predicted) - np.asarray(actual)) ** 2)))


def fitness(genes: np.ndarray, regressor: SupportsPredict, X: np.ndarray, y: np.ndarray) -> float:
    """Negative RMSE in scaled target units (higher is better, 0 is a perfect fit)."""
    predicted, _ = regressor.predict_batch(genes, X)
    return -rmse(predicted, y)


class RegressionObjective:
    """Binds a regressor to a scaled training set; callable as a GA objective."""

    def __init__(self, regressor: SupportsPredict, X: np.ndarray, y: np.ndarray):
        self.regressor = regressor
        self.X = np.asarray(X, dtype=float)
        self.y = np.asarray(y, dtype=float)

    def __call__(self, genes: np.ndarray) -> float:
        return fitness(genes, self.regressor, self.X, self.y)

    def uncovered(self, genes: np.ndarray) -> int:
        """Training rows where no rule fired (fallback used)."""
        _, covered = self.regressor.predict_batch(genes, self.X)
        return int(np.count_nonzero(~covered))
