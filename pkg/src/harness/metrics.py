"""Regression metrics in the original dB units."""

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class RegressionMetrics:
    rmse_db: float
    mae_db: float
    prediction_std_db: float
    uncovered: int
    samples: int


class ErrorMetrics:
    """Error metrics for predicted vs. measured noise levels."""

    @staticmethod
    def rmse(predicted, actual) -> float:
        predicted = np.asarray(predicted, dtype=float)
        actual = np.asarray(actual, dtype=float)
        return float(np.sqrt(np.mean((predicted - actual) ** 2)))

    @staticmethod
    def mae(predicted, actual) -> float:
        predicted = np.asarray(predicted, dtype=float)
        actual = np.asarray(actual, dtype=float)
        return float(np.mean(np.abs(predicted - actual)))

    @staticmethod
    def summarize(predicted_db, actual_db, covered) -> RegressionMetrics:
        """
        Metrics for one split.

        Args:
            predicted_db: Predictions already mapped back to dB
            actual_db: Measured noise in dB
            covered: Per-sample coverage flags from the regressor

        Returns:
            RegressionMetrics; ``prediction_std_db`` exposes flat, trend-line models
        """
        covered = np.asarray(covered, dtype=bool)
        return RegressionMetrics(
            rmse_db=ErrorMetrics.rmse(predicted_db, actual_db),
            mae_db=ErrorMetrics.mae(predicted_db, actual_db),
            prediction_std_db=float(np.std(np.asarray(predicted_db, dtype=float))),
            uncovered=int(np.count_nonzero(~covered)),
            samples=int(covered.size),
        )
