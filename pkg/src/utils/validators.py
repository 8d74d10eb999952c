"""Data validation utilities."""

import math
from typing import Optional

import numpy as np


def is_finite_number(value: Optional[float]) -> bool:
    """Check if value is a real number (not None, NaN, or Inf)."""
    if value is None:
        return False
    return not (math.isnan(value) or math.isinf(value))


def in_range(value: float, low: float, high: float) -> bool:
    """Check if value lies inside the closed interval [low, high]."""
    return low <= value <= high


def require_finite(values: np.ndarray, what: str = "input") -> np.ndarray:
    """
    Return ``values`` as a float array, rejecting NaN and Inf.

    Args:
        values: Scalar or array-like
        what: Name used in the error message

    Returns:
        Float ndarray view of the input
    """
    arr = np.asarray(values, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{what} must be finite")
    return arr


def require_fraction(value: float, what: str = "fraction") -> float:
    """Check that a ratio lies strictly inside (0, 1)."""
    if not is_finite_number(value) or not 0.0 < value < 1.0:
        raise ValueError(f"{what} must be in (0, 1), got {value}")
    return float(value)
