"""In-memory dataset and train/test splitting."""

import math
from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np
import pandas as pd

from src.data.models import FEATURE_NAMES, TARGET_NAME, LoadReport
from src.utils.errors import DataError
from src.utils.logger import get_logger
from src.utils.validators import require_fraction

logger = get_logger(__name__)


def _frozen(values: np.ndarray) -> np.ndarray:
    arr = np.array(values, dtype=float)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class Dataset:
    """Immutable table of airfoil samples: an n x 5 input matrix and n targets."""
    features: np.ndarray
    target: np.ndarray
    indices: Optional[np.ndarray] = None
    feature_names: Tuple[str, ...] = FEATURE_NAMES
    target_name: str = TARGET_NAME
    report: Optional[LoadReport] = field(default=None, compare=False)

    def __post_init__(self):
        features = _frozen(self.features)
        target = _frozen(self.target)
        if features.ndim != 2 or features.shape[0] == 0:
            raise DataError("dataset must be a non-empty 2-D table")
        if features.shape[1] != len(self.feature_names):
            raise DataError(
                f"expected {len(self.feature_names)} feature columns, got {features.shape[1]}"
            )
        if target.shape != (features.shape[0],):
            raise DataError("target length does not match the number of rows")

        indices = np.arange(features.shape[0]) if self.indices is None else np.array(self.indices, dtype=int)
        indices.setflags(write=False)

        object.__setattr__(self, 'features', features)
        object.__setattr__(self, 'target', target)
        object.__setattr__(self, 'indices', indices)

    def __len__(self) -> int:
        return self.features.shape[0]

    @property
    def n_inputs(self) -> int:
        return self.features.shape[1]

    def subset(self, positions: np.ndarray) -> "Dataset":
        """Rows at the given positions, keeping their original indices."""
        positions = np.asarray(positions, dtype=int)
        return Dataset(
            features=self.features[positions],
            target=self.target[positions],
            indices=self.indices[positions],
            feature_names=self.feature_names,
            target_name=self.target_name,
        )

    def to_frame(self) -> pd.DataFrame:
        """Canonical column layout (five inputs then the target)."""
        frame = pd.DataFrame(self.features, columns=list(self.feature_names))
        frame[self.target_name] = self.target
        return frame


def split(dataset: Dataset, train_fraction: float, seed: int) -> Tuple[Dataset, Dataset]:
    """
    Shuffle deterministically and cut into train and test partitions.

    Args:
        dataset: Dataset to split
        train_fraction: Share of rows used for training, in (0, 1)
        seed: Shuffle seed

    Returns:
        (train, test) with ``len(train) == floor(n * train_fraction)``
    """
    try:
        train_fraction = require_fraction(train_fraction, "train_fraction")
    except ValueError as e:
        raise DataError(str(e)) from e

    n = len(dataset)
    n_train = math.floor(n * train_fraction)
    if n_train == 0 or n_train == n:
        raise DataError(f"train_fraction {train_fraction} leaves an empty partition for {n} rows")

    order = np.random.default_rng(seed).permutation(n)
    train = dataset.subset(order[:n_train])
    test = dataset.subset(order[n_train:])

    logger.debug(f"Split {n} rows into {len(train)} train / {len(test)} test (seed={seed})")
    return train, test
