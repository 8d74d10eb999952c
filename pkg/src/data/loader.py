"""Airfoil file loading and canonical CSV import/export."""

from pathlib import Path
from typing import Optional, Tuple, Union

import numpy as np
import pandas as pd

from src.data.dataset import Dataset
from src.data.models import COLUMN_NAMES, FEATURE_NAMES, TARGET_NAME, LoadReport
from src.data.validator import DataValidator
from src.utils.errors import DataError
from src.utils.logger import get_logger

logger = get_logger(__name__)

PathLike = Union[str, Path]


def load_airfoil(path: PathLike, strict_ranges: bool = True) -> Dataset:
    """
    Load the UCI ``airfoil_self_noise.dat`` file.

    Args:
        path: File with six whitespace/tab separated numeric columns, no header
        strict_ranges: Raise on values outside the documented ranges instead of warning

    Returns:
        Dataset in file order, with a ``LoadReport`` attached
    """
    path = Path(path)
    try:
        text = path.read_text(encoding='utf-8')
    except OSError as e:
        raise DataError(f"cannot read {path}: {e}") from e

    validator = DataValidator(strict_ranges=strict_ranges)
    rows = []
    findings = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        values = validator.parse_row(line, line_no)
        validator.check_physical(values, line_no)
        findings.extend(validator.check_ranges(values, line_no))
        rows.append(values)

    if not rows:
        raise DataError(f"{path} contains no data rows")

    table = np.array(rows, dtype=float)
    report = LoadReport(
        path=str(path),
        rows=len(rows),
        observed_ranges={
            name: (float(table[:, i].min()), float(table[:, i].max()))
            for i, name in enumerate(COLUMN_NAMES)
        },
        findings=findings,
    )

    logger.info(f"✓ Loaded {len(rows)} samples from {path}")
    if findings:
        logger.warning(f"{len(findings)} values outside documented ranges")

    return Dataset(features=table[:, :5], target=table[:, 5], report=report)


def export_csv(dataset: Dataset, path: PathLike) -> Path:
    """Write the canonical CSV (``frequency,angle,chord,velocity,thickness,noise``)."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    dataset.to_frame().to_csv(path, index=False, lineterminator='\n')
    logger.info(f"✓ Exported {len(dataset)} rows to {path}")
    return path


def read_csv(path: PathLike) -> Tuple[np.ndarray, Optional[np.ndarray]]:
    """
    Read a canonical CSV.

    Returns:
        (features n x 5, target or None when the noise column is absent)
    """
    try:
        frame = pd.read_csv(path)
    except (OSError, pd.errors.ParserError, pd.errors.EmptyDataError) as e:
        raise DataError(f"cannot read {path}: {e}") from e

    missing = [name for name in FEATURE_NAMES if name not in frame.columns]
    if missing:
        raise DataError(f"{path} is missing columns: {', '.join(missing)}")
    if frame.empty:
        raise DataError(f"{path} contains no data rows")

    try:
        features = frame[list(FEATURE_NAMES)].to_numpy(dtype=float)
        target = frame[TARGET_NAME].to_numpy(dtype=float) if TARGET_NAME in frame.columns else None
    except ValueError as e:
        raise DataError(f"{path} has non-numeric values: {e}") from e

    if not np.all(np.isfinite(features)):
        raise DataError(f"{path} has non-finite input values")
    return features, target
