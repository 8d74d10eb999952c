"""Saved-model format: regressor structure, trained genes and the fitted scaler."""

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

import numpy as np
import pandas as pd
from pydantic import BaseModel, ValidationError

from src.architectures import Regressor, regressor_from_dict
from src.data.loader import read_csv
from src.data.scaler import Scaler
from src.utils.errors import ModelFormatError
from src.utils.logger import get_logger

logger = get_logger(__name__)

FORMAT_VERSION = 1

PathLike = Union[str, Path]


class SavedModel(BaseModel):
    """On-disk JSON schema."""
    format_version: int
    name: str
    regressor: Dict[str, Any]
    genes: List[float]
    scaler: Dict[str, Any]
    cluster: Optional[Dict[str, Any]] = None


@dataclass(frozen=True, eq=False)
class TrainedModel:
    """A regressor with its trained genes and the scaler fitted on its training split."""
    name: str
    regressor: Regressor
    genes: np.ndarray
    scaler: Scaler
    cluster: Optional[Dict[str, Any]] = None

    def predict_scaled(self, X_scaled) -> Tuple[np.ndarray, np.ndarray]:
        return self.regressor.predict_batch(self.genes, X_scaled)

    def predict_db(self, X_raw) -> Tuple[np.ndarray, np.ndarray]:
        """
        Predict from raw (unscaled) inputs.

        Inputs are clamped to the training box after scaling.

        Returns:
            (predictions in dB, covered flags)
        """
        X = self.scaler.transform_features(np.atleast_2d(np.asarray(X_raw, dtype=float)), clamp=True)
        y, covered = self.predict_scaled(X)
        return self.scaler.invert_target(y), covered

    def describe(self) -> Dict[str, Any]:
        info = {'name': self.name, **self.regressor.describe()}
        info['log_frequency'] = self.scaler.log_frequency
        if self.cluster is not None:
            info['cluster_space'] = self.cluster.get('space')
        return info


def save_model(model: TrainedModel, path: PathLike) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    saved = SavedModel(
        format_version=FORMAT_VERSION,
        name=model.name,
        regressor=model.regressor.to_dict(),
        genes=[float(g) for g in model.genes],
        scaler=model.scaler.to_dict(),
        cluster=model.cluster,
    )
    path.write_text(saved.model_dump_json(indent=2, exclude_none=True), encoding='utf-8')
    logger.info(f"✓ Saved model {model.name} to {path}")
    return path


def load_model(path: PathLike) -> TrainedModel:
    """
    Read a saved model.

    Raises:
        ModelFormatError: unreadable, truncated or malformed file, or another format version
    """
    path = Path(path)
    try:
        raw = json.loads(path.read_text(encoding='utf-8'))
    except OSError as e:
        raise ModelFormatError(f"cannot read model {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise ModelFormatError(f"model file {path} is not valid JSON: {e}") from e

    if not isinstance(raw, dict):
        raise ModelFormatError(f"model file {path} does not hold an object")
    version = raw.get('format_version')
    if version != FORMAT_VERSION:
        raise ModelFormatError(f"model format version {version!r} is not supported (expected {FORMAT_VERSION})")

    try:
        saved = SavedModel.model_validate(raw)
        regressor = regressor_from_dict(saved.regressor)
        scaler = Scaler.from_dict(saved.scaler)
    except (ValidationError, KeyError, TypeError, ValueError) as e:
        raise ModelFormatError(f"malformed model {path}: {e}") from e

    genes = np.asarray(saved.genes, dtype=float)
    if genes.shape != (regressor.parameter_count,):
        raise ModelFormatError(
            f"model {path} has {genes.size} genes, its {regressor.kind.value} layout needs {regressor.parameter_count}"
        )
    if not np.isfinite(genes).all():
        raise ModelFormatError(f"model {path} contains non-finite genes")
    genes.setflags(write=False)
    return TrainedModel(name=saved.name, regressor=regressor, genes=genes, scaler=scaler, cluster=saved.cluster)


def predict_file(model_path: PathLike, input_csv: PathLike, output_csv: PathLike) -> pd.DataFrame:
    """
    Predict every row of a canonical CSV and write ``index,predicted_dB``
    (plus ``actual_dB`` when the input has a noise column).
    """
    model = load_model(model_path)
    features, target = read_csv(input_csv)
    predicted, covered = model.predict_db(features)

    frame = pd.DataFrame({'index': np.arange(len(predicted))})
    if target is not None:
        frame['actual_dB'] = target
    frame['predicted_dB'] = predicted
    frame['covered'] = covered.astype(int)

    output_csv = Path(output_csv)
    output_csv.parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(output_csv, index=False, lineterminator='\n')
    logger.info(f"✓ Wrote {len(frame)} predictions to {output_csv}")
    return frame
