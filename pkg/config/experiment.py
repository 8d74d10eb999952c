"""Experiment configuration: one TOML file per run, one section per stage."""

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from pathlib import Path
from typing import List, Literal, Optional, Union

import tomli_w
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from src.architectures.base import RegressorKind
from src.clustering.fcm import INPUTS_TARGET
from src.genetic.algorithm import GaConfig
from src.utils.errors import ConfigError

DEFAULT_CLUSTERS = 15


class DataSection(BaseModel):
    """Dataset location, split and scaling. ``path`` None means the settings default."""
    model_config = ConfigDict(extra='forbid')

    path: Optional[str] = None
    train_fraction: float = Field(default=0.8, gt=0, lt=1)
    split_seed: int = 42
    log_frequency: bool = False
    strict_ranges: bool = True


class ModelSection(BaseModel):
    model_config = ConfigDict(extra='forbid')

    kind: RegressorKind = RegressorKind.CLUSTERED_FCM
    mf_count: int = Field(default=5, ge=2)
    order: int = Field(default=1, ge=0, le=1)
    input_order: Optional[List[int]] = None


class ClusteringSection(BaseModel):
    """FCM settings for the clustered variants and for elbow analysis."""
    model_config = ConfigDict(extra='forbid')

    n_clusters: int = Field(default=DEFAULT_CLUSTERS, ge=1)
    fuzzifier: float = Field(default=2.0, gt=1)
    tol: float = Field(default=1e-6, gt=0)
    max_iter: int = Field(default=300, ge=1)
    seed: int = 42
    n_init: int = Field(default=1, ge=1)
    space: Literal['inputs', 'inputs+target'] = INPUTS_TARGET
    c_min: int = Field(default=2, ge=2)
    c_max: int = Field(default=25, ge=2)

    @model_validator(mode='after')
    def _range_ordered(self) -> "ClusteringSection":
        if self.c_max < self.c_min:
            raise ValueError(f"c_max ({self.c_max}) is below c_min ({self.c_min})")
        return self


class OutputSection(BaseModel):
    """Output directory (None means ``<settings.output_dir>/<name>``)."""
    model_config = ConfigDict(extra='forbid')

    directory: Optional[str] = None
    write_plots: bool = True


class ExperimentConfig(BaseModel):
    """Everything needed to reproduce one experiment."""
    model_config = ConfigDict(extra='forbid')

    name: str = 'experiment'
    data: DataSection = Field(default_factory=DataSection)
    model: ModelSection = Field(default_factory=ModelSection)
    clustering: ClusteringSection = Field(default_factory=ClusteringSection)
    ga: GaConfig = Field(default_factory=GaConfig)
    output: OutputSection = Field(default_factory=OutputSection)

    @property
    def is_clustered(self) -> bool:
        return self.model.kind in (RegressorKind.CLUSTERED_GAUSS, RegressorKind.CLUSTERED_FCM)

    def with_seed(self, seed: int) -> "ExperimentConfig":
        """Copy with the split, clustering and GA seeds all set to ``seed``."""
        return self.model_copy(update={
            'data': self.data.model_copy(update={'split_seed': seed}),
            'clustering': self.clustering.model_copy(update={'seed': seed}),
            'ga': self.ga.model_copy(update={'seed': seed}),
        })

    def resolved(
        self,
        data_path: Optional[str] = None,
        output_root: Optional[str] = None,
    ) -> "ExperimentConfig":
        """Copy with unset paths filled in from application settings."""
        data = self.data
        output = self.output
        if data.path is None and data_path is not None:
            data = data.model_copy(update={'path': data_path})
        if output.directory is None and output_root is not None:
            output = output.model_copy(update={'directory': str(Path(output_root) / self.name)})
        return self.model_copy(update={'data': data, 'output': output})

    def to_toml(self) -> str:
        return tomli_w.dumps(self.model_dump(mode='json', exclude_none=True))


def load_config(path: Union[str, Path]) -> ExperimentConfig:
    """
    Read an experiment TOML file.

    Raises:
        ConfigError: unreadable file, TOML syntax error or invalid values
    """
    path = Path(path)
    try:
        with path.open('rb') as f:
            raw = tomllib.load(f)
    except OSError as e:
        raise ConfigError(f"cannot read config {path}: {e}") from e
    except tomllib.TOMLDecodeError as e:
        raise ConfigError(f"invalid TOML in {path}: {e}") from e
    try:
        return ExperimentConfig.model_validate(raw)
    except ValidationError as e:
        raise ConfigError(f"invalid config {path}: {e}") from e


def save_config(config: ExperimentConfig, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(config.to_toml(), encoding='utf-8')
    return path
