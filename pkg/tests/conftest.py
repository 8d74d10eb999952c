"""Shared fixtures: synthetic airfoil files, blob data and small trained setups."""

import os
from pathlib import Path

import numpy as np
import pytest

from config.experiment import ExperimentConfig
from src.data import load_airfoil
from src.genetic import GaConfig

REAL_DATA = Path(os.environ.get('GFS_DATA_PATH', 'data/airfoil_self_noise.dat'))


def make_airfoil_rows(n: int = 120, seed: int = 0) -> np.ndarray:
    """Rows inside the documented ranges with a smooth, learnable noise level."""
    rng = np.random.default_rng(seed)
    frequency = np.round(10 ** rng.uniform(np.log10(200), np.log10(16000), n))
    angle = np.round(rng.uniform(0.0, 22.2, n), 1)
    chord = rng.choice([0.0254, 0.0508, 0.1016, 0.1524, 0.2286, 0.3048], n)
    velocity = rng.choice([31.7, 39.6, 55.5, 71.3], n)
    thickness = rng.uniform(0.0005, 0.05, n)
    log_f = (np.log10(frequency) - 2.3) / 1.9
    noise = 132.0 - 14.0 * (log_f - 0.4) ** 2 - 30.0 * chord + 0.08 * (velocity - 31.7) - 40.0 * thickness
    return np.column_stack((frequency, angle, chord, velocity, thickness, np.round(noise, 3)))


def write_airfoil_file(path: Path, rows: np.ndarray) -> Path:
    lines = ['\t'.join(f"{v:g}" for v in row) for row in rows]
    path.write_text('\n'.join(lines) + '\n', encoding='utf-8')
    return path


@pytest.fixture
def airfoil_rows():
    return make_airfoil_rows()


@pytest.fixture
def airfoil_file(tmp_path, airfoil_rows):
    return write_airfoil_file(tmp_path / 'airfoil_self_noise.dat', airfoil_rows)


@pytest.fixture
def airfoil_dataset(airfoil_file):
    return load_airfoil(airfoil_file)


@pytest.fixture
def real_airfoil_file():
    if not REAL_DATA.is_file():
        pytest.skip(f"UCI airfoil file not found at {REAL_DATA}")
    return REAL_DATA


@pytest.fixture
def three_blobs():
    """Three tight, well separated 2-D blobs of 40 points each."""
    rng = np.random.default_rng(7)
    means = np.array([[0.1, 0.1], [0.9, 0.2], [0.5, 0.9]])
    points = np.vstack([m + rng.normal(0.0, 0.02, (40, 2)) for m in means])
    return points, means


@pytest.fixture
def quick_config(airfoil_file, tmp_path):
    """Small, fast experiment over the synthetic file."""
    def factory(kind: str = 'clustered-fcm', **model) -> ExperimentConfig:
        return ExperimentConfig.model_validate({
            'name': f"quick-{kind}",
            'data': {'path': str(airfoil_file), 'train_fraction': 0.8, 'split_seed': 3},
            'model': {'kind': kind, 'mf_count': model.get('mf_count', 2), 'order': model.get('order', 1)},
            'clustering': {'n_clusters': model.get('n_clusters', 4), 'seed': 3},
            'ga': GaConfig(population_size=12, generations=6, seed=3).model_dump(),
            'output': {'directory': str(tmp_path / 'out' / kind)},
        })
    return factory
