"""Tests for settings, experiment configs and presets."""

import pytest

from config import (
    PRESETS,
    ExperimentConfig,
    ExperimentPreset,
    Settings,
    get_preset,
    load_config,
    resolve_config,
    save_config,
)
from src.architectures import RegressorKind
from src.utils.errors import ConfigError


def test_settings_read_prefixed_environment(monkeypatch):
    monkeypatch.setenv('GFS_DATA_PATH', '/tmp/airfoil.dat')
    monkeypatch.setenv('GFS_THREADS', '4')

    settings = Settings()

    assert settings.data_path == '/tmp/airfoil.dat'
    assert settings.threads == 4


def test_default_config_uses_fifteen_clusters():
    config = ExperimentConfig()

    assert config.clustering.n_clusters == 15
    assert config.clustering.space == 'inputs+target'
    assert config.ga.population_size == 50 and config.ga.generations == 100


def test_toml_round_trip(tmp_path):
    config = ExperimentConfig.model_validate({
        'name': 'probe',
        'data': {'path': 'x.dat', 'train_fraction': 0.75, 'log_frequency': True},
        'model': {'kind': 'gft', 'mf_count': 3, 'order': 0, 'input_order': [4, 3, 2, 1, 0]},
        'clustering': {'n_clusters': 9, 'tol': 1e-7, 'space': 'inputs'},
        'ga': {'population_size': 20, 'mutation_rate': 0.05, 'seed': 7},
    })

    path = save_config(config, tmp_path / 'probe.toml')

    assert load_config(path) == config
    assert '[ga]' in path.read_text(encoding='utf-8')


def test_invalid_config_values(tmp_path):
    path = tmp_path / 'bad.toml'
    path.write_text('[model]\nkind = "forest"\n', encoding='utf-8')
    with pytest.raises(ConfigError, match='invalid config'):
        load_config(path)

    path.write_text('[data\n', encoding='utf-8')
    with pytest.raises(ConfigError, match='invalid TOML'):
        load_config(path)

    with pytest.raises(ConfigError, match='cannot read'):
        load_config(tmp_path / 'missing.toml')


def test_unknown_keys_are_rejected():
    with pytest.raises(ValueError):
        ExperimentConfig.model_validate({'data': {'fraction': 0.5}})


def test_cluster_range_must_be_ordered():
    with pytest.raises(ValueError):
        ExperimentConfig.model_validate({'clustering': {'c_min': 10, 'c_max': 5}})


def test_with_seed_sets_every_seed():
    config = ExperimentConfig().with_seed(123)

    assert (config.data.split_seed, config.clustering.seed, config.ga.seed) == (123, 123, 123)


def test_resolved_fills_only_missing_paths():
    config = ExperimentConfig(name='run').resolved(data_path='d.dat', output_root='outputs')

    assert config.data.path == 'd.dat'
    assert config.output.directory.replace('\\', '/') == 'outputs/run'
    assert config.resolved(data_path='other.dat').data.path == 'd.dat'


def test_presets_share_split_and_ga_budget():
    assert len(PRESETS) == 7
    for preset, config in PRESETS.items():
        assert config.name == preset.value
        assert (config.ga.population_size, config.ga.generations) == (50, 100)
        assert config.data.split_seed == 42

    brute = get_preset('brute-5mf-o1')
    assert brute.model.kind is RegressorKind.BRUTE
    assert (brute.model.mf_count, brute.model.order) == (5, 1)
    assert get_preset('gft-3mf-o0').model.order == 0


def test_get_preset_returns_a_copy():
    config = get_preset(ExperimentPreset.CLUSTERED_FCM_15.value)
    config.ga.seed = 99

    assert PRESETS[ExperimentPreset.CLUSTERED_FCM_15].ga.seed == 42


def test_resolve_config_accepts_paths_and_presets(tmp_path):
    path = save_config(ExperimentConfig(name='from-file'), tmp_path / 'exp.toml')

    assert resolve_config(str(path)).name == 'from-file'
    assert resolve_config('clustered-gauss-15').model.kind is RegressorKind.CLUSTERED_GAUSS
    with pytest.raises(ConfigError, match='unknown preset'):
        resolve_config('does-not-exist')
