"""Tests for the experiment pipeline, comparisons, elbow reports and model files."""

import json
from pathlib import Path

import numpy as np
import pandas as pd
import pytest

from src.data import Dataset, export_csv, split
from src.harness import (
    FORMAT_VERSION,
    cluster_report,
    compare,
    load_model,
    predict_file,
    run_experiment,
    save_model,
    train,
)
from src.harness.comparison import COLUMNS, check_comparable
from src.harness.metrics import ErrorMetrics
from src.utils.errors import ConfigError, DataError, ModelFormatError, StageError
from tests.conftest import make_airfoil_rows

RUN_FILES = [
    'report.json',
    'fitness.csv',
    'predictions_train.csv',
    'predictions_test.csv',
    'model.json',
    'config.toml',
    'plot.gp',
]


def test_error_metrics():
    metrics = ErrorMetrics.summarize([1.0, 2.0, 4.0], [1.0, 1.0, 1.0], [True, False, True])

    assert metrics.rmse_db == pytest.approx(np.sqrt(10 / 3))
    assert metrics.mae_db == pytest.approx(4 / 3)
    assert metrics.uncovered == 1
    assert metrics.samples == 3


@pytest.mark.parametrize("kind", ['brute', 'gft', 'clustered-gauss', 'clustered-fcm'])
def test_run_experiment_writes_every_file(quick_config, kind):
    config = quick_config(kind)

    report = run_experiment(config)

    out = config.output.directory
    for name in RUN_FILES:
        assert (Path(out) / name).is_file(), name
    model = load_model(f"{out}/model.json")
    assert report.parameter_count == model.regressor.layout.total_length
    assert report.kind == kind
    assert len(report.fitness_history) == config.ga.generations


def test_clustered_fcm_report_counts_parameters(quick_config):
    report = run_experiment(quick_config('clustered-fcm', n_clusters=15))

    assert report.parameter_count == 90


def test_fitness_history_is_monotone(quick_config):
    report = run_experiment(quick_config('gft', mf_count=3, order=0))
    best = [row['best'] for row in report.fitness_history]

    assert all(b >= a for a, b in zip(best, best[1:]))


def test_db_rmse_is_scaled_rmse_times_target_range(quick_config):
    run = train(quick_config('clustered-gauss'))

    expected = -run.report.best_fitness * run.model.scaler.target_range
    assert run.report.rmse_train_dB == pytest.approx(expected, rel=1e-9)


def test_prediction_files_use_original_indices(quick_config):
    config = quick_config('clustered-fcm')
    run = train(config)

    indices = np.concatenate([run.predictions_train['index'], run.predictions_test['index']])
    assert sorted(indices.tolist()) == list(range(len(run.train) + len(run.test)))
    assert list(run.predictions_test.columns) == ['index', 'actual_dB', 'predicted_dB']
    assert run.report.test_samples == len(run.predictions_test)


def test_rerun_reproduces_output_files(quick_config):
    config = quick_config('clustered-fcm')
    out = Path(config.output.directory)

    run_experiment(config)
    first = {name: (out / name).read_bytes() for name in RUN_FILES if name != 'report.json'}
    run_experiment(config)

    for name, content in first.items():
        assert (out / name).read_bytes() == content, name


def test_missing_dataset_is_a_load_stage_error(quick_config, tmp_path):
    config = quick_config('brute')
    config = config.model_copy(update={'data': config.data.model_copy(update={'path': str(tmp_path / 'none.dat')})})

    with pytest.raises(StageError) as exc:
        run_experiment(config)

    assert exc.value.stage == 'load'
    assert isinstance(exc.value.cause, DataError)
    assert exc.value.exit_code == 2


def test_compare_needs_two_configs(quick_config):
    with pytest.raises(ConfigError, match='at least 2'):
        compare([quick_config('brute')])


def test_compare_rejects_different_splits(quick_config):
    a = quick_config('brute')
    b = quick_config('clustered-fcm')
    b = b.model_copy(update={'data': b.data.model_copy(update={'split_seed': 99})})

    with pytest.raises(ConfigError, match='different dataset or split'):
        check_comparable([a, b])


def test_compare_table_and_files(quick_config, tmp_path):
    configs = [quick_config('brute'), quick_config('clustered-fcm')]

    table = compare(configs, out_dir=tmp_path / 'cmp')

    assert list(table.columns) == COLUMNS
    assert table['parameter_ratio'].min() == 1.0
    brute, fcm = table['parameter_count']
    assert table['parameter_ratio'][0] == pytest.approx(brute / fcm)
    assert (tmp_path / 'cmp' / 'comparison.csv').is_file()
    assert (tmp_path / 'cmp' / 'comparison.txt').is_file()
    assert (tmp_path / 'cmp' / '01-quick-brute' / 'report.json').is_file()


def test_identical_configs_give_identical_rows(quick_config, tmp_path):
    config = quick_config('clustered-gauss')

    table = compare([config, config], out_dir=tmp_path / 'twice')
    metrics = table.drop(columns=['wall_clock_seconds'])

    assert metrics.iloc[0].to_dict() == metrics.iloc[1].to_dict()


def test_cluster_report_files(quick_config, tmp_path):
    config = quick_config('clustered-fcm')

    report = cluster_report(config, tmp_path / 'elbow', c_min=2, c_max=6)

    elbow = pd.read_csv(report.files['elbow'])
    assert elbow['c'].tolist() == [2, 3, 4, 5, 6]
    assert report.chosen == 4
    assert 2 <= report.knee <= 6
    note = report.files['note'].read_text(encoding='utf-8')
    assert f"knee_suggestion = {report.knee}" in note
    assert list(pd.read_csv(report.files['validity']).columns) == ['c', 'J', 'partition_coefficient', 'xie_beni']


def test_model_round_trip_predicts_identically(quick_config, tmp_path):
    run = train(quick_config('gft', mf_count=2, order=1))
    path = save_model(run.model, tmp_path / 'model.json')
    restored = load_model(path)
    X = np.random.default_rng(0).uniform(size=(100, 5))

    original, _ = run.model.predict_scaled(X)
    reloaded, _ = restored.predict_scaled(X)

    assert np.max(np.abs(original - reloaded)) == 0.0
    assert restored.describe() == run.model.describe()


def test_truncated_model_file(quick_config, tmp_path):
    run = train(quick_config('clustered-fcm'))
    path = save_model(run.model, tmp_path / 'model.json')
    text = path.read_text(encoding='utf-8')
    path.write_text(text[: len(text) // 2], encoding='utf-8')

    with pytest.raises(ModelFormatError, match='not valid JSON'):
        load_model(path)


def test_model_version_and_shape_checks(quick_config, tmp_path):
    run = train(quick_config('clustered-fcm'))
    path = save_model(run.model, tmp_path / 'model.json')
    raw = json.loads(path.read_text(encoding='utf-8'))

    path.write_text(json.dumps({**raw, 'format_version': FORMAT_VERSION + 1}), encoding='utf-8')
    with pytest.raises(ModelFormatError, match='version'):
        load_model(path)

    path.write_text(json.dumps({**raw, 'genes': raw['genes'][:-1]}), encoding='utf-8')
    with pytest.raises(ModelFormatError, match='genes'):
        load_model(path)

    path.write_text(json.dumps({**raw, 'regressor': {'kind': 'forest'}}), encoding='utf-8')
    with pytest.raises(ModelFormatError, match='malformed'):
        load_model(path)


def test_predict_file_on_test_split(quick_config, tmp_path):
    run = train(quick_config('clustered-fcm'))
    model_path = save_model(run.model, tmp_path / 'model.json')
    csv_path = export_csv(run.test, tmp_path / 'test.csv')

    frame = predict_file(model_path, csv_path, tmp_path / 'pred.csv')

    assert len(frame) == len(run.test)
    np.testing.assert_allclose(frame['predicted_dB'], run.predictions_test['predicted_dB'], rtol=1e-9)
    assert pd.read_csv(tmp_path / 'pred.csv').shape[0] == len(run.test)


def test_predict_file_of_canonical_split_has_301_rows(tmp_path, quick_config):
    rows = make_airfoil_rows(1503, seed=1)
    config = quick_config('clustered-fcm')
    run = train(config)
    model_path = save_model(run.model, tmp_path / 'model.json')
    _, test = split(Dataset(features=rows[:, :5], target=rows[:, 5]), 0.8, seed=42)
    frame = predict_file(model_path, export_csv(test, tmp_path / 'test.csv'), tmp_path / 'pred.csv')

    assert len(frame) == 301
