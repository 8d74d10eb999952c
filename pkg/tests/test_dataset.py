"""Tests for loading, validating, splitting and scaling the airfoil data."""

import numpy as np
import pytest

from src.data import (
    Dataset,
    Sample,
    apply,
    apply_matrix,
    export_csv,
    fit_scaler,
    invert_target,
    load_airfoil,
    read_csv,
    split,
)
from src.data.scaler import Scaler
from src.utils.errors import DataError
from tests.conftest import make_airfoil_rows, write_airfoil_file


def test_load_keeps_row_count_and_column_order(airfoil_file, airfoil_rows):
    dataset = load_airfoil(airfoil_file)

    assert len(dataset) == len(airfoil_rows)
    assert dataset.feature_names == ('frequency', 'angle', 'chord', 'velocity', 'thickness')
    assert dataset.target_name == 'noise'
    np.testing.assert_allclose(dataset.features[0], airfoil_rows[0, :5], rtol=1e-5)
    assert dataset.report.rows == len(airfoil_rows)
    assert dataset.report.findings == []


def test_load_reports_observed_ranges(airfoil_file, airfoil_rows):
    report = load_airfoil(airfoil_file).report

    low, high = report.observed_ranges['noise']
    assert low == pytest.approx(airfoil_rows[:, 5].min(), abs=1e-3)
    assert high == pytest.approx(airfoil_rows[:, 5].max(), abs=1e-3)


def test_wrong_arity_names_the_line(tmp_path):
    rows = make_airfoil_rows(10)
    lines = ['\t'.join(f"{v:g}" for v in row) for row in rows]
    lines[6] = '\t'.join(lines[6].split('\t')[:5])
    path = tmp_path / 'bad.dat'
    path.write_text('\n'.join(lines), encoding='utf-8')

    with pytest.raises(DataError, match='line 7') as exc:
        load_airfoil(path)
    assert exc.value.line == 7


def test_non_numeric_token_is_rejected(tmp_path):
    path = tmp_path / 'bad.dat'
    path.write_text("800\t0\t0.3048\t71.3\tabc\t126.201\n", encoding='utf-8')

    with pytest.raises(DataError, match="line 1.*'abc'"):
        load_airfoil(path)


@pytest.mark.parametrize("row", [
    "800\tnan\t0.3048\t71.3\t0.00266337\t126.201",
    "800\t-1\t0.3048\t71.3\t0.00266337\t126.201",
    "800\t0\t0\t71.3\t0.00266337\t126.201",
    "800\t0\t0.3048\t71.3\t0.00266337\t250",
])
def test_physically_invalid_rows_are_hard_errors(tmp_path, row):
    path = tmp_path / 'bad.dat'
    path.write_text(row + "\n", encoding='utf-8')

    with pytest.raises(DataError, match='line 1'):
        load_airfoil(path, strict_ranges=False)


def test_documented_ranges_are_strict_by_default(tmp_path):
    path = tmp_path / 'odd.dat'
    path.write_text("25000\t0\t0.3048\t71.3\t0.00266337\t126.201\n", encoding='utf-8')

    with pytest.raises(DataError, match='frequency'):
        load_airfoil(path)

    dataset = load_airfoil(path, strict_ranges=False)
    assert len(dataset) == 1
    assert dataset.report.findings[0].column == 'frequency'


def test_empty_and_missing_files(tmp_path):
    empty = tmp_path / 'empty.dat'
    empty.write_text("\n\n", encoding='utf-8')

    with pytest.raises(DataError, match='no data rows'):
        load_airfoil(empty)
    with pytest.raises(DataError, match='cannot read'):
        load_airfoil(tmp_path / 'missing.dat')


def test_split_sizes_and_partition(airfoil_dataset):
    train, test = split(airfoil_dataset, 0.8, seed=42)

    assert len(train) == int(np.floor(len(airfoil_dataset) * 0.8))
    assert len(train) + len(test) == len(airfoil_dataset)
    combined = np.sort(np.concatenate([train.indices, test.indices]))
    np.testing.assert_array_equal(combined, np.arange(len(airfoil_dataset)))


def test_split_of_1503_rows():
    rows = make_airfoil_rows(1503, seed=5)
    dataset = Dataset(features=rows[:, :5], target=rows[:, 5])

    train, test = split(dataset, 0.8, seed=42)

    assert (len(train), len(test)) == (1202, 301)


def test_split_is_deterministic(airfoil_dataset):
    first = split(airfoil_dataset, 0.7, seed=9)
    second = split(airfoil_dataset, 0.7, seed=9)
    other = split(airfoil_dataset, 0.7, seed=10)

    np.testing.assert_array_equal(first[0].indices, second[0].indices)
    assert not np.array_equal(first[0].indices, other[0].indices)


@pytest.mark.parametrize("fraction", [0.0, 1.0, -0.2, 1.5, float('nan')])
def test_split_rejects_bad_fractions(airfoil_dataset, fraction):
    with pytest.raises(DataError):
        split(airfoil_dataset, fraction, seed=1)


def test_dataset_is_read_only(airfoil_dataset):
    with pytest.raises(ValueError):
        airfoil_dataset.features[0, 0] = 1.0


def test_scaler_endpoints(airfoil_dataset):
    scaler = fit_scaler(airfoil_dataset)
    lows = list(scaler.feature_min) + [scaler.target_min]
    highs = list(scaler.feature_max) + [scaler.target_max]

    np.testing.assert_allclose(apply(scaler, Sample.from_row(lows)), np.zeros(6), atol=1e-12)
    np.testing.assert_allclose(apply(scaler, Sample.from_row(highs)), np.ones(6), atol=1e-12)


def test_scaled_training_inputs_lie_in_unit_box(airfoil_dataset):
    X, y = apply_matrix(fit_scaler(airfoil_dataset, log_frequency=True), airfoil_dataset)

    assert X.min() >= 0.0 and X.max() <= 1.0
    assert y.min() == pytest.approx(0.0) and y.max() == pytest.approx(1.0)


def test_target_round_trip(airfoil_dataset):
    scaler = fit_scaler(airfoil_dataset)
    rng = np.random.default_rng(0)
    y = airfoil_dataset.target[rng.choice(len(airfoil_dataset), 100)]

    restored = invert_target(scaler, scaler.transform_target(y))

    np.testing.assert_allclose(restored, y, rtol=1e-12)


def test_predict_time_clamping(airfoil_dataset):
    scaler = fit_scaler(airfoil_dataset)
    outside = np.array([[20000.0, 30.0, 0.5, 80.0, 0.06]])

    assert scaler.transform_features(outside).max() > 1.0
    np.testing.assert_array_equal(scaler.transform_features(outside, clamp=True), np.ones((1, 5)))


def test_constant_feature_cannot_be_scaled():
    rows = make_airfoil_rows(10)
    rows[:, 3] = 71.3
    with pytest.raises(DataError, match='velocity'):
        fit_scaler(Dataset(features=rows[:, :5], target=rows[:, 5]))


def test_scaler_serialization(airfoil_dataset):
    scaler = fit_scaler(airfoil_dataset, log_frequency=True)
    assert Scaler.from_dict(scaler.to_dict()) == scaler


def test_csv_export_and_import(tmp_path, airfoil_dataset):
    path = export_csv(airfoil_dataset, tmp_path / 'airfoil.csv')

    assert path.read_text(encoding='utf-8').splitlines()[0] == 'frequency,angle,chord,velocity,thickness,noise'
    features, target = read_csv(path)
    np.testing.assert_allclose(features, airfoil_dataset.features, rtol=1e-12)
    np.testing.assert_allclose(target, airfoil_dataset.target, rtol=1e-12)


def test_csv_import_without_target(tmp_path):
    path = tmp_path / 'inputs.csv'
    path.write_text("frequency,angle,chord,velocity,thickness\n800,0,0.3048,71.3,0.0026\n", encoding='utf-8')

    features, target = read_csv(path)

    assert features.shape == (1, 5)
    assert target is None


def test_csv_import_missing_column(tmp_path):
    path = tmp_path / 'inputs.csv'
    path.write_text("frequency,angle\n800,0\n", encoding='utf-8')
    with pytest.raises(DataError, match='missing columns'):
        read_csv(path)


def test_real_file_fidelity(real_airfoil_file):
    dataset = load_airfoil(real_airfoil_file)
    report = dataset.report

    assert len(dataset) == 1503
    assert report.observed_ranges['noise'] == (103.38, 140.987)
    low, high = report.observed_ranges["frequency"]
    assert 50.0 <= low and high == 20000.0
    assert report.observed_ranges['velocity'] == (31.7, 71.3)
    train, test = split(dataset, 0.8, seed=42)
    assert (len(train), len(test)) == (1202, 301)
