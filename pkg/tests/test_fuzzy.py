"""Tests for membership functions and TSK inference."""

import itertools

import numpy as np
import pytest

from src.fuzzy import (
    FuzzySystem,
    GaussianMF,
    InputPartition,
    TriangularMF,
    evaluate,
    firing_strengths,
    grid_antecedents,
    mf_degree,
    mf_from_dict,
    ruspini_partition,
    ruspini_triples,
    tsk_eval,
)


def test_triangular_degrees():
    mf = TriangularMF(0.0, 0.5, 1.0)

    assert mf_degree(mf, 0.5) == 1.0
    assert mf_degree(mf, 0.25) == pytest.approx(0.5)
    assert mf_degree(mf, 0.75) == pytest.approx(0.5)
    assert mf_degree(mf, 0.0) == 0.0
    assert mf_degree(mf, 1.2) == 0.0


def test_triangular_shoulders():
    left = TriangularMF(0.0, 0.0, 0.5)
    right = TriangularMF(0.5, 1.0, 1.0)

    assert left.degree(0.0) == 1.0
    assert left.degree(0.25) == pytest.approx(0.5)
    assert right.degree(1.0) == 1.0
    assert right.degree(0.75) == pytest.approx(0.5)


def test_triangular_rejects_unordered_feet():
    with pytest.raises(ValueError):
        TriangularMF(0.6, 0.5, 1.0)


def test_non_finite_input_is_rejected():
    with pytest.raises(ValueError):
        TriangularMF(0.0, 0.5, 1.0).degree(float('nan'))


def test_gaussian_degrees():
    mf = GaussianMF(0.3, 0.1)

    assert mf.degree(0.3) == 1.0
    assert mf.degree(0.4) == pytest.approx(np.exp(-0.5))
    with pytest.raises(ValueError):
        GaussianMF(0.3, 0.0)


def test_gaussian_is_symmetric_about_its_center():
    mf = GaussianMF(0.3, 0.1)
    offsets = np.linspace(0.0, 0.7, 141)

    np.testing.assert_allclose(mf.degree(0.3 + offsets), mf.degree(0.3 - offsets), rtol=0, atol=1e-14)
    assert np.all(np.diff(mf.degree(0.3 + offsets)) < 0)


def test_membership_serialization():
    for mf in (TriangularMF(0.1, 0.2, 0.4), GaussianMF(0.5, 0.2)):
        assert mf_from_dict(mf.to_dict()) == mf


@pytest.mark.parametrize("m", [2, 3, 5])
def test_ruspini_partition_sums_to_one(m):
    partition = ruspini_partition(m)
    x = np.linspace(0.0, 1.0, 201)

    np.testing.assert_allclose(partition.degrees(x).sum(axis=1), 1.0, atol=1e-12)
    np.testing.assert_allclose(ruspini_triples(m)[:, 1], np.linspace(0, 1, m))


def test_grid_antecedents_enumerate_each_combination_once():
    counts = [3, 2, 4]
    antecedents = grid_antecedents(counts)

    assert antecedents.shape == (24, 3)
    assert len({tuple(a) for a in antecedents}) == 24
    for index, row in enumerate(antecedents):
        # mixed radix with the last input fastest
        assert index == (row[0] * 2 + row[1]) * 4 + row[2]


def test_order_zero_with_single_firing_rule():
    partitions = [ruspini_partition(2), ruspini_partition(2)]
    system = FuzzySystem.grid(partitions, [[0.1], [0.2], [0.3], [0.4]], order=0)

    y, covered = tsk_eval(system, [1.0, 0.0])

    assert covered
    assert y == pytest.approx(0.3)
    np.testing.assert_allclose(firing_strengths(system, [1.0, 0.0]), [0, 0, 1, 0])


def test_order_one_evaluates_affine_consequent():
    partitions = [ruspini_partition(2)]
    system = FuzzySystem.grid(partitions, [[2.0, 0.1], [-1.0, 0.5]], order=1)

    y, _ = tsk_eval(system, [0.25])

    # weights 0.75 / 0.25 over 2x+0.1 and -x+0.5
    assert y == pytest.approx(0.75 * 0.6 + 0.25 * 0.25)


def test_uncovered_input_uses_fallback():
    partitions = [InputPartition((TriangularMF(0.0, 0.1, 0.2), TriangularMF(0.3, 0.4, 0.5)))]
    system = FuzzySystem.grid(partitions, [[0.9], [0.8]], order=0, fallback=0.42)

    y, covered = evaluate(system, np.array([[0.25], [0.1]]))

    np.testing.assert_array_equal(covered, [False, True])
    assert y[0] == 0.42
    assert y[1] == pytest.approx(0.9)


def test_output_is_continuous_in_the_inputs():
    rng = np.random.default_rng(12)
    system = FuzzySystem.grid([ruspini_partition(3)] * 2, rng.uniform(-1, 1, (9, 3)), order=1)
    h = 1e-6

    for x in rng.uniform(h, 1 - h, (200, 2)):
        y, _ = tsk_eval(system, x)
        for j in range(2):
            step = np.zeros(2)
            step[j] = h
            assert abs(tsk_eval(system, x + step)[0] - y) < 1e-3
            assert abs(tsk_eval(system, x - step)[0] - y) < 1e-3


def test_order_zero_output_stays_within_firing_consequents():
    rng = np.random.default_rng(21)
    partitions = []
    for _ in range(2):
        triples = np.sort(rng.uniform(0, 1, (3, 3)), axis=1)
        partitions.append(InputPartition.from_triples(triples[np.argsort(triples[:, 1])]))
    consequents = rng.uniform(-1, 1, (9, 1))
    system = FuzzySystem.grid(partitions, consequents, order=0)

    X = rng.uniform(0, 1, (500, 2))
    y, covered = system.evaluate(X)
    weights = system.firing_strengths(X)

    assert covered.any()
    for yi, w in zip(y[covered], weights[covered]):
        firing = consequents[w > 0, 0]
        assert firing.min() - 1e-12 <= yi <= firing.max() + 1e-12


def _oracle(partitions, consequents, order, fallback, x):
    """Direct double-loop TSK evaluation."""
    num = 0.0
    den = 0.0
    for r, combo in enumerate(itertools.product(*(range(len(p)) for p in partitions))):
        w = 1.0
        for j, k in enumerate(combo):
            w *= partitions[j].mfs[k].degree(x[j])
        g = consequents[r][0] if order == 0 else float(np.dot(consequents[r][:-1], x) + consequents[r][-1])
        num += w * g
        den += w
    return num / den if den >= 1e-12 else fallback


@pytest.mark.parametrize("m,order", [(2, 0), (2, 1), (3, 0), (3, 1)])
def test_tsk_matches_direct_summation(m, order):
    rng = np.random.default_rng(m * 10 + order)
    partitions = []
    for _ in range(2):
        triples = np.sort(rng.uniform(0, 1, (m, 3)), axis=1)
        triples = triples[np.argsort(triples[:, 1])]
        partitions.append(InputPartition.from_triples(triples))
    k = 1 if order == 0 else 3
    consequents = rng.uniform(-1, 1, (m ** 2, k))
    system = FuzzySystem.grid(partitions, consequents, order, fallback=0.5)

    X = rng.uniform(0, 1, (1000, 2))
    y, _ = system.evaluate(X)

    expected = np.array([_oracle(partitions, consequents, order, 0.5, x) for x in X])
    np.testing.assert_allclose(y, expected, atol=1e-10)


def test_wrong_input_dimension():
    system = FuzzySystem.grid([ruspini_partition(2)] * 2, np.zeros((4, 1)), order=0)
    with pytest.raises(ValueError, match='expected 2 inputs'):
        system.evaluate(np.zeros((3, 3)))


def test_consequent_width_must_match_order():
    with pytest.raises(ValueError):
        FuzzySystem.grid([ruspini_partition(2)], np.zeros((2, 1)), order=1)


def test_system_serialization_round_trip():
    rng = np.random.default_rng(1)
    system = FuzzySystem.grid([ruspini_partition(3)] * 2, rng.uniform(size=(9, 3)), order=1, fallback=0.3)
    restored = FuzzySystem.from_dict(system.to_dict())
    X = rng.uniform(size=(50, 2))

    np.testing.assert_array_equal(restored.evaluate(X)[0], system.evaluate(X)[0])
    assert len(restored.rules) == 9
