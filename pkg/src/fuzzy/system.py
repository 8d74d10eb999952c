"""TSK fuzzy systems over explicit rule bases."""

import itertools
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from src.fuzzy.membership import MembershipFunction, TriangularMF, mf_from_dict, ruspini_triples
from src.utils.validators import require_finite

# Total firing strength below this counts as "no rule fires".
COVERAGE_EPS = 1e-12


@dataclass(frozen=True)
class InputPartition:
    """Ordered membership functions over one scaled input."""
    mfs: Tuple[MembershipFunction, ...]

    def __post_init__(self):
        object.__setattr__(self, 'mfs', tuple(self.mfs))
        if not self.mfs:
            raise ValueError("an input partition needs at least one membership function")
        peaks = [mf.peak for mf in self.mfs]
        if any(p > q for p, q in zip(peaks, peaks[1:])):
            raise ValueError("membership function peaks must be sorted ascending")

    def __len__(self) -> int:
        return len(self.mfs)

    def degrees(self, x: np.ndarray) -> np.ndarray:
        """n x m matrix of degrees for a column of scaled values."""
        return np.column_stack([mf.degree(np.asarray(x, dtype=float)) for mf in self.mfs])

    @classmethod
    def ruspini(cls, m: int) -> "InputPartition":
        return cls(tuple(TriangularMF(*row) for row in ruspini_triples(m)))

    @classmethod
    def from_triples(cls, triples: np.ndarray) -> "InputPartition":
        return cls(tuple(TriangularMF(*map(float, row)) for row in np.asarray(triples)))


@dataclass(frozen=True)
class TskRule:
    """One rule: an MF index per input and its consequent coefficients.

    Order 0 consequents hold a single constant; order 1 hold the input slopes
    followed by the intercept.
    """
    antecedent: Tuple[int, ...]
    consequent: Tuple[float, ...]


def grid_antecedents(mf_counts: Sequence[int]) -> np.ndarray:
    """Every antecedent combination once, in mixed-radix order (last input fastest)."""
    return np.array(list(itertools.product(*(range(m) for m in mf_counts))), dtype=int).reshape(-1, len(mf_counts))


class FuzzySystem:
    """
    TSK system of order 0 or 1.

    Rules are stored as arrays (``antecedents`` R x d, ``consequents`` R x k) so a
    3125-rule grid evaluates without per-rule Python objects; ``rules``
    materializes ``TskRule`` views when needed.
    """

    def __init__(
        self,
        partitions: Sequence[InputPartition],
        antecedents: np.ndarray,
        consequents: np.ndarray,
        order: int,
        fallback: float = 0.5,
    ):
        if order not in (0, 1):
            raise ValueError(f"TSK order must be 0 or 1, got {order}")
        self.partitions = tuple(partitions)
        self.order = order
        self.fallback = float(fallback)

        antecedents = np.array(antecedents, dtype=int).reshape(-1, len(self.partitions))
        k = 1 if order == 0 else len(self.partitions) + 1
        consequents = np.array(consequents, dtype=float).reshape(antecedents.shape[0], -1)
        if consequents.shape[1] != k:
            raise ValueError(f"order-{order} consequents need {k} coefficients, got {consequents.shape[1]}")
        for j, partition in enumerate(self.partitions):
            col = antecedents[:, j]
            if col.size and (col.min() < 0 or col.max() >= len(partition)):
                raise ValueError(f"antecedent index out of range for input {j}")

        antecedents.setflags(write=False)
        consequents.setflags(write=False)
        self.antecedents = antecedents
        self.consequents = consequents

    @classmethod
    def grid(
        cls,
        partitions: Sequence[InputPartition],
        consequents: np.ndarray,
        order: int,
        fallback: float = 0.5,
    ) -> "FuzzySystem":
        """Full grid rule base: one rule per antecedent combination."""
        antecedents = grid_antecedents([len(p) for p in partitions])
        return cls(partitions, antecedents, consequents, order, fallback)

    @property
    def n_inputs(self) -> int:
        return len(self.partitions)

    @property
    def n_rules(self) -> int:
        return self.antecedents.shape[0]

    @property
    def rules(self) -> List[TskRule]:
        return [
            TskRule(tuple(int(i) for i in a), tuple(float(c) for c in cons))
            for a, cons in zip(self.antecedents, self.consequents)
        ]

    def _check_inputs(self, X) -> np.ndarray:
        X = require_finite(X, "x")
        if X.ndim == 1:
            X = X.reshape(1, -1)
        if X.shape[1] != self.n_inputs:
            raise ValueError(f"expected {self.n_inputs} inputs, got {X.shape[1]}")
        return X

    def firing_strengths(self, X) -> np.ndarray:
        """n x R product t-norm of antecedent degrees."""
        X = self._check_inputs(X)
        weights = np.ones((X.shape[0], self.n_rules))
        for j, partition in enumerate(self.partitions):
            weights *= partition.degrees(X[:, j])[:, self.antecedents[:, j]]
        return weights

    def rule_outputs(self, X) -> np.ndarray:
        """n x R consequent values."""
        X = self._check_inputs(X)
        if self.order == 0:
            return np.broadcast_to(self.consequents[:, 0], (X.shape[0], self.n_rules))
        return X @ self.consequents[:, :-1].T + self.consequents[:, -1]

    def evaluate(self, X) -> Tuple[np.ndarray, np.ndarray]:
        """
        Weighted-average TSK output for a batch.

        Returns:
            (outputs, covered) where uncovered rows get ``fallback``
        """
        X = self._check_inputs(X)
        weights = self.firing_strengths(X)
        total = weights.sum(axis=1)
        covered = total >= COVERAGE_EPS
        numerator = np.einsum('nr,nr->n', weights, self.rule_outputs(X))
        y = np.full(X.shape[0], self.fallback)
        np.divide(numerator, total, out=y, where=covered)
        return y, covered

    def to_dict(self) -> Dict[str, Any]:
        return {
            'order': self.order,
            'fallback': self.fallback,
            'partitions': [[mf.to_dict() for mf in p.mfs] for p in self.partitions],
            'rules': [
                {'antecedent': a.tolist(), 'consequent': c.tolist()}
                for a, c in zip(self.antecedents, self.consequents)
            ],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "FuzzySystem":
        partitions = [InputPartition(tuple(mf_from_dict(mf) for mf in p)) for p in data['partitions']]
        rules = data['rules']
        return cls(
            partitions,
            np.array([r['antecedent'] for r in rules], dtype=int),
            np.array([r['consequent'] for r in rules], dtype=float),
            order=int(data['order']),
            fallback=float(data.get('fallback', 0.5)),
        )


def firing_strengths(system: FuzzySystem, x) -> np.ndarray:
    """Weight per rule for one input vector."""
    return system.firing_strengths(x)[0]


def evaluate(system: FuzzySystem, X) -> Tuple[np.ndarray, np.ndarray]:
    return system.evaluate(X)


def tsk_eval(system: FuzzySystem, x) -> Tuple[float, bool]:
    """
    Scaled output for one input vector.

    Returns:
        (output, covered); an uncovered input returns the system fallback
    """
    y, covered = system.evaluate(x)
    return float(y[0]), bool(covered[0])


def ruspini_partition(m: int) -> InputPartition:
    """``m`` evenly spaced triangles on [0, 1] whose degrees sum to 1."""
    return InputPartition.ruspini(m)
