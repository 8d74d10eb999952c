"""Cascading genetic fuzzy tree: a left-deep chain of 2-input TSK stages."""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from src.architectures.base import Regressor, RegressorKind
from src.fuzzy.system import FuzzySystem
from src.genetic.codec import decode, grid_layout
from src.genetic.layout import GenomeLayout


@dataclass(frozen=True)
class CascadeSpec:
    """Stage wiring: stage 1 reads inputs (0, 1); stage k reads (stage k-1 output, input k)."""
    n_inputs: int
    mf_count: int
    order: int
    input_order: Tuple[int, ...]

    @property
    def n_stages(self) -> int:
        return self.n_inputs - 1

    @property
    def n_rules(self) -> int:
        return self.n_stages * self.mf_count ** 2


class CascadeRegressor(Regressor):
    """
    out_1 = FIS_1(x_a, x_b); out_k = FIS_k(clamp(out_{k-1}), x_next).

    Intermediate outputs are clamped to [0, 1] so later partitions cover them;
    a sample is uncovered when any stage falls back.
    """

    kind = RegressorKind.GFT

    def __init__(
        self,
        n_inputs: int = 5,
        mf_count: int = 3,
        order: int = 0,
        input_order: Optional[Sequence[int]] = None,
        fallback: float = 0.5,
    ):
        super().__init__(n_inputs, fallback)
        if self.n_inputs < 2:
            raise ValueError("a cascade needs at least 2 inputs")
        if order not in (0, 1):
            raise ValueError(f"TSK order must be 0 or 1, got {order}")
        permutation = tuple(range(self.n_inputs)) if input_order is None else tuple(int(i) for i in input_order)
        if sorted(permutation) != list(range(self.n_inputs)):
            raise ValueError(f"input_order must be a permutation of 0..{self.n_inputs - 1}")

        self.spec = CascadeSpec(self.n_inputs, int(mf_count), int(order), permutation)
        self._stage_layout = grid_layout(2, self.spec.mf_count, self.spec.order)
        self._layout = GenomeLayout.concat(
            [self._stage_layout] * self.spec.n_stages,
            [f"stage{k + 1}." for k in range(self.spec.n_stages)],
        )

    @property
    def layout(self):
        return self._layout

    @property
    def n_rules(self) -> int:
        return self.spec.n_rules

    def stages(self, genes) -> List[FuzzySystem]:
        """Decoded stage systems in evaluation order."""
        genes = np.asarray(genes, dtype=float)
        size = self._stage_layout.total_length
        return [
            decode(self._stage_layout, genes[k * size:(k + 1) * size], self.fallback)
            for k in range(self.spec.n_stages)
        ]

    def _predict(self, genes, X):
        X = X[:, list(self.spec.input_order)]
        systems = self.stages(genes)
        out, covered = systems[0].evaluate(X[:, 0:2])
        for k, system in enumerate(systems[1:], start=2):
            stage_in = np.column_stack((np.clip(out, 0.0, 1.0), X[:, k]))
            out, stage_covered = system.evaluate(stage_in)
            covered = covered & stage_covered
        return out, covered

    def structure(self) -> Dict[str, Any]:
        return {
            'mf_count': self.spec.mf_count,
            'order': self.spec.order,
            'input_order': list(self.spec.input_order),
        }

    def describe(self) -> Dict[str, Any]:
        return {
            **super().describe(),
            'rules': self.n_rules,
            'stages': self.spec.n_stages,
            'rules_per_stage': self.spec.mf_count ** 2,
            'mf_per_input': self.spec.mf_count,
            'order': self.spec.order,
            'input_order': list(self.spec.input_order),
        }


def build_gft(
    d: int = 5,
    m: int = 3,
    order: int = 0,
    input_order: Optional[Sequence[int]] = None,
    fallback: float = 0.5,
) -> CascadeRegressor:
    """Chain of ``d - 1`` two-input grid stages with ``m`` MFs per input."""
    return CascadeRegressor(n_inputs=d, mf_count=m, order=order, input_order=input_order, fallback=fallback)
