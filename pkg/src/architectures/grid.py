"""Brute-force grid TSK regressor."""

from typing import Any, Dict

from src.architectures.base import Regressor, RegressorKind
from src.fuzzy.system import FuzzySystem
from src.genetic.codec import decode, grid_layout


class GridRegressor(Regressor):
    """One flat TSK system with a full rule grid (m^d rules)."""

    kind = RegressorKind.BRUTE

    def __init__(self, n_inputs: int = 5, mf_count: int = 5, order: int = 1, fallback: float = 0.5):
        super().__init__(n_inputs, fallback)
        if order not in (0, 1):
            raise ValueError(f"TSK order must be 0 or 1, got {order}")
        self.mf_count = int(mf_count)
        self.order = int(order)
        self._layout = grid_layout(self.n_inputs, self.mf_count, self.order)

    @property
    def layout(self):
        return self._layout

    @property
    def n_rules(self) -> int:
        return self.mf_count ** self.n_inputs

    def system(self, genes) -> FuzzySystem:
        """Decoded fuzzy system for a gene vector."""
        return decode(self._layout, genes, self.fallback)

    def _predict(self, genes, X):
        return self.system(genes).evaluate(X)

    def structure(self) -> Dict[str, Any]:
        return {'mf_count': self.mf_count, 'order': self.order}

    def describe(self) -> Dict[str, Any]:
        return {**super().describe(), 'rules': self.n_rules, 'mf_per_input': self.mf_count, 'order': self.order}


def build_brute(d: int = 5, m: int = 5, order: int = 1, fallback: float = 0.5) -> GridRegressor:
    """Grid TSK over ``d`` inputs with ``m`` triangular MFs each."""
    return GridRegressor(n_inputs=d, mf_count=m, order=order, fallback=fallback)
