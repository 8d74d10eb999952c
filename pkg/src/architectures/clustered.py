"""Cluster-based regressors: one affine rule per FCM cluster center."""

from typing import Any, Dict, Tuple

import numpy as np
from scipy.spatial.distance import cdist

from src.architectures.base import Regressor, RegressorKind
from src.clustering.fcm import memberships
from src.fuzzy.system import COVERAGE_EPS
from src.genetic.codec import consequent_bounds
from src.genetic.layout import GenomeLayout, SegmentSpec

SIGMA_BOUNDS = (0.01, 2.0)


class _ClusteredRegressor(Regressor):
    """Shared centers and per-cluster affine consequents (d slopes + intercept)."""

    def __init__(self, centers, fallback: float = 0.5):
        centers = np.atleast_2d(np.array(centers, dtype=float))
        if centers.shape[0] == 0 or centers.size == 0:
            raise ValueError("at least one cluster center is required")
        super().__init__(centers.shape[1], fallback)
        centers.setflags(write=False)
        self.centers = centers

    @property
    def n_clusters(self) -> int:
        return self.centers.shape[0]

    def _consequent_spec(self) -> SegmentSpec:
        lower, upper = consequent_bounds(self.n_clusters, self.n_inputs, order=1)
        return SegmentSpec('consequents', self.n_clusters * (self.n_inputs + 1), lower, upper)

    def affine_outputs(self, genes, X) -> np.ndarray:
        """n x c values of every cluster's affine consequent."""
        coef = self.layout.slice(np.asarray(genes, dtype=float), 'consequents').reshape(self.n_clusters, -1)
        return X @ coef[:, :-1].T + coef[:, -1]

    @staticmethod
    def _weighted(activation: np.ndarray, affine: np.ndarray, fallback: float) -> Tuple[np.ndarray, np.ndarray]:
        total = activation.sum(axis=1)
        covered = total >= COVERAGE_EPS
        y = np.full(activation.shape[0], fallback)
        np.divide(np.einsum('nc,nc->n', activation, affine), total, out=y, where=covered)
        return y, covered

    def describe(self) -> Dict[str, Any]:
        return {**super().describe(), 'rules': self.n_clusters, 'clusters': self.n_clusters}


class ClusteredGaussRegressor(_ClusteredRegressor):
    """Activation exp(-||x - center_k||^2 / (2 sigma_k^2)) with GA-trained sigmas."""

    kind = RegressorKind.CLUSTERED_GAUSS

    def __init__(self, centers, fallback: float = 0.5):
        super().__init__(centers, fallback)
        self._layout = GenomeLayout.build([
            SegmentSpec('sigma', self.n_clusters, *SIGMA_BOUNDS),
            self._consequent_spec(),
        ])

    @property
    def layout(self):
        return self._layout

    def activations(self, genes, X) -> np.ndarray:
        sigma = self.layout.slice(np.asarray(genes, dtype=float), 'sigma')
        return np.exp(-cdist(X, self.centers, 'sqeuclidean') / (2.0 * sigma ** 2))

    def _predict(self, genes, X):
        return self._weighted(self.activations(genes, X), self.affine_outputs(genes, X), self.fallback)

    def structure(self) -> Dict[str, Any]:
        return {'centers': self.centers.tolist()}


class ClusteredFcmRegressor(_ClusteredRegressor):
    """Activation = FCM membership of x to the frozen centers (rows sum to 1)."""

    kind = RegressorKind.CLUSTERED_FCM

    def __init__(self, centers, fuzzifier: float = 2.0, fallback: float = 0.5):
        if not fuzzifier > 1:
            raise ValueError(f"fuzzifier must be > 1, got {fuzzifier}")
        super().__init__(centers, fallback)
        self.fuzzifier = float(fuzzifier)
        self._layout = GenomeLayout.build([self._consequent_spec()])

    @property
    def layout(self):
        return self._layout

    def activations(self, X) -> np.ndarray:
        return memberships(X, self.centers, self.fuzzifier)

    def _predict(self, genes, X):
        return self._weighted(self.activations(X), self.affine_outputs(genes, X), self.fallback)

    def structure(self) -> Dict[str, Any]:
        return {'centers': self.centers.tolist(), 'fuzzifier': self.fuzzifier}

    def describe(self) -> Dict[str, Any]:
        return {**super().describe(), 'fuzzifier': self.fuzzifier}


def build_clustered_gauss(centers, fallback: float = 0.5) -> ClusteredGaussRegressor:
    """Gaussian MF on every (input-space) center; genome = c sigmas + c(d+1) consequents."""
    return ClusteredGaussRegressor(centers, fallback=fallback)


def build_clustered_fcm(centers, fuzzifier: float = 2.0, fallback: float = 0.5) -> ClusteredFcmRegressor:
    """FCM-membership activation; genome = c(d+1) consequents only."""
    return ClusteredFcmRegressor(centers, fuzzifier=fuzzifier, fallback=fallback)
