"""Cluster validity indices for choosing the cluster count."""

import numpy as np
from scipy.spatial.distance import pdist

from src.clustering.fcm import ClusterModel


def partition_coefficient(model: ClusterModel) -> float:
    """Mean squared membership; 1 for a crisp partition, 1/c for a uniform one."""
    U = model.membership
    return float(np.sum(U ** 2) / U.shape[0])


def xie_beni(points: np.ndarray, model: ClusterModel) -> float:
    """Compactness over separation: J / (n * min squared center distance)."""
    separation = float(np.min(pdist(model.centers, 'sqeuclidean')))
    if separation == 0.0:
        return float('inf')
    return model.objective / (points.shape[0] * separation)
