"""Fuzzy c-means clustering."""

from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple

import numpy as np
from scipy.spatial.distance import cdist
from scipy.special import softmax

from src.utils.errors import ClusteringError
from src.utils.logger import get_logger
from src.utils.validators import require_finite

logger = get_logger(__name__)

INPUTS = 'inputs'
INPUTS_TARGET = 'inputs+target'


@dataclass(frozen=True, eq=False)
class ClusterModel:
    """Fitted FCM model.

    ``membership`` is n x c over the fitted points and may be None for a model
    restored from disk. ``objective_history`` holds J after every iteration.
    """
    centers: np.ndarray
    fuzzifier: float
    membership: Optional[np.ndarray]
    objective: float
    iterations: int
    objective_history: Tuple[float, ...] = ()
    space: str = INPUTS_TARGET

    @property
    def n_clusters(self) -> int:
        return self.centers.shape[0]

    def input_projection(self, n_inputs: int) -> np.ndarray:
        """Centers restricted to the first ``n_inputs`` coordinates."""
        return self.centers[:, :n_inputs].copy()

    def to_dict(self) -> Dict[str, Any]:
        return {
            'centers': self.centers.tolist(),
            'fuzzifier': self.fuzzifier,
            'objective': self.objective,
            'iterations': self.iterations,
            'space': self.space,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ClusterModel":
        return cls(
            centers=np.asarray(data['centers'], dtype=float),
            fuzzifier=float(data['fuzzifier']),
            membership=None,
            objective=float(data['objective']),
            iterations=int(data['iterations']),
            space=data.get('space', INPUTS_TARGET),
        )


def memberships(points: np.ndarray, centers: np.ndarray, m: float) -> np.ndarray:
    """
    n x c membership matrix.

    u_ik is proportional to d_ik^(-2/(m-1)); rows that coincide with one or
    more centers split their mass equally among those centers.
    """
    points = np.atleast_2d(np.asarray(points, dtype=float))
    centers = np.atleast_2d(np.asarray(centers, dtype=float))
    d2 = cdist(points, centers, 'sqeuclidean')

    zero = d2 == 0.0
    singular = zero.any(axis=1)
    U = np.empty_like(d2)
    if singular.any():
        hits = zero[singular].astype(float)
        U[singular] = hits / hits.sum(axis=1, keepdims=True)
    regular = ~singular
    if regular.any():
        U[regular] = softmax(-np.log(d2[regular]) / (m - 1.0), axis=1)
    return U


def fcm_membership(x, centers, m: float) -> np.ndarray:
    """Membership vector of one point to every center; sums to 1."""
    centers = np.atleast_2d(np.asarray(centers, dtype=float))
    if centers.shape[0] == 0:
        raise ClusteringError("at least one center is required")
    if not m > 1:
        raise ClusteringError(f"fuzzifier must be > 1, got {m}")
    return memberships(np.asarray(x, dtype=float).reshape(1, -1), centers, m)[0]


def objective(points: np.ndarray, centers: np.ndarray, U: np.ndarray, m: float) -> float:
    """J = sum_i sum_k U_ik^m * ||x_i - c_k||^2."""
    return float(np.sum((U ** m) * cdist(points, centers, 'sqeuclidean')))


def _update_centers(points: np.ndarray, U: np.ndarray, m: float) -> np.ndarray:
    W = U ** m
    return (W.T @ points) / W.sum(axis=0)[:, None]


def _single_run(points, init_centers, m, tol, max_iter):
    centers = init_centers
    history = []
    iterations = 0
    for iterations in range(1, max_iter + 1):
        U = memberships(points, centers, m)
        new_centers = _update_centers(points, U, m)
        history.append(objective(points, new_centers, U, m))
        shift = float(np.max(np.linalg.norm(new_centers - centers, axis=1)))
        centers = new_centers
        if shift < tol:
            break
    U = memberships(points, centers, m)
    J = objective(points, centers, U, m)
    history.append(J)
    return centers, U, J, iterations, tuple(history)


def fcm_fit(
    points,
    c: int,
    m: float = 2.0,
    tol: float = 1e-6,
    max_iter: int = 300,
    seed: int = 42,
    n_init: int = 1,
    space: str = INPUTS_TARGET,
) -> ClusterModel:
    """
    Alternating-optimization FCM.

    Args:
        points: n x p scaled points
        c: Number of clusters (2 <= c <= n)
        m: Fuzzifier (> 1)
        tol: Stop once the largest center displacement drops below this
        max_iter: Iteration cap per run
        seed: Seed for picking initial centers among the distinct points
        n_init: Independent restarts; the lowest-J run is kept
        space: Label of the clustering space, stored on the model

    Returns:
        ClusterModel whose membership matrix is consistent with its centers
    """
    try:
        points = require_finite(points, "points")
    except ValueError as e:
        raise ClusteringError(str(e)) from e
    if points.ndim != 2:
        raise ClusteringError("points must be an n x p matrix")
    n = points.shape[0]
    if c < 2:
        raise ClusteringError(f"cluster count must be >= 2, got {c}")
    if c > n:
        raise ClusteringError(f"cluster count {c} exceeds the {n} points")
    if not m > 1:
        raise ClusteringError(f"fuzzifier must be > 1, got {m}")

    distinct = np.unique(points, axis=0)
    if distinct.shape[0] == 1:
        raise ClusteringError("all points are identical")
    if distinct.shape[0] < c:
        raise ClusteringError(f"only {distinct.shape[0]} distinct points for {c} clusters")

    rng = np.random.default_rng(seed)
    best = None
    for _ in range(max(1, n_init)):
        init = distinct[rng.choice(distinct.shape[0], size=c, replace=False)]
        run = _single_run(points, init, m, tol, max_iter)
        if best is None or run[2] < best[2]:
            best = run

    centers, U, J, iterations, history = best
    logger.debug(f"FCM c={c}: J={J:.6f} after {iterations} iterations")
    return ClusterModel(
        centers=centers,
        fuzzifier=float(m),
        membership=U,
        objective=J,
        iterations=iterations,
        objective_history=history,
        space=space,
    )
