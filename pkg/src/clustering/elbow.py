"""Elbow analysis over a range of cluster counts."""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

import numpy as np
import pandas as pd

from src.clustering.fcm import ClusterModel, fcm_fit
from src.clustering.validity import partition_coefficient, xie_beni
from src.utils.errors import ClusteringError
from src.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class ElbowCurve:
    """(c, final J) pairs with strictly increasing c."""
    points: Tuple[Tuple[int, float], ...]
    validity: Dict[int, Tuple[float, float]] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        cs = [c for c, _ in self.points]
        if any(b <= a for a, b in zip(cs, cs[1:])):
            raise ValueError("elbow curve cluster counts must be strictly increasing")

    @property
    def c_values(self) -> List[int]:
        return [c for c, _ in self.points]

    @property
    def objectives(self) -> List[float]:
        return [j for _, j in self.points]

    def knee(self) -> int:
        """
        Cluster count farthest from the chord joining the curve endpoints,
        measured after normalizing both axes to [0, 1].
        """
        c = np.asarray(self.c_values, dtype=float)
        J = np.asarray(self.objectives, dtype=float)
        if len(c) < 3 or J.max() == J.min():
            return int(c[0])
        x = (c - c[0]) / (c[-1] - c[0])
        y = (J - J.min()) / (J.max() - J.min())
        x0, y0, x1, y1 = x[0], y[0], x[-1], y[-1]
        distance = np.abs((y1 - y0) * x - (x1 - x0) * y + x1 * y0 - y1 * x0) / np.hypot(y1 - y0, x1 - x0)
        return int(c[int(np.argmax(distance))])

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({'c': self.c_values, 'J': self.objectives})

    def validity_frame(self) -> pd.DataFrame:
        rows = [
            {'c': c, 'J': j, 'partition_coefficient': self.validity[c][0], 'xie_beni': self.validity[c][1]}
            for c, j in self.points if c in self.validity
        ]
        return pd.DataFrame(rows, columns=['c', 'J', 'partition_coefficient', 'xie_beni'])


def elbow_curve(
    points,
    c_min: int,
    c_max: int,
    m: float = 2.0,
    tol: float = 1e-6,
    max_iter: int = 300,
    seed: int = 42,
    n_init: int = 1,
    threads: int = 1,
) -> ElbowCurve:
    """
    One FCM fit per cluster count in ``c_min..c_max`` (inclusive), each with a
    fresh initialization drawn from ``seed``.
    """
    if c_min < 2 or c_max < c_min:
        raise ClusteringError(f"invalid cluster range {c_min}..{c_max}")
    points = np.asarray(points, dtype=float)

    def fit(c: int) -> ClusterModel:
        return fcm_fit(points, c, m=m, tol=tol, max_iter=max_iter, seed=seed, n_init=n_init)

    counts = list(range(c_min, c_max + 1))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            models = list(executor.map(fit, counts))
    else:
        models = [fit(c) for c in counts]

    curve = ElbowCurve(
        points=tuple((c, model.objective) for c, model in zip(counts, models)),
        validity={
            c: (partition_coefficient(model), xie_beni(points, model))
            for c, model in zip(counts, models)
        },
    )
    logger.info(f"✓ Elbow curve over c={c_min}..{c_max}, knee at c={curve.knee()}")
    return curve
