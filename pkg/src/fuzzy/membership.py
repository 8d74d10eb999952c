"""Membership function primitives."""

from dataclasses import dataclass
from typing import Any, Dict, Union

import numpy as np

from src.utils.validators import require_finite


@dataclass(frozen=True)
class TriangularMF:
    """Triangle with feet ``a``, ``c`` and peak ``b`` (a <= b <= c).

    A foot equal to the peak gives a shoulder: degree 1 at the peak, falling
    linearly on the other side only.
    """
    a: float
    b: float
    c: float

    def __post_init__(self):
        if not self.a <= self.b <= self.c:
            raise ValueError(f"triangular MF needs a <= b <= c, got ({self.a}, {self.b}, {self.c})")

    @property
    def peak(self) -> float:
        return self.b

    def degree(self, x):
        x = require_finite(x, "x")
        a, b, c = self.a, self.b, self.c
        rising = np.divide(x - a, b - a, out=np.zeros_like(x), where=(x >= a) & (x < b))
        falling = np.divide(c - x, c - b, out=np.zeros_like(x), where=(x > b) & (x <= c))
        result = np.where(x == b, 1.0, rising + falling)
        return float(result) if result.ndim == 0 else result

    def to_dict(self) -> Dict[str, Any]:
        return {'kind': 'triangular', 'params': [self.a, self.b, self.c]}


@dataclass(frozen=True)
class GaussianMF:
    """Gaussian bell ``exp(-(x - mu)^2 / (2 sigma^2))``."""
    mu: float
    sigma: float

    def __post_init__(self):
        if not self.sigma > 0:
            raise ValueError(f"gaussian MF needs sigma > 0, got {self.sigma}")

    @property
    def peak(self) -> float:
        return self.mu

    def degree(self, x):
        x = require_finite(x, "x")
        result = np.exp(-((x - self.mu) ** 2) / (2.0 * self.sigma ** 2))
        return float(result) if result.ndim == 0 else result

    def to_dict(self) -> Dict[str, Any]:
        return {'kind': 'gaussian', 'params': [self.mu, self.sigma]}


MembershipFunction = Union[TriangularMF, GaussianMF]


def mf_degree(mf: MembershipFunction, x):
    """Degree in [0, 1] of scaled value(s) ``x`` in ``mf``."""
    return mf.degree(x)


def mf_from_dict(data: Dict[str, Any]) -> MembershipFunction:
    kind = data.get('kind')
    params = [float(p) for p in data['params']]
    if kind == 'triangular':
        return TriangularMF(*params)
    if kind == 'gaussian':
        return GaussianMF(*params)
    raise ValueError(f"unknown membership function kind: {kind!r}")


def ruspini_triples(m: int) -> np.ndarray:
    """
    (a, b, c) rows for ``m`` triangles with peaks evenly spaced on [0, 1].

    Each foot sits on the neighbouring peak and the outer feet on the edge
    peaks, so degrees sum to 1 everywhere on [0, 1].
    """
    if m < 2:
        raise ValueError("a Ruspini partition needs at least 2 membership functions")
    peaks = np.linspace(0.0, 1.0, m)
    left = np.concatenate(([peaks[0]], peaks[:-1]))
    right = np.concatenate((peaks[1:], [peaks[-1]]))
    return np.column_stack((left, peaks, right))
