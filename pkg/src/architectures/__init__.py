"""Regressor architectures package initialization."""

from typing import Any, Dict

from .base import Regressor, RegressorKind
from .grid import GridRegressor, build_brute
from .cascade import CascadeSpec, CascadeRegressor, build_gft
from .clustered import (
    ClusteredGaussRegressor,
    ClusteredFcmRegressor,
    build_clustered_gauss,
    build_clustered_fcm,
)


def predict(regressor: Regressor, genes, x) -> float:
    """Scaled prediction of any regressor for one input vector."""
    return regressor.predict(genes, x)


def regressor_from_dict(data: Dict[str, Any]) -> Regressor:
    """Rebuild a regressor from ``Regressor.to_dict()`` output."""
    kind = RegressorKind(data['kind'])
    fallback = float(data.get('fallback', 0.5))
    if kind is RegressorKind.BRUTE:
        return GridRegressor(int(data['n_inputs']), int(data['mf_count']), int(data['order']), fallback)
    if kind is RegressorKind.GFT:
        return CascadeRegressor(
            int(data['n_inputs']), int(data['mf_count']), int(data['order']),
            input_order=data.get('input_order'), fallback=fallback,
        )
    if kind is RegressorKind.CLUSTERED_GAUSS:
        return ClusteredGaussRegressor(data['centers'], fallback=fallback)
    return ClusteredFcmRegressor(data['centers'], fuzzifier=float(data['fuzzifier']), fallback=fallback)


__all__ = [
    'Regressor',
    'RegressorKind',
    'GridRegressor',
    'CascadeSpec',
    'CascadeRegressor',
    'ClusteredGaussRegressor',
    'ClusteredFcmRegressor',
    'build_brute',
    'build_gft',
    'build_clustered_gauss',
    'build_clustered_fcm',
    'predict',
    'regressor_from_dict',
]
