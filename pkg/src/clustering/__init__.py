"""Fuzzy clustering package initialization."""

from .fcm import ClusterModel, fcm_fit, fcm_membership, memberships, objective, INPUTS, INPUTS_TARGET
from .elbow import ElbowCurve, elbow_curve
from .validity import partition_coefficient, xie_beni

__all__ = [
    'ClusterModel',
    'fcm_fit',
    'fcm_membership',
    'memberships',
    'objective',
    'INPUTS',
    'INPUTS_TARGET',
    'ElbowCurve',
    'elbow_curve',
    'partition_coefficient',
    'xie_beni',
]
