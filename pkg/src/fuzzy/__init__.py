"""Fuzzy inference package initialization."""

from .membership import TriangularMF, GaussianMF, mf_degree, mf_from_dict, ruspini_triples
from .system import (
    COVERAGE_EPS,
    InputPartition,
    TskRule,
    FuzzySystem,
    grid_antecedents,
    firing_strengths,
    evaluate,
    tsk_eval,
    ruspini_partition,
)

__all__ = [
    'TriangularMF',
    'GaussianMF',
    'mf_degree',
    'mf_from_dict',
    'ruspini_triples',
    'COVERAGE_EPS',
    'InputPartition',
    'TskRule',
    'FuzzySystem',
    'grid_antecedents',
    'firing_strengths',
    'evaluate',
    'tsk_eval',
    'ruspini_partition',
]
