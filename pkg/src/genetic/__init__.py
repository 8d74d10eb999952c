"""Genome encoding and genetic algorithm package initialization."""

from .layout import Chromosome, GenomeLayout, Segment, SegmentSpec, param_count
from .codec import grid_layout, encode, decode, consequent_bounds
from .algorithm import GaConfig, GenerationStats, EvolutionResult, GeneticAlgorithm, evolve
from .objective import RegressionObjective, fitness, rmse

__all__ = [
    'Chromosome',
    'GenomeLayout',
    'Segment',
    'SegmentSpec',
    'param_count',
    'grid_layout',
    'encode',
    'decode',
    'consequent_bounds',
    'GaConfig',
    'GenerationStats',
    'EvolutionResult',
    'GeneticAlgorithm',
    'evolve',
    'RegressionObjective',
    'fitness',
    'rmse',
]
