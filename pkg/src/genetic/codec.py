"""Encoding of grid TSK systems as flat gene vectors."""

import numpy as np

from src.fuzzy.system import FuzzySystem, InputPartition
from src.genetic.layout import REAL, TRIANGULAR, Chromosome, GenomeLayout, SegmentSpec
from src.utils.errors import GenomeError

MF_BOUNDS = (0.0, 1.0)
CONSTANT_BOUNDS = (0.0, 1.0)
SLOPE_BOUNDS = (-2.0, 2.0)
INTERCEPT_BOUNDS = (-1.0, 2.0)


def consequent_bounds(n_rules: int, n_inputs: int, order: int):
    """Per-gene (lower, upper) for ``n_rules`` consequents laid out rule by rule."""
    if order == 0:
        return np.full(n_rules, CONSTANT_BOUNDS[0]), np.full(n_rules, CONSTANT_BOUNDS[1])
    lower = np.tile(np.append(np.full(n_inputs, SLOPE_BOUNDS[0]), INTERCEPT_BOUNDS[0]), n_rules)
    upper = np.tile(np.append(np.full(n_inputs, SLOPE_BOUNDS[1]), INTERCEPT_BOUNDS[1]), n_rules)
    return lower, upper


def grid_layout(n_inputs: int, mf_count: int, order: int) -> GenomeLayout:
    """MF triples for every input, then one consequent block per grid rule."""
    n_rules = mf_count ** n_inputs
    k = n_inputs + 1 if order == 1 else 1
    lower, upper = consequent_bounds(n_rules, n_inputs, order)
    return GenomeLayout.build([
        SegmentSpec('mf', n_inputs * mf_count * 3, *MF_BOUNDS, kind=TRIANGULAR, group=mf_count),
        SegmentSpec('rules', n_rules * k, lower, upper, kind=REAL),
    ])


def _grid_shape(layout: GenomeLayout):
    mf_seg = next((s for s in layout.segments if s.kind == TRIANGULAR), None)
    rule_seg = next((s for s in layout.segments if s.kind == REAL), None)
    if mf_seg is None or rule_seg is None:
        raise GenomeError("layout is not a grid TSK layout")
    m = mf_seg.group
    d = mf_seg.length // (3 * m)
    n_rules = m ** d
    k = rule_seg.length // n_rules
    if k * n_rules != rule_seg.length or k not in (1, d + 1):
        raise GenomeError("rule segment does not match the MF segment")
    return mf_seg, rule_seg, d, m, (0 if k == 1 else 1)


def encode(system: FuzzySystem) -> Chromosome:
    """Gene vector of a grid system (MF triples, then consequents rule by rule)."""
    triples = []
    for partition in system.partitions:
        for mf in partition.mfs:
            if not hasattr(mf, 'c'):
                raise GenomeError("only triangular partitions can be encoded")
            triples.extend((mf.a, mf.b, mf.c))
    genes = np.concatenate([np.asarray(triples, dtype=float), system.consequents.ravel()])
    return Chromosome(genes=genes)


def decode(layout: GenomeLayout, genes, fallback: float = 0.5) -> FuzzySystem:
    """
    Grid system from genes; triples are sort-repaired first, so any vector of
    the right length decodes.
    """
    mf_seg, rule_seg, d, m, order = _grid_shape(layout)
    genes = layout.repair(genes)
    triples = genes[mf_seg.offset:mf_seg.stop].reshape(d, m, 3)
    partitions = [InputPartition.from_triples(t) for t in triples]
    consequents = genes[rule_seg.offset:rule_seg.stop].reshape(m ** d, -1)
    return FuzzySystem.grid(partitions, consequents, order, fallback)
