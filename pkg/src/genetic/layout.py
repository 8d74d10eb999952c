"""Flat gene-vector layouts for fuzzy models."""

from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from src.fuzzy.membership import ruspini_triples
from src.utils.errors import GenomeError

REAL = 'real'
TRIANGULAR = 'triangular'


@dataclass(frozen=True, eq=False)
class Segment:
    """Contiguous run of genes with per-gene bounds.

    ``triangular`` segments hold (a, b, c) triples grouped ``group`` MFs per
    input partition and are sort-repaired; ``real`` segments are only clamped.
    """
    name: str
    offset: int
    length: int
    lower: np.ndarray
    upper: np.ndarray
    kind: str = REAL
    group: int = 1

    @property
    def stop(self) -> int:
        return self.offset + self.length


@dataclass(frozen=True)
class SegmentSpec:
    name: str
    length: int
    lower: Any
    upper: Any
    kind: str = REAL
    group: int = 1


@dataclass(frozen=True)
class Chromosome:
    """Gene vector plus its fitness (None until evaluated)."""
    genes: np.ndarray = field(compare=False)
    fitness: Optional[float] = None


class GenomeLayout:
    """Ordered, contiguous, non-overlapping segments."""

    def __init__(self, segments: Sequence[Segment]):
        expected = 0
        for seg in segments:
            if seg.offset != expected:
                raise GenomeError(f"segment {seg.name!r} is not contiguous (offset {seg.offset}, expected {expected})")
            if seg.lower.shape != (seg.length,) or seg.upper.shape != (seg.length,):
                raise GenomeError(f"segment {seg.name!r} bounds do not match its length")
            if seg.kind == TRIANGULAR and seg.length % (3 * seg.group):
                raise GenomeError(f"segment {seg.name!r} is not a whole number of partitions")
            expected = seg.stop
        self.segments: Tuple[Segment, ...] = tuple(segments)
        self.total_length = expected
        self.lower = np.concatenate([s.lower for s in segments]) if segments else np.zeros(0)
        self.upper = np.concatenate([s.upper for s in segments]) if segments else np.zeros(0)

    @classmethod
    def build(cls, specs: Iterable[SegmentSpec]) -> "GenomeLayout":
        segments = []
        offset = 0
        for spec in specs:
            lower = np.broadcast_to(np.asarray(spec.lower, dtype=float), (spec.length,)).copy()
            upper = np.broadcast_to(np.asarray(spec.upper, dtype=float), (spec.length,)).copy()
            segments.append(Segment(spec.name, offset, spec.length, lower, upper, spec.kind, spec.group))
            offset += spec.length
        return cls(segments)

    @classmethod
    def concat(cls, layouts: Sequence["GenomeLayout"], prefixes: Sequence[str]) -> "GenomeLayout":
        """Chain layouts end to end, renaming segments with the given prefixes."""
        specs = [
            SegmentSpec(f"{prefix}{seg.name}", seg.length, seg.lower, seg.upper, seg.kind, seg.group)
            for layout, prefix in zip(layouts, prefixes)
            for seg in layout.segments
        ]
        return cls.build(specs)

    def __len__(self) -> int:
        return self.total_length

    def segment(self, name: str) -> Segment:
        for seg in self.segments:
            if seg.name == name:
                return seg
        raise KeyError(name)

    def slice(self, genes: np.ndarray, name: str) -> np.ndarray:
        seg = self.segment(name)
        return genes[seg.offset:seg.stop]

    def check(self, genes) -> np.ndarray:
        """Return genes as a float vector of the right length."""
        genes = np.asarray(genes, dtype=float)
        if genes.shape != (self.total_length,):
            raise GenomeError(f"expected {self.total_length} genes, got {genes.size}")
        return genes

    def repair(self, genes) -> np.ndarray:
        """
        Clamp to bounds and sort-repair triangular segments.

        Each (a, b, c) triple is sorted, then the triples of one partition are
        ordered by peak, so every repaired vector decodes to a valid model.
        """
        genes = np.clip(self.check(genes), self.lower, self.upper)
        for seg in self.segments:
            if seg.kind != TRIANGULAR:
                continue
            triples = np.sort(genes[seg.offset:seg.stop].reshape(-1, seg.group, 3), axis=2)
            order = np.argsort(triples[:, :, 1], axis=1, kind='stable')
            triples = np.take_along_axis(triples, order[:, :, None], axis=1)
            genes[seg.offset:seg.stop] = triples.ravel()
        return genes

    def initialize(self, rng: np.random.Generator, jitter: float = 0.0) -> np.ndarray:
        """
        Random starting genes.

        Triangular segments start from the uniform Ruspini partition plus
        Gaussian jitter; real segments are uniform within bounds. The outer
        shoulders of every partition stay on the domain edges, so both edges
        keep degree 1 and every point of the domain is covered.
        """
        genes = np.empty(self.total_length)
        for seg in self.segments:
            if seg.kind == TRIANGULAR:
                partitions = seg.length // (3 * seg.group)
                base = np.tile(ruspini_triples(seg.group).ravel(), partitions)
                if jitter > 0:
                    noise = rng.normal(0.0, jitter, (partitions, seg.group, 3))
                    noise[:, 0, :2] = 0.0
                    noise[:, -1, 1:] = 0.0
                    base = base + noise.ravel()
                genes[seg.offset:seg.stop] = base
            else:
                genes[seg.offset:seg.stop] = rng.uniform(seg.lower, seg.upper)
        return self.repair(genes)

    def describe(self) -> List[Dict[str, Any]]:
        return [
            {'name': s.name, 'offset': s.offset, 'length': s.length, 'kind': s.kind}
            for s in self.segments
        ]


def param_count(
    kind: str,
    d: int,
    m: int = 5,
    order: int = 1,
    c: int = 15,
) -> int:
    """
    Trainable parameter count of an architecture.

    Args:
        kind: 'brute' (full grid), 'gft', 'clustered-gauss' or 'clustered-fcm'
        d: Number of inputs
        m: Triangular MFs per input (grid and cascade)
        order: TSK order (grid and cascade)
        c: Cluster count (clustered variants)
    """
    def per_rule(inputs: int) -> int:
        return inputs + 1 if order == 1 else 1

    if kind == 'brute':
        return m ** d * per_rule(d) + d * m * 3
    if kind == 'gft':
        return (d - 1) * (m ** 2 * per_rule(2) + 2 * m * 3)
    if kind == 'clustered-gauss':
        return c + c * (d + 1)
    if kind == 'clustered-fcm':
        return c * (d + 1)
    raise ValueError(f"unknown architecture kind: {kind!r}")
