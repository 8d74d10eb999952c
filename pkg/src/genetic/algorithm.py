"""Crossover-based genetic algorithm over real-valued gene vectors."""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, List, Optional

import numpy as np
from pydantic import BaseModel, Field, model_validator

from src.genetic.layout import Chromosome, GenomeLayout
from src.utils.logger import get_logger

logger = get_logger(__name__)

Objective = Callable[[np.ndarray], float]


class GaConfig(BaseModel):
    """GA hyper-parameters. ``mutation_rate`` of None means 1 / genome length."""
    population_size: int = Field(default=50, ge=2)
    generations: int = Field(default=100, ge=1)
    crossover_rate: float = Field(default=0.9, ge=0, le=1)
    mutation_rate: Optional[float] = Field(default=None, ge=0, le=1)
    mutation_sigma: float = Field(default=0.1, gt=0)
    tournament_size: int = Field(default=3, ge=1)
    elite_count: int = Field(default=1, ge=1)
    init_jitter: float = Field(default=0.02, ge=0)
    seed: int = 42

    @model_validator(mode='after')
    def _elites_fit(self) -> "GaConfig":
        if self.elite_count >= self.population_size:
            raise ValueError("elite_count must be smaller than population_size")
        return self


@dataclass(frozen=True)
class GenerationStats:
    generation: int
    best: float
    mean: float
    worst: float


@dataclass(frozen=True)
class EvolutionResult:
    best: Chromosome
    history: List[GenerationStats]


def tournament_selection(
    population: np.ndarray,
    fitnesses: np.ndarray,
    tournament_size: int,
    rng: np.random.Generator,
) -> np.ndarray:
    idxs = rng.integers(0, len(population), size=tournament_size)
    best_idx = idxs[0]
    for i in idxs[1:]:
        if fitnesses[i] > fitnesses[best_idx]:
            best_idx = i
    return population[best_idx]


def uniform_crossover(
    p1: np.ndarray,
    p2: np.ndarray,
    rate: float,
    rng: np.random.Generator,
) -> np.ndarray:
    # both draws happen unconditionally so the stream length is fixed
    do_cross = rng.random() < rate
    mask = rng.random(p1.shape[0]) < 0.5
    if not do_cross:
        return p1.copy()
    return np.where(mask, p1, p2)


def gaussian_mutation(
    genes: np.ndarray,
    layout: GenomeLayout,
    rate: float,
    sigma: float,
    rng: np.random.Generator,
) -> np.ndarray:
    """Per-gene Gaussian step with std ``sigma`` times the gene's bound width."""
    mask = rng.random(genes.shape[0]) < rate
    steps = rng.normal(0.0, 1.0, genes.shape[0]) * sigma * (layout.upper - layout.lower)
    return np.where(mask, genes + steps, genes)


class GeneticAlgorithm:
    """Generational GA with tournament selection, uniform crossover and elitism.

    All random draws for a generation come from that generation's own stream
    (spawned from the config seed) and happen before any fitness call, so the
    result does not depend on the number of evaluation threads.
    """

    def __init__(self, config: GaConfig, threads: int = 1):
        self.config = config
        self.threads = max(1, int(threads))

    def _evaluate(self, objective: Objective, genomes: np.ndarray, executor) -> np.ndarray:
        if executor is None:
            values = [objective(g) for g in genomes]
        else:
            values = list(executor.map(objective, genomes))
        values = np.asarray(values, dtype=float)
        return np.where(np.isfinite(values), values, -np.inf)

    def _breed(self, layout, population, fitness, n_children, rng) -> np.ndarray:
        cfg = self.config
        rate = cfg.mutation_rate if cfg.mutation_rate is not None else 1.0 / layout.total_length
        children = np.empty((n_children, layout.total_length))
        for i in range(n_children):
            p1 = tournament_selection(population, fitness, cfg.tournament_size, rng)
            p2 = tournament_selection(population, fitness, cfg.tournament_size, rng)
            child = uniform_crossover(p1, p2, cfg.crossover_rate, rng)
            child = gaussian_mutation(child, layout, rate, cfg.mutation_sigma, rng)
            children[i] = layout.repair(child)
        return children

    def evolve(
        self,
        layout: GenomeLayout,
        objective: Objective,
        on_generation: Optional[Callable[[GenerationStats], None]] = None,
    ) -> EvolutionResult:
        """
        Run the GA.

        Args:
            layout: Gene layout (bounds, repair, initialization)
            objective: Fitness of a gene vector, higher is better
            on_generation: Called with each generation's stats

        Returns:
            Best chromosome and one ``GenerationStats`` per generation
        """
        cfg = self.config
        streams = np.random.SeedSequence(cfg.seed).spawn(cfg.generations + 1)
        init_rng = np.random.default_rng(streams[0])
        population = np.stack([layout.initialize(init_rng, cfg.init_jitter) for _ in range(cfg.population_size)])

        logger.info(
            f"Evolving {layout.total_length} genes: population {cfg.population_size}, "
            f"{cfg.generations} generations, {self.threads} thread(s)"
        )

        history: List[GenerationStats] = []
        executor = ThreadPoolExecutor(max_workers=self.threads) if self.threads > 1 else None
        try:
            fitness = self._evaluate(objective, population, executor)
            for generation in range(1, cfg.generations + 1):
                rng = np.random.default_rng(streams[generation])
                ranked = np.argsort(-fitness, kind='stable')
                elites = ranked[:cfg.elite_count]
                children = self._breed(layout, population, fitness, cfg.population_size - cfg.elite_count, rng)

                population = np.vstack([population[elites], children])
                fitness = np.concatenate([fitness[elites], self._evaluate(objective, children, executor)])

                stats = GenerationStats(
                    generation=generation,
                    best=float(fitness.max()),
                    mean=float(fitness[np.isfinite(fitness)].mean()) if np.isfinite(fitness).any() else float('-inf'),
                    worst=float(fitness.min()),
                )
                history.append(stats)
                logger.debug(f"Generation {generation}: best={stats.best:.6f} mean={stats.mean:.6f}")
                if on_generation is not None:
                    on_generation(stats)
        finally:
            if executor is not None:
                executor.shutdown()

        best_idx = int(np.argmax(fitness))
        best = Chromosome(genes=population[best_idx].copy(), fitness=float(fitness[best_idx]))
        logger.info(f"✓ Evolution finished: best fitness {best.fitness:.6f}")
        return EvolutionResult(best=best, history=history)


def evolve(
    layout: GenomeLayout,
    objective: Objective,
    config: GaConfig,
    threads: int = 1,
    on_generation: Optional[Callable[[GenerationStats], None]] = None,
) -> EvolutionResult:
    """Functional entry point for ``GeneticAlgorithm.evolve``."""
    return GeneticAlgorithm(config, threads=threads).evolve(layout, objective, on_generation)
