"""
Hill Climbing Searches

The code is licensed under the MIT license.
"""

import logging
from typing import List, Optional
import numpy as np
from textpgm.interface.network import Dag, DiscreteData, ScoreConfig, naive_structure
from textpgm.bayesnet.moves import MIN_IMPROVEMENT, best_move, score_moves
from textpgm.bayesnet.scores import ScoreCache

logger = logging.getLogger(__name__)


def search_hill_climb(
    data: DiscreteData,
    cfg: ScoreConfig,
    max_steps: int = 1000,
    start: Optional[Dag] = None,
    trace: Optional[List[float]] = None,
    cache: Optional[ScoreCache] = None,
) -> Dag:
    """
    Apply the best improving add/delete/reverse move until none
    is left or the step budget is spent
    """

    if max_steps < 0:
        raise ValueError("max_steps must not be negative")

    cache = cache if cache is not None else ScoreCache(data, cfg)
    dag = start if start is not None else naive_structure(data.n_vars)
    dag.validate(cfg.max_parents)
    score = cache.network(dag)

    if trace is not None:
        trace.append(score)

    for step in range(max_steps):

        best = best_move(score_moves(cache, dag, cfg.max_parents))
        if best is None or best.delta <= MIN_IMPROVEMENT:
            break

        dag = best.move.apply(dag)
        score = cache.network(dag)
        logger.debug("step %d: %s -> %.6f", step, best.move, score)

        if trace is not None:
            trace.append(score)

    return dag


def random_structure(n: int, max_parents: int, rng: np.random.Generator) -> Dag:
    """
    Random acyclic classifier structure

    Features are visited in a random order; each takes up to
    max_parents feature parents among the ones visited before.
    """

    order = rng.permutation(np.arange(1, n))
    parents = [()] + [(0,)] * (n - 1)

    for position, var in enumerate(order):
        k = int(rng.integers(0, min(max_parents, position) + 1))
        chosen = rng.choice(order[:position], size=k, replace=False) if k else []
        parents[var] = (0,) + tuple(int(p) for p in chosen)

    return Dag(n, parents)


def search_repeated_hill_climb(
    data: DiscreteData,
    cfg: ScoreConfig,
    restarts: int = 10,
    seed: int = 0,
    max_steps: int = 1000,
    empty_start: bool = True,
    trace: Optional[List[float]] = None,
) -> Dag:
    """
    Hill climb from several starting structures and keep the best
    local optimum

    The first run starts from the bare classifier structure when
    empty_start is set, all other runs from seeded random structures.
    The score of every local optimum is appended to trace.
    """

    if restarts < 1:
        raise ValueError("restarts must be at least 1")

    rng = np.random.default_rng(seed)
    cache = ScoreCache(data, cfg)
    best, best_score = None, -np.inf

    for run in range(restarts):

        if run == 0 and empty_start:
            start = naive_structure(data.n_vars)
        else:
            start = random_structure(data.n_vars, cfg.max_parents, rng)

        dag = search_hill_climb(data, cfg, max_steps, start, cache=cache)
        score = cache.network(dag)
        logger.debug("restart %d: local optimum %.6f", run, score)

        if trace is not None:
            trace.append(score)

        if score > best_score:
            best, best_score = dag, score

    return best
