"""
Look-Ahead Hill Climbing

The code is licensed under the MIT license.
"""

from typing import List, Optional, Tuple
import numpy as np
from textpgm.interface.network import Dag, DiscreteData, ScoreConfig, naive_structure
from textpgm.bayesnet.moves import (
    MIN_IMPROVEMENT,
    Move,
    ranked_moves,
    score_moves,
)
from textpgm.bayesnet.scores import ScoreCache


def _look_ahead(
    cache: ScoreCache, dag: Dag, depth: int, good_ops: int, max_parents: int
) -> Tuple[float, Optional[Move]]:
    """
    Best total delta of a sequence of at most depth moves, each chosen
    among the good_ops best single moves, and its first move
    """

    best_total, best_first = -np.inf, None

    for candidate in ranked_moves(score_moves(cache, dag, max_parents))[:good_ops]:
        total = candidate.delta
        if depth > 1:
            rest, _ = _look_ahead(
                cache, candidate.move.apply(dag), depth - 1, good_ops, max_parents
            )
            total += max(rest, 0.0)
        if total > best_total:
            best_total, best_first = total, candidate.move

    return best_total, best_first


def search_lagd(
    data: DiscreteData,
    cfg: ScoreConfig,
    look_ahead: int = 2,
    good_ops: int = 5,
    max_steps: int = 1000,
    trace: Optional[List[float]] = None,
) -> Dag:
    """
    Hill climbing that ranks moves by the best short sequence they
    start; the first move of the best sequence is applied
    """

    if look_ahead < 1 or good_ops < 1:
        raise ValueError("look_ahead and good_ops must be at least 1")

    cache = ScoreCache(data, cfg)
    dag = naive_structure(data.n_vars)
    score = cache.network(dag)
    best, best_score = dag, score

    if trace is not None:
        trace.append(score)

    for _ in range(max_steps):

        total, first = _look_ahead(cache, dag, look_ahead, good_ops, cfg.max_parents)
        if first is None or total <= MIN_IMPROVEMENT:
            break

        dag = first.apply(dag)
        score = cache.network(dag)

        if trace is not None:
            trace.append(score)

        if score > best_score:
            best, best_score = dag, score

    return best
