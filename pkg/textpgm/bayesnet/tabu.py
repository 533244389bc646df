"""
Tabu Search

The code is licensed under the MIT license.
"""

from collections import deque
from typing import List, Optional
from textpgm.interface.network import Dag, DiscreteData, ScoreConfig, naive_structure
from textpgm.bayesnet.moves import best_move, score_moves
from textpgm.bayesnet.scores import ScoreCache


def search_tabu(
    data: DiscreteData,
    cfg: ScoreConfig,
    tabu_length: int = 5,
    max_steps: int = 100,
    trace: Optional[List[float]] = None,
    moves: Optional[list] = None,
) -> Dag:
    """
    Take the best non-tabu move at every step, improving or not

    The inverse of each taken move stays tabu for tabu_length
    steps. The best structure seen is returned; taken moves are
    appended to moves when given.
    """

    if tabu_length < 1:
        raise ValueError("tabu_length must be at least 1")

    cache = ScoreCache(data, cfg)
    dag = naive_structure(data.n_vars)
    score = cache.network(dag)
    best, best_score = dag, score
    tabu = deque(maxlen=tabu_length)

    if trace is not None:
        trace.append(score)

    for _ in range(max_steps):

        allowed = [
            candidate
            for candidate in score_moves(cache, dag, cfg.max_parents)
            if candidate.move not in tabu
        ]
        chosen = best_move(allowed)
        if chosen is None:
            break

        dag = chosen.move.apply(dag)
        tabu.append(chosen.move.inverse())
        score = cache.network(dag)

        if trace is not None:
            trace.append(score)
        if moves is not None:
            moves.append(chosen.move)

        if score > best_score:
            best, best_score = dag, score

    return best
