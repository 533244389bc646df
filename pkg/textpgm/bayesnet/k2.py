"""
K2 Search

The code is licensed under the MIT license.
"""

from typing import List, Optional, Sequence
from textpgm.interface.network import Dag, DiscreteData, ScoreConfig
from textpgm.bayesnet.moves import MIN_IMPROVEMENT
from textpgm.bayesnet.scores import ScoreCache


def search_k2(
    data: DiscreteData,
    cfg: ScoreConfig,
    order: Optional[Sequence[int]] = None,
    trace: Optional[List[float]] = None,
) -> Dag:
    """
    Greedy parent addition restricted by a variable order

    Each feature takes, one at a time, the predecessor that raises
    its family score the most, until no predecessor improves it or
    it has max_parents feature parents. The class stays a parent of
    every feature and is not part of the order.
    """

    n = data.n_vars
    order = list(range(1, n)) if order is None else [int(v) for v in order]

    if sorted(order) != list(range(1, n)):
        raise ValueError("order must be a permutation of the feature variables")

    cache = ScoreCache(data, cfg)
    parents = [()] + [(0,)] * (n - 1)

    if trace is not None:
        trace.append(cache.network(Dag(n, parents)))

    for position, var in enumerate(order):

        current = cache.family(var, parents[var])
        predecessors = sorted(order[:position])

        while len(parents[var]) - 1 < cfg.max_parents:

            best_score, best_parent = None, None
            for candidate in predecessors:
                if candidate in parents[var]:
                    continue
                score = cache.family(var, parents[var] + (candidate,))
                if best_score is None or score > best_score:
                    best_score, best_parent = score, candidate

            if best_parent is None or best_score - current <= MIN_IMPROVEMENT:
                break

            parents[var] = tuple(sorted(parents[var] + (best_parent,)))
            current = best_score

            if trace is not None:
                trace.append(cache.network(Dag(n, parents)))

    return Dag(n, parents)
