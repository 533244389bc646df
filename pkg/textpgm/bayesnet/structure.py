"""
Structure Learning Dispatch

The code is licensed under the MIT license.
"""

import logging
from typing import List, Optional
from textpgm.enumerations.search import Search
from textpgm.interface.network import Dag, DiscreteData, ScoreConfig, naive_structure
from textpgm.bayesnet.hillclimb import search_hill_climb, search_repeated_hill_climb
from textpgm.bayesnet.k2 import search_k2
from textpgm.bayesnet.lagd import search_lagd
from textpgm.bayesnet.tabu import search_tabu
from textpgm.bayesnet.tan import learn_tan

logger = logging.getLogger(__name__)


def learn_structure(
    data: DiscreteData,
    cfg: ScoreConfig = ScoreConfig(),
    search: Search = Search.TAN,
    trace: Optional[List[float]] = None,
    **params,
) -> Dag:
    """
    Run one structure search by name

    Extra keyword arguments go to the search function
    (max_steps, restarts, seed, look_ahead, good_ops,
    tabu_length, order).
    """

    search = Search(search)
    logger.info("Learning structure over %d variables with %s", data.n_vars, search.value)

    if search == Search.NAIVE:
        return naive_structure(data.n_vars)
    if search == Search.TAN:
        return learn_tan(data, cfg)
    if search == Search.K2:
        return search_k2(data, cfg, trace=trace, **params)
    if search == Search.HILL_CLIMB:
        return search_hill_climb(data, cfg, trace=trace, **params)
    if search == Search.REPEATED_HILL_CLIMB:
        return search_repeated_hill_climb(data, cfg, trace=trace, **params)
    if search == Search.LAGD:
        return search_lagd(data, cfg, trace=trace, **params)

    return search_tabu(data, cfg, trace=trace, **params)
