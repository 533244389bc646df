"""
Structure Scores

Decomposable scores, all oriented so that larger is better.
Information-theoretic scores are negated description lengths.

The code is licensed under the MIT license.
"""

import math
from typing import Dict, Sequence, Tuple
import numpy as np
from scipy.special import gammaln
from textpgm.core.exceptions import InvalidAlpha
from textpgm.enumerations.metric import Metric
from textpgm.interface.network import CountTable, Dag, DiscreteData, ScoreConfig
from textpgm.bayesnet.counts import collect_counts


def _dirichlet(counts: np.ndarray, prior_cell: float) -> float:
    """
    Bayesian-Dirichlet family term with a constant per-cell prior
    """

    r = counts.shape[1]
    prior_row = prior_cell * r
    marginals = counts.sum(axis=1)

    return float(
        np.sum(gammaln(prior_row) - gammaln(prior_row + marginals))
        + np.sum(gammaln(prior_cell + counts) - gammaln(prior_cell))
    )


def log_likelihood(counts: np.ndarray) -> float:
    """
    Sum of N_ijk ln(N_ijk / N_ij), i.e. minus the entropy term H
    """

    marginals = counts.sum(axis=1, keepdims=True)
    observed = counts > 0
    ratio = np.divide(counts, marginals, out=np.ones(counts.shape), where=observed)

    return float(np.sum(counts[observed] * np.log(ratio[observed])))


def family_score(counts: CountTable, cfg: ScoreConfig) -> float:
    """
    One variable's additive contribution to the network score
    """

    metric = cfg.metric
    table = counts.counts
    r, q = counts.r, counts.q

    if metric.bayesian and not cfg.alpha > 0:
        raise InvalidAlpha("alpha must be positive")

    if metric == Metric.K2:
        return _dirichlet(table, 1.0)

    if metric == Metric.BAYES:
        return _dirichlet(table, cfg.alpha)

    if metric == Metric.BDEU:
        return _dirichlet(table, cfg.alpha / (r * q))

    fit = log_likelihood(table)
    parameters = (r - 1) * q

    if metric == Metric.ENTROPY:
        return fit

    if metric == Metric.MDL:
        total = counts.total
        return fit - (parameters / 2) * (math.log(total) if total > 0 else 0.0)

    return fit - parameters


class ScoreCache:

    """
    Memoized family scores over read-only data
    """

    def __init__(self, data: DiscreteData, cfg: ScoreConfig) -> None:

        self.data = data
        self.cfg = cfg
        self._scores: Dict[Tuple[int, Tuple[int, ...]], float] = {}

    def family(self, var: int, parents: Sequence[int]) -> float:
        """
        Score of one family, parents in any order
        """

        key = (var, tuple(sorted(parents)))
        if key not in self._scores:
            self._scores[key] = family_score(
                collect_counts(self.data, var, key[1]), self.cfg
            )

        return self._scores[key]

    def network(self, dag: Dag) -> float:
        """
        Score of a whole network
        """

        return self.cfg.structure_prior + sum(
            self.family(var, dag.parents[var]) for var in range(dag.n)
        )


def network_score(data: DiscreteData, dag: Dag, cfg: ScoreConfig) -> float:
    """
    Sum of family scores plus the (uniform) log structure prior
    """

    return cfg.structure_prior + sum(
        family_score(collect_counts(data, var, dag.parents[var]), cfg)
        for var in range(dag.n)
    )
