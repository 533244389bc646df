"""
Scoring Metric Enumeration

The code is licensed under the MIT license.
"""

from enum import Enum


class Metric(Enum):
    """
    The structure scoring functions
    """

    BAYES = "bayes"
    BDEU = "bdeu"
    K2 = "k2"
    MDL = "mdl"
    ENTROPY = "entropy"
    AIC = "aic"

    @property
    def bayesian(self) -> bool:
        """
        Is the metric a Bayesian-Dirichlet score?
        """

        return self in (Metric.BAYES, Metric.BDEU, Metric.K2)
