"""
Multinomial Naive Bayes

Feature weights (TF-IDF or counts) are summed per class and
additively smoothed by scikit-learn's MultinomialNB.

The code is licensed under the MIT license.
"""

import numpy as np
from sklearn.naive_bayes import MultinomialNB
from textpgm.core.exceptions import EmptyCorpus, NegativeFeature
from textpgm.interface.features import FeatureMatrix
from textpgm.interface.linear import NaiveBayesModel, TrainConfig


def train_multinomial_nb(
    matrix: FeatureMatrix, cfg: TrainConfig = TrainConfig()
) -> NaiveBayesModel:
    """
    ln P(t | c) = ln((W_tc + s) / (sum_t' W_t'c + s V)),
    priors from class frequencies

    Classes without training documents get a prior of 0.
    """

    if len(matrix) == 0:
        raise EmptyCorpus("Cannot train on an empty matrix")
    if matrix.data.nnz and matrix.data.data.min() < 0:
        raise NegativeFeature("Multinomial naive Bayes needs nonnegative weights")

    estimator = MultinomialNB(alpha=cfg.smoothing, force_alpha=True)

    with np.errstate(divide="ignore"):
        estimator.partial_fit(
            matrix.data, matrix.labels, classes=np.arange(len(matrix.classes))
        )

    return NaiveBayesModel(
        estimator.class_log_prior_,
        estimator.feature_log_prob_,
        matrix.classes,
        matrix.vocab.digest,
    )
