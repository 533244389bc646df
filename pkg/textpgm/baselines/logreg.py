"""
Logistic Regression

Sigmoid for two classes, softmax otherwise; L2-regularized mean
negative log-likelihood.

The code is licensed under the MIT license.
"""

from typing import Tuple
import numpy as np
from scipy.sparse import csr_matrix
from scipy.special import expit, logsumexp, softmax
from textpgm.core.exceptions import SingleClass
from textpgm.enumerations.model import LinearKind
from textpgm.interface.features import FeatureMatrix
from textpgm.interface.linear import LinearModel, TrainConfig
from textpgm.baselines.sgd import descend


def _data_term(
    weights: np.ndarray, bias: np.ndarray, data: csr_matrix, targets: np.ndarray
) -> Tuple[float, np.ndarray, np.ndarray]:
    """
    Mean NLL and its gradients, without the L2 term
    """

    n = data.shape[0]
    margins = np.asarray(data @ weights.T) + bias

    if weights.shape[0] == 1:
        z = margins[:, 0]
        loss = float(np.mean(np.logaddexp(0.0, z) - targets * z))
        residual = (expit(z) - targets)[:, np.newaxis]
    else:
        loss = float(
            np.mean(logsumexp(margins, axis=1) - margins[np.arange(n), targets])
        )
        residual = softmax(margins, axis=1)
        residual[np.arange(n), targets] -= 1.0

    grad_w = np.asarray(data.T @ residual).T / n
    grad_b = residual.sum(axis=0) / n

    return loss, grad_w, grad_b


def logistic_loss_and_gradient(
    weights: np.ndarray,
    bias: np.ndarray,
    data: csr_matrix,
    targets: np.ndarray,
    l2_lambda: float = 0.0,
) -> Tuple[float, np.ndarray, np.ndarray]:
    """
    Regularized loss and gradients with respect to weights and bias

    A single weight row means binary targets in {0, 1};
    otherwise targets are class indices.
    """

    weights = np.atleast_2d(weights)
    loss, grad_w, grad_b = _data_term(weights, np.atleast_1d(bias), csr_matrix(data), targets)

    return (
        loss + 0.5 * l2_lambda * float(np.sum(weights**2)),
        grad_w + l2_lambda * weights,
        grad_b,
    )


def train_logreg(matrix: FeatureMatrix, cfg: TrainConfig = TrainConfig()) -> LinearModel:
    """
    Fit by seeded mini-batch gradient descent
    """

    k = len(matrix.classes)
    if k < 2:
        raise SingleClass("Logistic regression needs at least two classes")

    shape = (1 if k == 2 else k, matrix.n_columns)

    def gradient(weights, bias, data, targets):
        _, grad_w, grad_b = _data_term(weights, bias, data, targets)
        return grad_w, grad_b

    def objective(weights, bias, data, targets):
        return logistic_loss_and_gradient(weights, bias, data, targets, cfg.l2_lambda)[0]

    weights, bias, losses = descend(
        matrix.data,
        matrix.labels,
        gradient,
        objective,
        shape,
        cfg,
        np.random.default_rng(cfg.seed),
    )

    return LinearModel(
        LinearKind.LOGISTIC, weights, bias, matrix.classes, matrix.vocab.digest, losses
    )
