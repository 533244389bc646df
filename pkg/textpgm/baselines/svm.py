"""
Linear Support Vector Machine

L2-regularized hinge loss minimized by subgradient descent with
averaged iterates. More than two classes are handled one-vs-rest.

The code is licensed under the MIT license.
"""

from typing import Tuple
import numpy as np
from scipy.sparse import csr_matrix
from textpgm.core.exceptions import SingleClass
from textpgm.enumerations.model import LinearKind
from textpgm.interface.features import FeatureMatrix
from textpgm.interface.linear import LinearModel, TrainConfig
from textpgm.baselines.sgd import descend


def svm_objective(
    weights: np.ndarray,
    bias: np.ndarray,
    data: csr_matrix,
    signs: np.ndarray,
    l2_lambda: float = 0.0,
) -> float:
    """
    lambda/2 ||w||^2 + mean(max(0, 1 - y (w.x + b))), y in {-1, +1}
    """

    weights = np.atleast_2d(weights)
    margins = np.asarray(csr_matrix(data) @ weights.T)[:, 0] + np.atleast_1d(bias)[0]

    return float(
        0.5 * l2_lambda * np.sum(weights**2)
        + np.mean(np.maximum(0.0, 1.0 - signs * margins))
    )


def hinge_subgradient(
    weights: np.ndarray, bias: np.ndarray, data: csr_matrix, signs: np.ndarray
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Subgradient of the mean hinge loss over a batch
    """

    margins = np.asarray(data @ weights.T)[:, 0] + bias[0]
    active = (signs * margins < 1.0).astype(np.float64) * signs

    grad_w = -np.asarray(data.T @ active).reshape(1, -1) / data.shape[0]
    grad_b = -np.array([active.sum()]) / data.shape[0]

    return grad_w, grad_b


def _train_binary(
    data: csr_matrix, signs: np.ndarray, cfg: TrainConfig, rng: np.random.Generator
):
    def objective(weights, bias, batch, targets):
        return svm_objective(weights, bias, batch, targets, cfg.l2_lambda)

    return descend(
        data,
        signs,
        hinge_subgradient,
        objective,
        (1, data.shape[1]),
        cfg,
        rng,
        average=True,
    )


def train_linear_svm(
    matrix: FeatureMatrix, cfg: TrainConfig = TrainConfig()
) -> LinearModel:
    """
    Two classes give one model separating class 1 (+1) from
    class 0 (-1); k > 2 classes give k one-vs-rest models
    """

    k = len(matrix.classes)
    if k < 2:
        raise SingleClass("A linear SVM needs at least two classes")

    targets = [1] if k == 2 else range(k)
    weights, bias, losses = [], [], np.zeros(cfg.epochs)

    for c in targets:
        signs = np.where(matrix.labels == c, 1.0, -1.0)
        w, b, trace = _train_binary(
            matrix.data, signs, cfg, np.random.default_rng([cfg.seed, c])
        )
        weights.append(w[0])
        bias.append(b[0])
        losses += np.asarray(trace)

    return LinearModel(
        LinearKind.SVM,
        np.vstack(weights),
        np.array(bias),
        matrix.classes,
        matrix.vocab.digest,
        losses,
    )
