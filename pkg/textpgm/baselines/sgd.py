"""
Seeded Mini-Batch Gradient Descent

Shared loop of the logistic regression and SVM trainers. The L2
term is applied as an implicit shrink w <- w / (1 + eta * lambda)
after each data step, which stays stable for any lambda.

The code is licensed under the MIT license.
"""

import logging
from typing import Callable, List, Optional, Tuple
import numpy as np
from scipy.sparse import csr_matrix
from textpgm.interface.linear import TrainConfig

logger = logging.getLogger(__name__)


def descend(
    data: csr_matrix,
    targets: np.ndarray,
    gradient: Callable,
    objective: Callable,
    shape: Tuple[int, int],
    cfg: TrainConfig,
    rng: np.random.Generator,
    average: bool = False,
) -> Tuple[np.ndarray, np.ndarray, List[float]]:
    """
    Minimize objective(W, b, X, y) from zero weights

    gradient(W, b, X, y) returns the data-term gradients of a
    batch. With average set the returned weights are the running
    mean of all iterates. The objective is recorded after every
    epoch at the returned weights.
    """

    weights = np.zeros(shape)
    bias = np.zeros(shape[0])
    mean_weights: Optional[np.ndarray] = np.zeros(shape) if average else None
    mean_bias: Optional[np.ndarray] = np.zeros(shape[0]) if average else None
    losses = []
    step = 0

    for epoch in range(cfg.epochs):

        order = rng.permutation(data.shape[0])

        for start in range(0, len(order), cfg.batch_size):

            batch = order[start : start + cfg.batch_size]
            eta = cfg.learning_rate / (1.0 + cfg.decay * step)

            grad_w, grad_b = gradient(weights, bias, data[batch], targets[batch])
            weights = (weights - eta * grad_w) / (1.0 + eta * cfg.l2_lambda)
            bias = bias - eta * grad_b
            step += 1

            if average:
                mean_weights += (weights - mean_weights) / step
                mean_bias += (bias - mean_bias) / step

        current = (mean_weights, mean_bias) if average else (weights, bias)
        losses.append(objective(current[0], current[1], data, targets))
        logger.debug("epoch %d: objective %.6f", epoch, losses[-1])

    if average:
        return mean_weights, mean_bias, losses

    return weights, bias, losses
