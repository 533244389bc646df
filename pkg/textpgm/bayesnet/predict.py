"""
Network Classification

The code is licensed under the MIT license.
"""

from typing import Sequence, Tuple
import numpy as np
from scipy.special import logsumexp
from textpgm.core.exceptions import ValueOutOfRange


def predict_many(self, values: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """
    Classify instances given as rows of feature states (variables 1..n-1)

    Returns the argmax class per row (ties to the lowest index) and
    the normalized class log-posteriors.
    """

    values = np.asarray(values, dtype=np.int64)
    if values.ndim == 1:
        values = values[np.newaxis, :]

    n_vars = self.dag.n
    if values.shape[1] != n_vars - 1:
        raise ValueOutOfRange(values.shape[1], None)

    for var in range(1, n_vars):
        column = values[:, var - 1]
        bad = (column < 0) | (column >= self.cardinalities[var])
        if bad.any():
            raise ValueOutOfRange(var, int(column[bad][0]))

    full = np.empty((values.shape[0], n_vars), dtype=np.int64)
    full[:, 1:] = values
    log_tables = [np.log(cpt.table) for cpt in self.cpts]
    joint = np.zeros((values.shape[0], len(self.class_labels)))

    for c in range(len(self.class_labels)):
        full[:, 0] = c
        for var in range(n_vars):
            index = np.zeros(values.shape[0], dtype=np.int64)
            for p in self.dag.parents[var]:
                index = index * self.cardinalities[p] + full[:, p]
            joint[:, c] += log_tables[var][index, full[:, var]]

    posteriors = joint - logsumexp(joint, axis=1, keepdims=True)

    return np.argmax(joint, axis=1), posteriors


def predict(self, row: Sequence[int]) -> Tuple[int, np.ndarray]:
    """
    Classify one instance
    """

    classes, posteriors = self.predict_many(np.asarray(row)[np.newaxis, :])

    return int(classes[0]), posteriors[0]
