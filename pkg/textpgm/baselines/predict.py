"""
Baseline Prediction

The code is licensed under the MIT license.
"""

from typing import Tuple
import numpy as np
from scipy.sparse import csr_matrix
from scipy.special import expit, logsumexp, softmax
from textpgm.core.exceptions import ColumnOutOfRange
from textpgm.enumerations.model import LinearKind
from textpgm.interface.features import SparseVector
from textpgm.utilities.validations import column_range


def _as_rows(row: SparseVector, n_features: int) -> csr_matrix:
    """
    One-row CSR matrix from a sparse vector
    """

    indices = np.asarray(row.indices, dtype=np.int64)
    if not column_range(indices, n_features):
        raise ColumnOutOfRange(f"Column ids must lie in [0, {n_features})")

    return csr_matrix(
        (np.asarray(row.values, dtype=np.float64), indices, [0, len(indices)]),
        shape=(1, n_features),
    )


def _check_width(data: csr_matrix, n_features: int) -> csr_matrix:
    data = csr_matrix(data, dtype=np.float64)
    if data.shape[1] != n_features:
        raise ColumnOutOfRange(
            f"Matrix has {data.shape[1]} columns, model expects {n_features}"
        )

    return data


def predict_nb_many(self, data: csr_matrix) -> Tuple[np.ndarray, np.ndarray]:
    """
    Class indices and normalized log-posteriors of every row
    """

    data = _check_width(data, self.n_features)
    joint = np.asarray(data @ self.feature_log_likelihoods.T) + self.class_log_priors

    return np.argmax(joint, axis=1), joint - logsumexp(joint, axis=1, keepdims=True)


def predict_nb(self, row: SparseVector) -> Tuple[int, np.ndarray]:
    """
    Class index and normalized log-posteriors of one document
    """

    classes, scores = self.predict_nb_many(_as_rows(row, self.n_features))

    return int(classes[0]), scores[0]


def predict_linear_many(self, data: csr_matrix) -> Tuple[np.ndarray, np.ndarray]:
    """
    Class indices and scores of every row

    Logistic models score with class probabilities, SVMs with
    raw margins ([-m, m] for two classes).
    """

    data = _check_width(data, self.n_features)
    margins = np.asarray(data @ self.weights.T) + self.bias

    if self.binary:
        if self.kind == LinearKind.LOGISTIC:
            positive = expit(margins[:, 0])
            scores = np.column_stack([1.0 - positive, positive])
        else:
            scores = np.column_stack([-margins[:, 0], margins[:, 0]])
    elif self.kind == LinearKind.LOGISTIC:
        scores = softmax(margins, axis=1)
    else:
        scores = margins

    return np.argmax(scores, axis=1), scores


def predict_linear(self, row: SparseVector) -> Tuple[int, np.ndarray]:
    """
    Class index and scores of one document
    """

    classes, scores = self.predict_linear_many(_as_rows(row, self.n_features))

    return int(classes[0]), scores[0]
