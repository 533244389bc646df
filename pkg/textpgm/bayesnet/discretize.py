"""
Feature Discretization

The code is licensed under the MIT license.
"""

import numpy as np
from textpgm.interface.features import FeatureMatrix
from textpgm.interface.network import DiscreteData


def discretize(matrix: FeatureMatrix, threshold: float = 0.0) -> DiscreteData:
    """
    Binary presence view of a feature matrix

    Column 0 holds the class index, column i >= 1 holds 1 where
    the weight of vocabulary column i - 1 exceeds threshold.
    """

    dtype = np.uint8 if len(matrix.classes) <= 255 else np.int64

    presence = (matrix.data > threshold).toarray().astype(dtype)
    classes = np.asarray(matrix.labels, dtype=dtype)[:, np.newaxis]

    return DiscreteData(
        np.hstack([classes, presence]),
        [len(matrix.classes)] + [2] * matrix.n_columns,
    )
