"""
Confusion Matrix

The code is licensed under the MIT license.
"""

from typing import Sequence
import numpy as np
from sklearn.metrics import confusion_matrix as sk_confusion_matrix
from textpgm.core.exceptions import LengthMismatch, UnknownLabel
from textpgm.interface.metrics import ConfusionMatrix


def confusion_matrix(
    truths: Sequence[str], preds: Sequence[str], labels: Sequence[str]
) -> ConfusionMatrix:
    """
    counts[i][j] = number of instances of class i predicted as j
    """

    truths, preds, labels = list(truths), list(preds), list(labels)

    if len(truths) != len(preds):
        raise LengthMismatch(f"{len(truths)} truths but {len(preds)} predictions")

    known = set(labels)
    for value in truths + preds:
        if value not in known:
            raise UnknownLabel(f"Label '{value}' is not in the label set")

    if not truths:
        return ConfusionMatrix(np.zeros((len(labels), len(labels))), labels)

    return ConfusionMatrix(sk_confusion_matrix(truths, preds, labels=labels), labels)
