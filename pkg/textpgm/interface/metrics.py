"""
Evaluation Classes

The code is licensed under the MIT license.
"""

from typing import List, NamedTuple, Sequence, Tuple
import numpy as np
from textpgm.core.exceptions import TextPgmError


class ConfusionMatrix:

    """
    Counts of (true class, predicted class) pairs
    """

    # C x C counts, rows = truth, columns = prediction
    counts: np.ndarray = None

    # Ordered class names
    class_labels: tuple = ()

    def __init__(self, counts: np.ndarray, class_labels: Sequence[str]) -> None:

        counts = np.asarray(counts, dtype=np.int64)
        k = len(class_labels)

        if counts.shape != (k, k):
            raise TextPgmError("Confusion matrix must be square over the label set")
        if (counts < 0).any():
            raise TextPgmError("Confusion counts must not be negative")

        self.counts = counts
        self.class_labels = tuple(class_labels)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ConfusionMatrix)
            and self.class_labels == other.class_labels
            and np.array_equal(self.counts, other.counts)
        )

    @property
    def total(self) -> int:
        """
        Returns the number of evaluated instances
        """

        return int(self.counts.sum())

    @property
    def support(self) -> np.ndarray:
        """
        Returns the true-class counts
        """

        return self.counts.sum(axis=1)


class Prf(NamedTuple):
    """
    Precision, recall and F1
    """

    precision: float
    recall: float
    f1: float


class ClassMetrics(NamedTuple):
    """
    Per-class precision, recall and F1 in label order
    """

    class_labels: tuple
    precision: np.ndarray
    recall: np.ndarray
    f1: np.ndarray
    support: np.ndarray

    # (class, metric) pairs with a zero denominator, reported as 0
    undefined: Tuple[Tuple[str, str], ...] = ()

    def of(self, label: str) -> Prf:
        """
        Returns the metrics of one class
        """

        c = self.class_labels.index(label)

        return Prf(float(self.precision[c]), float(self.recall[c]), float(self.f1[c]))


class AveragedMetrics(NamedTuple):
    """
    Micro, macro and support-weighted averages plus accuracy
    """

    micro: Prf
    macro: Prf
    weighted: Prf
    accuracy: float


class EvalResult(NamedTuple):
    """
    Evaluation of one classifier on one dataset
    """

    classifier: str
    dataset: str
    confusion: ConfusionMatrix
    per_class: ClassMetrics
    averages: AveragedMetrics

    @property
    def undefined(self) -> List[Tuple[str, str]]:
        """
        Returns the zero-denominator flags
        """

        return list(self.per_class.undefined)
