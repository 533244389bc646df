"""
Precision, Recall and F1

A zero denominator yields 0; the affected (class, metric)
pairs are recorded and a warning is issued.

The code is licensed under the MIT license.
"""

from typing import Optional, Tuple
import numpy as np
from sklearn.metrics import accuracy_score, precision_recall_fscore_support
from textpgm.core.exceptions import EmptyMatrix
from textpgm.core.warn import warn
from textpgm.interface.metrics import AveragedMetrics, ClassMetrics, ConfusionMatrix, Prf


def _weighted_pairs(cm: ConfusionMatrix) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    One (truth, prediction) pair per cell, weighted by its count
    """

    k = len(cm.class_labels)
    truths, preds = np.divmod(np.arange(k * k), k)

    return truths, preds, cm.counts.ravel().astype(np.float64)


def _prf(cm: ConfusionMatrix, average: Optional[str]):
    truths, preds, weights = _weighted_pairs(cm)

    return precision_recall_fscore_support(
        truths,
        preds,
        labels=np.arange(len(cm.class_labels)),
        average=average,
        sample_weight=weights,
        zero_division=0,
    )


def per_class_prf(cm: ConfusionMatrix) -> ClassMetrics:
    """
    P_c = TP / (TP + FP), R_c = TP / (TP + FN), F1 = 2PR / (P + R)
    """

    if cm.total == 0:
        raise EmptyMatrix("Metrics are undefined without instances")

    precision, recall, f1, _ = _prf(cm, None)
    predicted = cm.counts.sum(axis=0)
    support = cm.support

    undefined = tuple(
        (label, metric)
        for label, p_den, r_den in zip(cm.class_labels, predicted, support)
        for metric, den in (("precision", p_den), ("recall", r_den))
        if den == 0
    )
    if undefined:
        warn(
            "Undefined metrics set to 0: "
            + ", ".join(f"{metric} of '{label}'" for label, metric in undefined)
        )

    return ClassMetrics(
        cm.class_labels,
        np.asarray(precision, dtype=np.float64),
        np.asarray(recall, dtype=np.float64),
        np.asarray(f1, dtype=np.float64),
        support,
        undefined,
    )


def average_metrics(cm: ConfusionMatrix) -> AveragedMetrics:
    """
    Micro (pooled counts), macro (class mean) and weighted
    (support-weighted class mean) averages
    """

    if cm.total == 0:
        raise EmptyMatrix("Metrics are undefined without instances")

    truths, preds, weights = _weighted_pairs(cm)

    def averaged(kind: str) -> Prf:
        precision, recall, f1, _ = _prf(cm, kind)
        return Prf(float(precision), float(recall), float(f1))

    return AveragedMetrics(
        micro=averaged("micro"),
        macro=averaged("macro"),
        weighted=averaged("weighted"),
        accuracy=float(accuracy_score(truths, preds, sample_weight=weights)),
    )
