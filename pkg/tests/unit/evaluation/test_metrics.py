"""
Evaluation Metric Tests

The code is licensed under the MIT license.
"""

import numpy as np
import pytest
from sklearn.metrics import f1_score, precision_score, recall_score
from textpgm.core.exceptions import EmptyMatrix, LengthMismatch, UnknownLabel
from textpgm.core.warn import TextPgmWarning
from textpgm.interface.metrics import ConfusionMatrix
from textpgm.evaluation.confusion import confusion_matrix
from textpgm.evaluation.prf import average_metrics, per_class_prf


def test_confusion_counts():
    """
    Rows are truths, columns are predictions
    """

    cm = confusion_matrix(["a", "a", "b", "c"], ["a", "b", "b", "a"], ["a", "b", "c"])

    assert cm.counts.tolist() == [[1, 1, 0], [0, 1, 0], [1, 0, 0]]
    assert cm.total == 4


def test_confusion_empty():
    """
    No instances give a matrix of zeros
    """

    assert confusion_matrix([], [], ["a", "b"]).counts.tolist() == [[0, 0], [0, 0]]


def test_confusion_length_mismatch():
    """
    One prediction per truth is required
    """

    with pytest.raises(LengthMismatch):
        confusion_matrix(["a"], ["a", "b"], ["a", "b"])


def test_confusion_unknown_label():
    """
    Labels outside the label set are refused
    """

    with pytest.raises(UnknownLabel):
        confusion_matrix(["a"], ["z"], ["a", "b"])


def test_perfect_predictions():
    """
    A diagonal matrix scores 1 everywhere
    """

    cm = ConfusionMatrix([[3, 0], [0, 5]], ["a", "b"])
    averages = average_metrics(cm)

    assert per_class_prf(cm).f1.tolist() == [1.0, 1.0]
    assert averages.macro.f1 == averages.weighted.f1 == averages.accuracy == 1.0


def test_symmetric_errors():
    """
    [[2, 1], [1, 2]] gives 2/3 for every class and average
    """

    cm = ConfusionMatrix([[2, 1], [1, 2]], ["a", "b"])
    per_class = per_class_prf(cm)
    averages = average_metrics(cm)

    assert per_class.of("a") == pytest.approx((2 / 3, 2 / 3, 2 / 3))
    for prf in (averages.micro, averages.macro, averages.weighted):
        assert tuple(prf) == pytest.approx((2 / 3, 2 / 3, 2 / 3))


def test_micro_equals_accuracy():
    """
    Pooled precision, recall and F1 all equal accuracy
    """

    rng = np.random.default_rng(0)

    for _ in range(100):
        k = int(rng.integers(2, 6))
        cm = ConfusionMatrix(rng.integers(1, 20, size=(k, k)), [str(c) for c in range(k)])
        averages = average_metrics(cm)
        assert averages.micro.precision == pytest.approx(averages.accuracy, abs=1e-12)
        assert averages.micro.recall == pytest.approx(averages.accuracy, abs=1e-12)
        assert averages.micro.f1 == pytest.approx(averages.accuracy, abs=1e-12)


def test_macro_equals_weighted_when_balanced():
    """
    Equal supports make the two class means coincide
    """

    cm = ConfusionMatrix([[5, 3, 2], [1, 8, 1], [4, 0, 6]], ["a", "b", "c"])
    averages = average_metrics(cm)

    assert tuple(averages.macro) == pytest.approx(tuple(averages.weighted), abs=1e-12)


def test_label_order_permutation():
    """
    Reordering classes leaves the averages unchanged
    """

    counts = np.array([[5, 3, 2], [1, 9, 1], [4, 0, 12]])
    order = [2, 0, 1]
    first = average_metrics(ConfusionMatrix(counts, ["a", "b", "c"]))
    second = average_metrics(
        ConfusionMatrix(counts[np.ix_(order, order)], ["c", "a", "b"])
    )

    assert tuple(first.macro) == pytest.approx(tuple(second.macro))
    assert tuple(first.weighted) == pytest.approx(tuple(second.weighted))


def test_undefined_precision():
    """
    A never predicted class gets precision 0 and a warning
    """

    cm = ConfusionMatrix([[3, 0], [2, 0]], ["a", "b"])

    with pytest.warns(TextPgmWarning):
        per_class = per_class_prf(cm)

    assert per_class.precision.tolist() == [0.6, 0.0]
    assert per_class.undefined == (("b", "precision"),)


def test_empty_matrix():
    """
    Metrics need instances
    """

    with pytest.raises(EmptyMatrix):
        per_class_prf(ConfusionMatrix([[0, 0], [0, 0]], ["a", "b"]))


@pytest.mark.parametrize("average", ["micro", "macro", "weighted"])
def test_averages_match_raw_predictions(average):
    """
    Averages from the matrix equal scores computed on the predictions
    """

    rng = np.random.default_rng(5)
    labels = ["a", "b", "c", "d"]
    truths = rng.choice(labels, size=300).tolist()
    preds = rng.choice(labels[:3], size=300).tolist()

    prf = getattr(average_metrics(confusion_matrix(truths, preds, labels)), average)

    assert prf.precision == pytest.approx(
        precision_score(truths, preds, labels=labels, average=average, zero_division=0),
        abs=1e-12,
    )
    assert prf.recall == pytest.approx(
        recall_score(truths, preds, labels=labels, average=average, zero_division=0),
        abs=1e-12,
    )
    assert prf.f1 == pytest.approx(
        f1_score(truths, preds, labels=labels, average=average, zero_division=0),
        abs=1e-12,
    )


def test_empty_matrix_averages():
    """
    Averages need instances too
    """

    with pytest.raises(EmptyMatrix):
        average_metrics(ConfusionMatrix([[0, 0], [0, 0]], ["a", "b"]))
