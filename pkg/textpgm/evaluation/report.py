"""
Benchmark Reports

Aligned text tables and CSV rows at 4 decimal places,
per-dataset plot data and the classifier x dataset grid
of weighted F1 percentages.

The code is licensed under the MIT license.
"""

from typing import Dict, Iterable, List, Sequence, Tuple
import pandas as pd
from textpgm.enumerations.average import Average
from textpgm.interface.metrics import ConfusionMatrix, EvalResult
from textpgm.evaluation.confusion import confusion_matrix
from textpgm.evaluation.prf import average_metrics, per_class_prf

# Report columns
COLUMNS = ["classifier", "dataset", "avg_kind", "precision", "recall", "f1", "accuracy"]

# Grid cell of a failed experiment
FAILED_CELL = "ERR"


def evaluate_confusion(classifier: str, dataset: str, cm: ConfusionMatrix) -> EvalResult:
    """
    All metrics of one confusion matrix
    """

    per_class = per_class_prf(cm)

    return EvalResult(classifier, dataset, cm, per_class, average_metrics(cm))


def evaluate_predictions(
    classifier: str,
    dataset: str,
    truths: Sequence[str],
    preds: Sequence[str],
    labels: Sequence[str],
) -> EvalResult:
    """
    Tally predictions and compute all metrics
    """

    return evaluate_confusion(classifier, dataset, confusion_matrix(truths, preds, labels))


def report_frame(
    results: Iterable[EvalResult], averages: Sequence[Average] = tuple(Average)
) -> pd.DataFrame:
    """
    One row per result and averaging kind
    """

    rows = []
    for result in results:
        for kind in averages:
            prf = getattr(result.averages, Average(kind).value)
            rows.append(
                [
                    result.classifier,
                    result.dataset,
                    Average(kind).value,
                    prf.precision,
                    prf.recall,
                    prf.f1,
                    result.averages.accuracy,
                ]
            )

    return pd.DataFrame(rows, columns=COLUMNS)


def per_class_frame(result: EvalResult) -> pd.DataFrame:
    """
    Per-class metrics of one result
    """

    metrics = result.per_class

    return pd.DataFrame(
        {
            "class": metrics.class_labels,
            "precision": metrics.precision,
            "recall": metrics.recall,
            "f1": metrics.f1,
            "support": metrics.support,
        }
    )


def format_report(
    results: Sequence[EvalResult], averages: Sequence[Average] = tuple(Average)
) -> Tuple[str, str]:
    """
    Returns the text table and the CSV document

    Metrics hit by the zero-denominator rule are listed
    below the text table.
    """

    frame = report_frame(results, averages)

    text = frame.to_string(index=False, float_format="{:.4f}".format) + "\n"
    for result in results:
        for label, metric in result.undefined:
            text += (
                f"* {result.classifier}/{result.dataset}: {metric} of '{label}' "
                "undefined, reported as 0\n"
            )

    csv = frame.to_csv(index=False, float_format="%.4f", lineterminator="\n")

    return text, csv


def plot_data(results: Iterable[EvalResult]) -> Dict[str, pd.DataFrame]:
    """
    Per dataset: weighted precision, recall, F1 and accuracy
    by classifier, in result order
    """

    frames: Dict[str, List[list]] = {}
    for result in results:
        weighted = result.averages.weighted
        frames.setdefault(result.dataset, []).append(
            [
                result.classifier,
                weighted.precision,
                weighted.recall,
                weighted.f1,
                result.averages.accuracy,
            ]
        )

    return {
        dataset: pd.DataFrame(
            rows, columns=["classifier", "precision", "recall", "f1", "accuracy"]
        ).set_index("classifier")
        for dataset, rows in frames.items()
    }


def summary_grid(
    results: Iterable[EvalResult], failures: Iterable[Tuple[str, str]] = ()
) -> pd.DataFrame:
    """
    Classifier x dataset grid of weighted F1 as percentages ("85.80")

    Failed (classifier, dataset) cells read "ERR"; rows and
    columns follow first appearance.
    """

    cells: Dict[Tuple[str, str], str] = {}
    for result in results:
        cells[(result.classifier, result.dataset)] = "%.2f" % (
            100 * result.averages.weighted.f1
        )
    for key in failures:
        cells[tuple(key)] = FAILED_CELL

    classifiers = list(dict.fromkeys(classifier for classifier, _ in cells))
    datasets = list(dict.fromkeys(dataset for _, dataset in cells))

    return pd.DataFrame(
        [[cells.get((c, d), "-") for d in datasets] for c in classifiers],
        index=pd.Index(classifiers, name="classifier"),
        columns=datasets,
    )


def result_records(results: Iterable[EvalResult]) -> List[dict]:
    """
    JSON-ready records from which results can be rebuilt
    """

    return [
        {
            "classifier": result.classifier,
            "dataset": result.dataset,
            "labels": list(result.confusion.class_labels),
            "counts": result.confusion.counts.tolist(),
        }
        for result in results
    ]


def results_from_records(records: Iterable[dict]) -> List[EvalResult]:
    """
    Rebuild results from their records
    """

    return [
        evaluate_confusion(
            record["classifier"],
            record["dataset"],
            ConfusionMatrix(record["counts"], record["labels"]),
        )
        for record in records
    ]
