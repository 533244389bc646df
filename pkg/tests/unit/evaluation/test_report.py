"""
Benchmark Report Tests

The code is licensed under the MIT license.
"""

import pytest
from textpgm.enumerations.average import Average
from textpgm.interface.metrics import ConfusionMatrix
from textpgm.evaluation.report import (
    evaluate_confusion,
    evaluate_predictions,
    format_report,
    plot_data,
    report_frame,
    result_records,
    results_from_records,
    summary_grid,
)


def _result(classifier, dataset, counts):
    return evaluate_confusion(classifier, dataset, ConfusionMatrix(counts, ["neg", "pos"]))


def test_report_rows():
    """
    One row per averaging kind
    """

    frame = report_frame([_result("nb", "imdb", [[2, 1], [1, 2]])])

    assert frame["avg_kind"].tolist() == ["micro", "macro", "weighted"]
    assert frame["f1"].tolist() == pytest.approx([2 / 3] * 3)


def test_report_decimals():
    """
    Values are rendered with four decimals
    """

    result = _result("logreg", "imdb", [[4485, 515], [516, 4484]])
    text, csv = format_report([result], [Average.WEIGHTED])

    assert "0.8969" in text
    assert csv.splitlines()[0] == "classifier,dataset,avg_kind,precision,recall,f1,accuracy"
    assert csv.splitlines()[1].endswith(",0.8969")


def test_report_undefined_note():
    """
    Metrics forced to 0 are pointed out below the table
    """

    with pytest.warns(Warning):
        result = _result("svm", "tiny", [[3, 0], [2, 0]])

    text, _ = format_report([result])

    assert "* svm/tiny: precision of 'pos' undefined, reported as 0" in text


def test_evaluate_predictions():
    """
    Label predictions are tallied against the truth
    """

    result = evaluate_predictions("nb", "d", ["neg", "pos"], ["neg", "neg"], ["neg", "pos"])

    assert result.confusion.counts.tolist() == [[1, 0], [1, 0]]
    assert result.averages.accuracy == 0.5


def test_summary_grid():
    """
    Weighted F1 percentages, failures read ERR, gaps read -
    """

    results = [
        _result("bayesnet-tan", "imdb", [[429, 71], [71, 429]]),
        _result("nb", "amazon", [[5, 5], [5, 5]]),
    ]
    grid = summary_grid(results, failures=[("nb", "imdb")])

    assert grid.loc["bayesnet-tan", "imdb"] == "85.80"
    assert grid.loc["nb", "imdb"] == "ERR"
    assert grid.loc["bayesnet-tan", "amazon"] == "-"
    assert grid.loc["nb", "amazon"] == "50.00"


def test_plot_data():
    """
    Plot tables are split by dataset and indexed by classifier
    """

    results = [
        _result("nb", "imdb", [[2, 1], [1, 2]]),
        _result("svm", "imdb", [[3, 0], [0, 3]]),
        _result("nb", "amazon", [[3, 0], [0, 3]]),
    ]
    frames = plot_data(results)

    assert list(frames) == ["imdb", "amazon"]
    assert frames["imdb"].index.tolist() == ["nb", "svm"]
    assert frames["imdb"].loc["svm", "f1"] == 1.0


def test_records():
    """
    Results are rebuilt from their records
    """

    results = [_result("nb", "imdb", [[2, 1], [1, 2]])]
    rebuilt = results_from_records(result_records(results))

    assert rebuilt[0].confusion == results[0].confusion
    assert rebuilt[0].averages == results[0].averages
