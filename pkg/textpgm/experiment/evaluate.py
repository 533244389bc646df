"""
Evaluate Step

Score a saved model on the prepared test split or on a separate
dataset file and write the reports.

The code is licensed under the MIT license.
"""

import logging
import os
from dataclasses import replace
from typing import Iterable, List, Optional, Sequence, Tuple
from textpgm.core.exceptions import ParseError, VocabHashMismatch
from textpgm.interface.metrics import EvalResult
from textpgm.interface.network import BayesNetClassifier
from textpgm.interface.hmm import ClassHmmBank
from textpgm.interface.linear import NaiveBayesModel
from textpgm.interface.vectorizer import Vectorizer, apply_vocabulary
from textpgm.bayesnet.discretize import discretize
from textpgm.bayesnet.io import MAGIC as NETWORK_MAGIC, parse_network
from textpgm.hmm.io import MAGIC as BANK_MAGIC, parse_bank
from textpgm.baselines.io import MAGIC as BASELINE_MAGIC, parse_baseline
from textpgm.evaluation.report import (
    evaluate_predictions,
    format_report,
    per_class_frame,
    plot_data,
    result_records,
    summary_grid,
)
from textpgm.experiment.config import parse_config
from textpgm.experiment.prepare import (
    load_dataset,
    load_prepared,
    split_dataset,
    write_json,
)
from textpgm.experiment.train import MODEL_FILE

logger = logging.getLogger(__name__)

# Report file names
REPORT_TEXT = "report.txt"
REPORT_CSV = "report.csv"
PER_CLASS_CSV = "per_class.csv"
RESULTS_FILE = "results.json"
SUMMARY_TEXT = "summary.txt"
SUMMARY_CSV = "summary.csv"


def read_model(path: str):
    """
    Read any model file, dispatching on its first line
    """

    with open(path, encoding="utf-8") as f:
        text = f.read()

    first = text.split("\n", 1)[0]
    parsers = {
        NETWORK_MAGIC: parse_network,
        BANK_MAGIC: parse_bank,
        BASELINE_MAGIC: parse_baseline,
    }
    if first not in parsers:
        raise ParseError(1, f"{path} is not a textpgm model file")

    return parsers[first](text)


def model_digest(model) -> str:
    """
    Vocabulary digest stored in a model
    """

    if isinstance(model, ClassHmmBank):
        return model.vocab.digest

    return model.vocab_digest


def predict_labels(model, matrix=None, docs=None) -> List[str]:
    """
    Class names predicted for a feature matrix or tokenized documents
    """

    if isinstance(model, ClassHmmBank):
        indices, _ = model.classify_documents(docs)
    elif isinstance(model, BayesNetClassifier):
        indices, _ = model.predict_many(discretize(matrix, model.threshold).values[:, 1:])
    elif isinstance(model, NaiveBayesModel):
        indices, _ = model.predict_nb_many(matrix.data)
    else:
        indices, _ = model.predict_linear_many(matrix.data)

    return [model.class_labels[i] for i in indices]


def evaluate_model(
    model_path: str,
    artifacts: Optional[str] = None,
    data_path: Optional[str] = None,
    classifier: Optional[str] = None,
) -> EvalResult:
    """
    Evaluate a model file

    artifacts is the prepare output directory (default: the model's
    directory). Without data_path the prepared test split is used.
    """

    artifacts = artifacts or os.path.dirname(os.path.abspath(model_path))
    model = read_model(model_path)
    prepared = load_prepared(artifacts)

    if model_digest(model) != prepared.manifest["vocabulary_digest"]:
        raise VocabHashMismatch(
            f"{model_path} was trained on a different vocabulary than {artifacts}"
        )

    config = parse_config(
        prepared.manifest["config"], environ={}, require_dataset=False
    )
    dataset_name = prepared.manifest["dataset"]

    if data_path is None:
        if isinstance(model, ClassHmmBank):
            _, data = split_dataset(config)
        else:
            data = None
    else:
        fmt = "arff" if data_path.lower().endswith(".arff") else "csv"
        source = replace(config.source, path=data_path, format=fmt)
        data = load_dataset(source)
        dataset_name = os.path.splitext(os.path.basename(data_path))[0]

    if data is None:
        matrix = prepared.test
        truths = [matrix.classes[i] for i in matrix.labels]
        preds = predict_labels(model, matrix=matrix)
    elif isinstance(model, ClassHmmBank):
        truths = [doc.label for doc in data]
        preds = predict_labels(model, docs=Vectorizer(config.pipeline).tokenize(data))
    else:
        matrix = apply_vocabulary(data, prepared.vocab, config.pipeline)
        truths = [doc.label for doc in data]
        preds = predict_labels(model, matrix=matrix)

    name = classifier or prepared.manifest["classifier"]
    logger.info("Evaluating %s on %d %s documents", name, len(truths), dataset_name)

    return evaluate_predictions(name, dataset_name, truths, preds, model.class_labels)


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)


def write_reports(
    results: Sequence[EvalResult],
    directory: str,
    failures: Iterable[Tuple[str, str, str]] = (),
) -> Tuple[str, str]:
    """
    Write text and CSV reports, per-class tables, plot data, the
    summary grid and results.json; returns (text, csv)
    """

    os.makedirs(directory, exist_ok=True)
    failures = [tuple(failure) for failure in failures]
    text, csv = format_report(results)

    for result in results:
        table = per_class_frame(result).to_string(
            index=False, float_format="{:.4f}".format
        )
        text += f"\n{result.classifier} / {result.dataset}\n{table}\n"

    _write(os.path.join(directory, REPORT_TEXT), text)
    _write(os.path.join(directory, REPORT_CSV), csv)

    if len(results) == 1:
        per_class_frame(results[0]).to_csv(
            os.path.join(directory, PER_CLASS_CSV),
            index=False,
            float_format="%.4f",
            lineterminator="\n",
        )

    for dataset, frame in plot_data(results).items():
        frame.to_csv(
            os.path.join(directory, f"plot_{dataset}.csv"),
            float_format="%.4f",
            lineterminator="\n",
        )

    grid = summary_grid(results, [(c, d) for c, d, _ in failures])
    summary = grid.to_string() + "\n"
    for c, d, pointer in failures:
        summary += f"ERR {c}/{d}: see {pointer}\n"

    _write(os.path.join(directory, SUMMARY_TEXT), summary)
    grid.to_csv(os.path.join(directory, SUMMARY_CSV), lineterminator="\n")

    write_json(
        {"failures": [list(f) for f in failures], "results": result_records(results)},
        os.path.join(directory, RESULTS_FILE),
    )

    return text, csv


def evaluate(self, data_path: Optional[str] = None) -> EvalResult:
    """
    Evaluate this experiment's trained model and write its reports
    """

    result = evaluate_model(
        os.path.join(self.output, MODEL_FILE),
        self.output,
        data_path,
        self.config.classifier,
    )
    write_reports([result], self.output)

    return result
