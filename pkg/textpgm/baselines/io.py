"""
Baseline Serialization

A kind tag, the class labels and the vocabulary digest, then
dense rows with 12 significant digits.

The code is licensed under the MIT license.
"""

from typing import List, Union
import numpy as np
from textpgm.core.exceptions import ParseError
from textpgm.enumerations.model import LinearKind
from textpgm.interface.linear import LinearModel, NaiveBayesModel

# Format tag on the first line
MAGIC = "# textpgm baseline"


def _row(values: np.ndarray) -> str:
    return " ".join("%.12g" % v for v in values)


def baseline_text(model: Union[NaiveBayesModel, LinearModel]) -> str:
    """
    Render a naive Bayes or linear model
    """

    kind = "nb" if isinstance(model, NaiveBayesModel) else model.kind.value
    lines = [
        MAGIC,
        f"kind {kind}",
        "classes " + "\t".join(model.class_labels),
        f"vocabulary {model.vocab_digest}",
    ]

    if isinstance(model, NaiveBayesModel):
        lines.append("priors " + _row(model.class_log_priors))
        lines.extend("row " + _row(row) for row in model.feature_log_likelihoods)
    else:
        lines.append("bias " + _row(model.bias))
        lines.extend("row " + _row(row) for row in model.weights)

    return "\n".join(lines) + "\n"


def _value(lines: List[str], number: int, keyword: str) -> str:
    if number > len(lines):
        raise ParseError(number, f"expected '{keyword}', got end of file")
    head, _, value = lines[number - 1].partition(" ")
    if head != keyword:
        raise ParseError(number, f"expected '{keyword}'")

    return value


def _numbers(text: str, number: int) -> np.ndarray:
    try:
        return np.array([float(v) for v in text.split()], dtype=np.float64)
    except ValueError as error:
        raise ParseError(number, str(error)) from error


def parse_baseline(text: str) -> Union[NaiveBayesModel, LinearModel]:
    """
    Parse a naive Bayes or linear model
    """

    lines = text.splitlines()
    if not lines or lines[0] != MAGIC:
        raise ParseError(1, "not a textpgm baseline file")

    kind = _value(lines, 2, "kind")
    class_labels = _value(lines, 3, "classes").split("\t")
    digest = _value(lines, 4, "vocabulary")
    first = _numbers(_value(lines, 5, "priors" if kind == "nb" else "bias"), 5)
    rows = np.array(
        [_numbers(_value(lines, n, "row"), n) for n in range(6, len(lines) + 1)]
    )

    if kind == "nb":
        return NaiveBayesModel(first, rows, class_labels, digest)

    try:
        linear_kind = LinearKind(kind)
    except ValueError as error:
        raise ParseError(2, f"unknown model kind '{kind}'") from error

    return LinearModel(linear_kind, rows, first, class_labels, digest)


def write_baseline(model: Union[NaiveBayesModel, LinearModel], path: str) -> None:
    """
    Write a model file
    """

    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(baseline_text(model))


def read_baseline(path: str) -> Union[NaiveBayesModel, LinearModel]:
    """
    Read a model file
    """

    with open(path, encoding="utf-8") as f:
        return parse_baseline(f.read())
