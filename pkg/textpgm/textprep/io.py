"""
Feature Serialization

Vocabulary: a "# corpus_size<TAB>N" header, then term<TAB>doc_freq lines.
Feature matrix: one "label_index col:weight col:weight ..." line per row.

The code is licensed under the MIT license.
"""

from typing import Sequence
import numpy as np
from scipy.sparse import csr_matrix
from textpgm.core.exceptions import ParseError
from textpgm.interface.features import FeatureMatrix, Vocabulary


def write_vocabulary(vocab: Vocabulary, path: str) -> None:
    """
    Write a vocabulary file
    """

    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(vocab.to_text())


def parse_vocabulary(text: str) -> Vocabulary:
    """
    Parse the vocabulary text format
    """

    lines = text.splitlines()

    if not lines or not lines[0].startswith("# corpus_size\t"):
        raise ParseError(1, "missing corpus_size header")

    terms = []
    doc_freq = {}
    for number, line in enumerate(lines[1:], start=2):
        try:
            term, count = line.split("\t")
            doc_freq[term] = int(count)
        except ValueError as error:
            raise ParseError(number, "expected term<TAB>doc_freq") from error
        terms.append(term)

    return Vocabulary(terms, doc_freq, int(lines[0].split("\t")[1]))


def read_vocabulary(path: str) -> Vocabulary:
    """
    Read a vocabulary file
    """

    with open(path, encoding="utf-8") as f:
        return parse_vocabulary(f.read())


def feature_matrix_lines(matrix: FeatureMatrix) -> str:
    """
    Render a feature matrix in the sparse line format
    """

    data = matrix.data
    lines = []

    for position, label in enumerate(matrix.labels):
        start, end = data.indptr[position], data.indptr[position + 1]
        cells = " ".join(
            f"{column}:{float(weight)!r}"
            for column, weight in zip(data.indices[start:end], data.data[start:end])
        )
        lines.append(f"{label} {cells}".rstrip())

    return "\n".join(lines) + ("\n" if lines else "")


def write_feature_matrix(matrix: FeatureMatrix, path: str) -> None:
    """
    Write a feature matrix file
    """

    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(feature_matrix_lines(matrix))


def read_feature_matrix(
    path: str, vocab: Vocabulary, classes: Sequence[str]
) -> FeatureMatrix:
    """
    Read a feature matrix file written against a known vocabulary
    """

    labels, indptr, indices, values = [], [0], [], []

    with open(path, encoding="utf-8") as f:
        for number, line in enumerate(f, start=1):
            fields = line.split()
            if not fields:
                continue
            try:
                labels.append(int(fields[0]))
                for cell in fields[1:]:
                    column, weight = cell.split(":")
                    indices.append(int(column))
                    values.append(float(weight))
            except ValueError as error:
                raise ParseError(number, "expected label col:weight ...") from error
            indptr.append(len(indices))

    data = csr_matrix(
        (
            np.array(values, dtype=np.float64),
            np.array(indices, dtype=np.int64),
            np.array(indptr, dtype=np.int64),
        ),
        shape=(len(labels), len(vocab)),
    )

    return FeatureMatrix(data, labels, classes, vocab)
