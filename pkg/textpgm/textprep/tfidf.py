"""
TF-IDF Weighting

The code is licensed under the MIT license.
"""

from collections import Counter
from typing import List, Optional, Sequence
import numpy as np
from scipy.sparse import csr_matrix, diags
from textpgm.core.exceptions import VocabMismatch
from textpgm.core.loader import processing_handler
from textpgm.enumerations.weighting import Weighting
from textpgm.interface.base import Base
from textpgm.interface.features import FeatureMatrix, Vocabulary


def _count_row(tokens: List[str], index: dict) -> tuple:
    """
    Term counts of one document, in-vocabulary terms only
    """

    counts = Counter(index[token] for token in tokens if token in index)
    columns = np.array(sorted(counts), dtype=np.int64)

    return columns, np.array([counts[c] for c in columns], dtype=np.float64)


def idf_weights(vocab: Vocabulary, weighting: Weighting) -> np.ndarray:
    """
    Inverse document frequency of every vocabulary column
    """

    size = vocab.corpus_size
    df = vocab.doc_freqs()

    if weighting == Weighting.TFIDF_WEKA:
        return np.log(size / df)

    return np.log((1 + size) / (1 + df)) + 1


def tfidf_transform(
    docs: Sequence[List[str]],
    vocab: Vocabulary,
    weighting: Weighting,
    labels: Optional[Sequence[int]] = None,
    classes: Sequence[str] = ("",),
) -> FeatureMatrix:
    """
    Weight tokenized documents against a fixed vocabulary

    Out-of-vocabulary terms are ignored. The vocabulary is
    never modified.
    """

    if vocab is None or vocab.corpus_size < 1:
        raise VocabMismatch("Documents need a vocabulary built from at least one document")

    weighting = Weighting(weighting)

    # Rows are independent, results keep input order
    rows = processing_handler(
        [(tokens, vocab.index) for tokens in docs], _count_row, 1, Base.threads
    )

    lengths = [len(columns) for columns, _ in rows]
    indptr = np.concatenate(([0], np.cumsum(lengths, dtype=np.int64)))
    indices = (
        np.concatenate([columns for columns, _ in rows])
        if rows
        else np.zeros(0, dtype=np.int64)
    )
    tf = (
        np.concatenate([values for _, values in rows])
        if rows
        else np.zeros(0, dtype=np.float64)
    )

    if weighting == Weighting.BINARY_PRESENCE:
        values = np.ones_like(tf)
    else:
        values = tf * idf_weights(vocab, weighting)[indices]

    data = csr_matrix((values, indices, indptr), shape=(len(rows), len(vocab)))

    if weighting == Weighting.TFIDF_SMOOTH_L2:
        norms = np.sqrt(np.asarray(data.multiply(data).sum(axis=1)).ravel())
        norms[norms == 0] = 1
        data = csr_matrix(diags(1 / norms) @ data)

    if labels is None:
        labels = np.zeros(len(rows), dtype=np.int64)

    return FeatureMatrix(data, labels, classes, vocab)
