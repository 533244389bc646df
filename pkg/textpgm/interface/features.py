"""
Feature Classes

Pipeline settings, the capped vocabulary and sparse
feature matrices

The code is licensed under the MIT license.
"""

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, NamedTuple, Optional, Sequence
import numpy as np
from scipy.sparse import csr_matrix
from textpgm.core.digest import text_digest
from textpgm.core.exceptions import TextPgmError, VocabMismatch
from textpgm.enumerations.weighting import Weighting


@dataclass(frozen=True)
class PipelineConfig:
    """
    Text preprocessing and weighting settings
    """

    words_to_keep: int = 1000
    weighting: Weighting = Weighting.TFIDF_SMOOTH_L2
    lowercase: bool = True
    min_token_length: int = 1
    stopword_list: Optional[FrozenSet[str]] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "weighting", Weighting(self.weighting))
        if self.stopword_list is not None:
            object.__setattr__(self, "stopword_list", frozenset(self.stopword_list))
        if self.words_to_keep < 1:
            raise TextPgmError("words_to_keep must be at least 1")
        if self.min_token_length < 1:
            raise TextPgmError("min_token_length must be at least 1")


class Vocabulary:

    """
    Ordered term list with document frequencies
    """

    # Terms in column order
    terms: tuple = ()

    # Term -> column id
    index: Dict[str, int] = None

    # Term -> number of documents containing it
    doc_freq: Dict[str, int] = None

    # Number of documents the vocabulary was built from
    corpus_size: int = 0

    def __init__(
        self, terms: Sequence[str], doc_freq: Dict[str, int], corpus_size: int
    ) -> None:

        self.terms = tuple(terms)
        self.index = {term: column for column, term in enumerate(self.terms)}
        self.doc_freq = {term: int(doc_freq[term]) for term in self.terms}
        self.corpus_size = int(corpus_size)

        if len(self.index) != len(self.terms):
            raise TextPgmError("Duplicate vocabulary terms")
        for term, count in self.doc_freq.items():
            if not 1 <= count <= self.corpus_size:
                raise TextPgmError(f"Document frequency of '{term}' out of range")

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, Vocabulary) and self.to_text() == other.to_text()

    def doc_freqs(self) -> np.ndarray:
        """
        Returns document frequencies in column order
        """

        return np.array([self.doc_freq[term] for term in self.terms], dtype=np.float64)

    def to_text(self) -> str:
        """
        Serialize as a header line plus term<TAB>doc_freq lines
        """

        lines = [f"# corpus_size\t{self.corpus_size}"]
        lines.extend(f"{term}\t{self.doc_freq[term]}" for term in self.terms)

        return "\n".join(lines) + "\n"

    @property
    def digest(self) -> str:
        """
        Returns the content hash of the vocabulary
        """

        return text_digest(self.to_text())


class SparseVector(NamedTuple):
    """
    One document's nonzero weights, columns strictly increasing
    """

    indices: np.ndarray
    values: np.ndarray

    @property
    def entries(self) -> List[tuple]:
        """
        Returns (column id, weight) pairs
        """

        return list(zip(self.indices.tolist(), self.values.tolist()))


class FeatureMatrix:

    """
    Sparse document-term weights with class indices
    """

    # CSR matrix, one row per document
    _data: csr_matrix = None

    # Per-row class indices
    labels: np.ndarray = None

    # Ordered class names
    classes: tuple = ()

    # The vocabulary used
    vocab: Vocabulary = None

    def __init__(
        self,
        data: csr_matrix,
        labels: Iterable[int],
        classes: Sequence[str],
        vocab: Vocabulary,
    ) -> None:

        if vocab is None:
            raise VocabMismatch("A feature matrix needs its vocabulary")

        data = csr_matrix(data, dtype=np.float64)
        data.eliminate_zeros()
        data.sort_indices()

        self._data = data
        self.labels = np.asarray(list(labels), dtype=np.int64)
        self.classes = tuple(classes)
        self.vocab = vocab

        if data.shape[1] != len(vocab):
            raise VocabMismatch("Column count differs from vocabulary size")
        if data.shape[0] != len(self.labels):
            raise TextPgmError("Row count differs from label count")
        if len(self.labels) and (
            self.labels.min() < 0 or self.labels.max() >= len(self.classes)
        ):
            raise TextPgmError("Label index out of range")

    def __len__(self) -> int:
        return self._data.shape[0]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FeatureMatrix)
            and self.classes == other.classes
            and self.vocab == other.vocab
            and np.array_equal(self.labels, other.labels)
            and (self._data != other._data).nnz == 0
        )

    @property
    def data(self) -> csr_matrix:
        """
        Returns the CSR matrix
        """

        return self._data

    @property
    def n_columns(self) -> int:
        """
        Returns the number of vocabulary columns
        """

        return self._data.shape[1]

    def row(self, position: int) -> SparseVector:
        """
        Returns a single row
        """

        start, end = self._data.indptr[position], self._data.indptr[position + 1]

        return SparseVector(
            self._data.indices[start:end].copy(), self._data.data[start:end].copy()
        )

    @property
    def rows(self) -> List[SparseVector]:
        """
        Returns all rows in document order
        """

        return [self.row(i) for i in range(len(self))]

    def subset(self, positions: Sequence[int]) -> "FeatureMatrix":
        """
        Select rows
        """

        positions = list(positions)

        return FeatureMatrix(
            self._data[positions], self.labels[positions], self.classes, self.vocab
        )
