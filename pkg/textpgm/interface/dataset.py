"""
Dataset Class

Labeled raw-text records backed by a pandas DataFrame

The code is licensed under the MIT license.
"""

from dataclasses import dataclass
from typing import Iterable, List, NamedTuple, Optional, Sequence
import numpy as np
import pandas as pd
from textpgm.core.exceptions import DuplicateDocument, TextPgmError, UnknownLabel


class Document(NamedTuple):
    """
    A single labeled text
    """

    id: str
    text: str
    label: str


@dataclass(frozen=True)
class SplitSpec:
    """
    How to split a dataset in two
    """

    train_fraction: float = 0.8
    seed: int = 0

    def __post_init__(self) -> None:
        if not 0 < self.train_fraction < 1:
            raise TextPgmError("train_fraction must lie strictly between 0 and 1")
        if not 0 <= self.seed < 2**64:
            raise TextPgmError("seed must be a 64-bit unsigned integer")


class Dataset:

    """
    An ordered collection of documents with a fixed label set
    """

    # Column names of the backing DataFrame
    _columns: list = ["id", "text", "label"]

    # The data frame
    _data: pd.DataFrame = None

    # The ordered label set
    _labels: tuple = ()

    def __init__(
        self,
        documents: Iterable[Document],
        labels: Optional[Sequence[str]] = None,
    ) -> None:

        if isinstance(documents, pd.DataFrame):
            df = documents[self._columns].reset_index(drop=True)
        else:
            df = pd.DataFrame(list(documents), columns=self._columns)

        df = df.astype({"id": str, "text": str, "label": str})

        # Labels in first-appearance order unless given
        if labels is None:
            labels = list(dict.fromkeys(df["label"]))

        labels = tuple(labels)

        if len(set(labels)) != len(labels):
            raise TextPgmError("Duplicate class labels")

        unknown = set(df["label"]) - set(labels)
        if unknown:
            raise UnknownLabel(f"Labels outside the label set: {sorted(unknown)}")

        duplicated = df["id"].duplicated()
        if duplicated.any():
            raise DuplicateDocument(df["id"][duplicated].iloc[0])

        self._data = df
        self._labels = labels

    def __len__(self) -> int:
        return len(self._data.index)

    def __iter__(self):
        for row in self._data.itertuples(index=False):
            yield Document(row.id, row.text, row.label)

    def __getitem__(self, position: int) -> Document:
        row = self._data.iloc[position]
        return Document(row["id"], row["text"], row["label"])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Dataset)
            and self._labels == other._labels
            and self._data.equals(other._data)
        )

    @property
    def labels(self) -> tuple:
        """
        Returns the ordered label set
        """

        return self._labels

    @property
    def documents(self) -> List[Document]:
        """
        Returns all documents in order
        """

        return list(self)

    def texts(self) -> List[str]:
        """
        Returns the raw texts in order
        """

        return self._data["text"].tolist()

    def ids(self) -> List[str]:
        """
        Returns the document ids in order
        """

        return self._data["id"].tolist()

    def label_indices(self) -> np.ndarray:
        """
        Returns each document's position in the label set
        """

        lookup = {label: i for i, label in enumerate(self._labels)}

        return self._data["label"].map(lookup).to_numpy(dtype=np.int64)

    def counts(self) -> pd.Series:
        """
        Return number of documents per class, in label order
        """

        return (
            self._data["label"]
            .value_counts()
            .reindex(list(self._labels), fill_value=0)
            .astype(int)
        )

    def fetch(self) -> pd.DataFrame:
        """
        Fetch a copy of the backing DataFrame
        """

        return self._data.copy()

    def _select(self, positions: Sequence[int]) -> "Dataset":
        """
        Create a dataset from a subset of rows, keeping the label set
        """

        return Dataset(self._data.iloc[list(positions)], self._labels)

    # Import methods
    from textpgm.corpus.split import stratified_split
    from textpgm.corpus.upsample import upsample_minority
