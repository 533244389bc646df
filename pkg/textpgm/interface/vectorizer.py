"""
Vectorizer Class

Turns a Dataset into a sparse FeatureMatrix:
normalize -> tokenize -> build vocabulary (training data only) -> weight

The code is licensed under the MIT license.
"""

from typing import List, Optional, Tuple
from textpgm.core.exceptions import EmptyCorpus, VocabMismatch
from textpgm.enumerations.model import ModelKind
from textpgm.enumerations.weighting import Weighting
from textpgm.interface.base import Base
from textpgm.interface.dataset import Dataset
from textpgm.interface.features import FeatureMatrix, PipelineConfig, Vocabulary
from textpgm.textprep.normalize import normalize_text
from textpgm.textprep.tokenize import tokenize
from textpgm.textprep.tfidf import tfidf_transform
from textpgm.textprep.vocabulary import build_vocabulary


class Vectorizer(Base):

    """
    Fit a vocabulary on training data and weight any dataset with it
    """

    # The pipeline settings
    config: PipelineConfig = None

    # The fitted vocabulary
    vocab: Optional[Vocabulary] = None

    def __init__(
        self, config: PipelineConfig = None, vocab: Optional[Vocabulary] = None
    ) -> None:

        self.config = config if config is not None else PipelineConfig()
        self.vocab = vocab

    def tokenize(self, data: Dataset) -> List[List[str]]:
        """
        Normalize and tokenize every document
        """

        return [
            tokenize(normalize_text(text, self.config.lowercase), self.config)
            for text in data.texts()
        ]

    def fit_transform(self, data: Dataset) -> Tuple[FeatureMatrix, Vocabulary]:
        """
        Build the vocabulary from data and weight it
        """

        if len(data) == 0:
            raise EmptyCorpus("Cannot vectorize an empty dataset")

        docs = self.tokenize(data)
        self.vocab = build_vocabulary(docs, self.config)

        return self._weight(docs, data), self.vocab

    def transform(self, data: Dataset) -> FeatureMatrix:
        """
        Weight held-out data with the fitted vocabulary
        """

        if self.vocab is None:
            raise VocabMismatch("Vectorizer has not been fitted")

        return self._weight(self.tokenize(data), data)

    def _weight(self, docs: List[List[str]], data: Dataset) -> FeatureMatrix:
        return tfidf_transform(
            docs,
            self.vocab,
            self.config.weighting,
            data.label_indices(),
            data.labels,
        )


def vectorize_dataset(
    data: Dataset, cfg: PipelineConfig
) -> Tuple[FeatureMatrix, Vocabulary]:
    """
    Fit a vocabulary on data and return its feature matrix
    """

    return Vectorizer(cfg).fit_transform(data)


def apply_vocabulary(
    data: Dataset, vocab: Vocabulary, cfg: PipelineConfig
) -> FeatureMatrix:
    """
    Weight data with an existing vocabulary (no refitting)
    """

    return Vectorizer(cfg, vocab).transform(data)


def default_weighting(model: ModelKind) -> Weighting:
    """
    Default weighting for a model family
    """

    if ModelKind(model) == ModelKind.BAYESNET:
        return Weighting.BINARY_PRESENCE

    return Weighting.TFIDF_SMOOTH_L2
