"""
Baseline Classifier Classes

Multinomial naive Bayes and linear models (logistic regression,
linear SVM) over weighted feature matrices.

The code is licensed under the MIT license.
"""

from dataclasses import dataclass
from typing import Sequence
import numpy as np
from textpgm.core.exceptions import InvalidModel, TextPgmError
from textpgm.enumerations.model import LinearKind


@dataclass(frozen=True)
class TrainConfig:
    """
    Optimizer and smoothing settings of the baselines

    The learning rate at update t is
    learning_rate / (1 + decay * t).
    """

    learning_rate: float = 0.1
    decay: float = 1e-4
    l2_lambda: float = 1e-4
    epochs: int = 50
    seed: int = 0
    smoothing: float = 1.0
    batch_size: int = 32

    def __post_init__(self) -> None:
        if not self.learning_rate > 0:
            raise TextPgmError("learning_rate must be positive")
        if self.decay < 0 or self.l2_lambda < 0:
            raise TextPgmError("decay and l2_lambda must not be negative")
        if self.epochs < 1 or self.batch_size < 1:
            raise TextPgmError("epochs and batch_size must be at least 1")
        if not self.smoothing > 0:
            raise TextPgmError("smoothing must be positive")


class NaiveBayesModel:

    """
    Multinomial naive Bayes
    """

    # ln P(class)
    class_log_priors: np.ndarray = None

    # ln P(term | class), classes x vocabulary
    feature_log_likelihoods: np.ndarray = None

    # Ordered class names
    class_labels: tuple = ()

    # Digest of the vocabulary the features come from
    vocab_digest: str = ""

    def __init__(
        self,
        class_log_priors: np.ndarray,
        feature_log_likelihoods: np.ndarray,
        class_labels: Sequence[str],
        vocab_digest: str = "",
    ) -> None:

        self.class_log_priors = np.asarray(class_log_priors, dtype=np.float64)
        self.feature_log_likelihoods = np.asarray(
            feature_log_likelihoods, dtype=np.float64
        )
        self.class_labels = tuple(class_labels)
        self.vocab_digest = vocab_digest

        k = len(self.class_labels)
        if self.class_log_priors.shape != (k,) or self.feature_log_likelihoods.shape[0] != k:
            raise InvalidModel("One prior and one likelihood row per class are required")
        if not np.isclose(np.exp(self.class_log_priors).sum(), 1.0, rtol=0, atol=1e-9):
            raise InvalidModel("Class priors do not sum to 1")
        if not np.allclose(
            np.exp(self.feature_log_likelihoods).sum(axis=1), 1.0, rtol=0, atol=1e-9
        ):
            raise InvalidModel("Term likelihoods do not sum to 1")

    @property
    def n_features(self) -> int:
        """
        Returns the vocabulary size
        """

        return self.feature_log_likelihoods.shape[1]

    # Import methods
    from textpgm.baselines.predict import predict_nb, predict_nb_many


class LinearModel:

    """
    Weights and biases of a logistic regression or linear SVM

    Two-class models keep a single weight row scoring class 1;
    larger label sets keep one row per class.
    """

    # LOGISTIC or SVM
    kind: LinearKind = None

    # Weight rows
    weights: np.ndarray = None

    # One bias per weight row
    bias: np.ndarray = None

    # Ordered class names
    class_labels: tuple = ()

    # Digest of the vocabulary the features come from
    vocab_digest: str = ""

    # Training objective after every epoch
    losses: tuple = ()

    def __init__(
        self,
        kind: LinearKind,
        weights: np.ndarray,
        bias: np.ndarray,
        class_labels: Sequence[str],
        vocab_digest: str = "",
        losses: Sequence[float] = (),
    ) -> None:

        self.kind = LinearKind(kind)
        self.weights = np.atleast_2d(np.asarray(weights, dtype=np.float64))
        self.bias = np.atleast_1d(np.asarray(bias, dtype=np.float64))
        self.class_labels = tuple(class_labels)
        self.vocab_digest = vocab_digest
        self.losses = tuple(float(loss) for loss in losses)

        rows = 1 if len(self.class_labels) == 2 else len(self.class_labels)
        if self.weights.shape[0] != rows or self.bias.shape != (rows,):
            raise InvalidModel(f"Expected {rows} weight rows and biases")

    @property
    def n_features(self) -> int:
        """
        Returns the vocabulary size
        """

        return self.weights.shape[1]

    @property
    def binary(self) -> bool:
        """
        Is this a single-row two-class model?
        """

        return len(self.class_labels) == 2

    # Import methods
    from textpgm.baselines.predict import predict_linear, predict_linear_many
