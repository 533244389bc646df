"""
Hidden Markov Model Classes

A discrete HMM lambda = (A, B, pi) and a bank of per-class
models sharing one symbol alphabet.

The code is licensed under the MIT license.
"""

from dataclasses import dataclass
from typing import Iterable, Sequence
import numpy as np
from textpgm.core.exceptions import InvalidModel, TextPgmError
from textpgm.interface.features import Vocabulary

# Stochastic rows must sum to 1 within this tolerance
ROW_TOLERANCE = 1e-9

# Symbol reserved for terms outside the vocabulary
UNKNOWN_SYMBOL = 0


def _stochastic(matrix: np.ndarray, name: str) -> None:
    """
    Check non-negative rows summing to 1
    """

    if (matrix < 0).any() or not np.isfinite(matrix).all():
        raise InvalidModel(f"{name} has negative or non-finite entries")
    if not np.allclose(matrix.sum(axis=-1), 1.0, rtol=0, atol=ROW_TOLERANCE):
        raise InvalidModel(f"{name} rows do not sum to 1")


def encode_tokens(vocab: Vocabulary, tokens: Iterable[str]) -> np.ndarray:
    """
    Symbol i + 1 for vocabulary column i, 0 for anything else
    """

    symbols = [vocab.index.get(term, -1) + 1 for term in tokens]

    return np.asarray(symbols or [UNKNOWN_SYMBOL], dtype=np.int64)


class HmmModel:

    """
    Discrete hidden Markov model
    """

    # N x N transition probabilities a_ij
    A: np.ndarray = None

    # N x M emission probabilities b_j(k)
    B: np.ndarray = None

    # Initial state distribution
    pi: np.ndarray = None

    def __init__(self, A: np.ndarray, B: np.ndarray, pi: np.ndarray) -> None:

        A = np.array(A, dtype=np.float64)
        B = np.array(B, dtype=np.float64)
        pi = np.array(pi, dtype=np.float64)

        if A.ndim != 2 or A.shape[0] != A.shape[1] or A.shape[0] < 1:
            raise InvalidModel("A must be a non-empty square matrix")
        if B.ndim != 2 or B.shape[0] != A.shape[0] or B.shape[1] < 1:
            raise InvalidModel("B must have one row per state")
        if pi.shape != (A.shape[0],):
            raise InvalidModel("pi must have one entry per state")

        _stochastic(A, "A")
        _stochastic(B, "B")
        _stochastic(pi, "pi")

        self.A, self.B, self.pi = A, B, pi
        for matrix in (self.A, self.B, self.pi):
            matrix.setflags(write=False)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, HmmModel)
            and np.array_equal(self.A, other.A)
            and np.array_equal(self.B, other.B)
            and np.array_equal(self.pi, other.pi)
        )

    @property
    def n_states(self) -> int:
        """
        Returns N
        """

        return self.A.shape[0]

    @property
    def n_symbols(self) -> int:
        """
        Returns M
        """

        return self.B.shape[1]

    # Import methods
    from textpgm.hmm.forward import forward_scaled, backward_scaled
    from textpgm.hmm.viterbi import viterbi


@dataclass(frozen=True)
class BaumWelchConfig:
    """
    Stopping rule of Baum-Welch re-estimation
    """

    max_iters: int = 100
    tol: float = 1e-6

    def __post_init__(self) -> None:
        if self.max_iters < 1:
            raise TextPgmError("max_iters must be at least 1")
        if not self.tol > 0:
            raise TextPgmError("tol must be positive")


class ClassHmmBank:

    """
    One HMM per class over a shared symbol alphabet

    Symbol 0 stands for unknown terms, symbol i >= 1 for
    vocabulary column i - 1.
    """

    # One model per class
    models: tuple = ()

    # P(class)
    class_priors: np.ndarray = None

    # Ordered class names
    class_labels: tuple = ()

    # Terms behind symbols 1..M-1
    vocab: Vocabulary = None

    def __init__(
        self,
        models: Sequence[HmmModel],
        class_priors: Sequence[float],
        class_labels: Sequence[str],
        vocab: Vocabulary,
    ) -> None:

        self.models = tuple(models)
        self.class_priors = np.asarray(class_priors, dtype=np.float64)
        self.class_labels = tuple(class_labels)
        self.vocab = vocab

        if not self.models:
            raise InvalidModel("A bank needs at least one model")
        if len(self.class_priors) != len(self.models) or len(self.class_labels) != len(
            self.models
        ):
            raise InvalidModel("One prior and one label per model are required")
        _stochastic(self.class_priors, "class priors")
        for model in self.models:
            if model.n_symbols != len(vocab) + 1:
                raise InvalidModel("Models must emit the shared symbol alphabet")

    @property
    def symbol_vocab(self) -> dict:
        """
        Returns term -> symbol index
        """

        return {term: column + 1 for column, term in enumerate(self.vocab.terms)}

    @property
    def n_symbols(self) -> int:
        """
        Returns the alphabet size, unknown symbol included
        """

        return len(self.vocab) + 1

    def encode(self, tokens: Iterable[str]) -> np.ndarray:
        """
        Map a token stream to symbols

        An empty document becomes the single unknown symbol.
        """

        return encode_tokens(self.vocab, tokens)

    # Import methods
    from textpgm.hmm.classify import classify_sequence, classify_documents
