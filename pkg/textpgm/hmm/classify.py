"""
Per-Class HMM Scoring

The code is licensed under the MIT license.
"""

from typing import Sequence, Tuple
import numpy as np
from textpgm.core.loader import processing_handler
from textpgm.core.warn import warn
from textpgm.interface.base import Base


def classify_sequence(self, obs: Sequence[int]) -> Tuple[int, np.ndarray]:
    """
    ln P(class) + ln P(O | lambda_class) for every class, and the
    argmax (ties to the lowest class index)
    """

    with np.errstate(divide="ignore"):
        scores = np.log(self.class_priors) + np.array(
            [model.forward_scaled(obs).loglik for model in self.models]
        )

    if np.isneginf(scores).all():
        warn("Sequence is impossible under every class model")

    return int(np.argmax(scores)), scores


def classify_documents(
    self, docs: Sequence[Sequence[str]]
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Encode and classify tokenized documents
    """

    results = processing_handler(
        [(self, self.encode(tokens)) for tokens in docs],
        classify_sequence,
        1,
        Base.threads,
    )

    if not results:
        return np.zeros(0, dtype=np.int64), np.zeros((0, len(self.models)))

    return (
        np.array([index for index, _ in results], dtype=np.int64),
        np.vstack([scores for _, scores in results]),
    )
