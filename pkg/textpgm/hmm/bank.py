"""
Per-Class HMM Classification

The code is licensed under the MIT license.
"""

import logging
from typing import Dict, List, Optional, Sequence
import numpy as np
from textpgm.core.exceptions import EmptyClass, TextPgmError
from textpgm.core.loader import processing_handler
from textpgm.interface.base import Base
from textpgm.interface.features import PipelineConfig, Vocabulary
from textpgm.interface.hmm import (
    BaumWelchConfig,
    ClassHmmBank,
    HmmModel,
    encode_tokens,
)
from textpgm.textprep.vocabulary import build_vocabulary
from textpgm.hmm.baumwelch import baum_welch

logger = logging.getLogger(__name__)

# Added to random initial rows before normalization
INIT_FLOOR = 1e-3


def random_model(n_states: int, n_symbols: int, rng: np.random.Generator) -> HmmModel:
    """
    Seeded random stochastic model with floored entries
    """

    def rows(shape):
        values = rng.random(shape) + INIT_FLOOR
        return values / values.sum(axis=-1, keepdims=True)

    return HmmModel(rows((n_states, n_states)), rows((n_states, n_symbols)), rows(n_states))


def smooth_emissions(model: HmmModel, weight: float) -> HmmModel:
    """
    Mix every emission row with the uniform distribution
    """

    if weight == 0:
        return model

    B = (1.0 - weight) * model.B + weight / model.n_symbols

    return HmmModel(model.A, B, model.pi)


def train_class_hmms(
    docs: Sequence[Sequence[str]],
    labels: Sequence[int],
    class_labels: Sequence[str],
    n_states: int = 3,
    seed: int = 0,
    bw: BaumWelchConfig = BaumWelchConfig(),
    vocab_size: int = 1000,
    emission_smoothing: float = 1e-6,
    vocab: Optional[Vocabulary] = None,
    history: Optional[Dict[str, List[float]]] = None,
) -> ClassHmmBank:
    """
    Fit one HMM per class with Baum-Welch

    The alphabet is the vocab_size most frequent terms (or the given
    vocabulary) plus the unknown symbol 0. Class c starts from a
    random model drawn with seed [seed, c]. Per-iteration
    log-likelihoods are stored in history under the class name.
    """

    if n_states < 1:
        raise TextPgmError("n_states must be at least 1")
    if not 0 <= emission_smoothing < 1:
        raise TextPgmError("emission_smoothing must lie in [0, 1)")
    if len(docs) != len(labels):
        raise TextPgmError("One label per document is required")

    if vocab is None:
        vocab = build_vocabulary(docs, PipelineConfig(words_to_keep=vocab_size))

    labels = np.asarray(labels, dtype=np.int64)
    counts = np.bincount(labels, minlength=len(class_labels))
    for c, label in enumerate(class_labels):
        if counts[c] == 0:
            raise EmptyClass(label)

    sequences = [encode_tokens(vocab, tokens) for tokens in docs]

    jobs = []
    for c in range(len(class_labels)):
        init = random_model(n_states, len(vocab) + 1, np.random.default_rng([seed, c]))
        corpus = [sequences[k] for k in np.flatnonzero(labels == c)]
        jobs.append((init, corpus, bw.max_iters, bw.tol))

    fitted = processing_handler(jobs, baum_welch, 1, Base.threads)

    models = []
    for label, (model, trace) in zip(class_labels, fitted):
        logger.info(
            "class %s: %d iterations, log-likelihood %.6f", label, len(trace), trace[-1]
        )
        if history is not None:
            history[label] = trace
        models.append(smooth_emissions(model, emission_smoothing))

    return ClassHmmBank(models, counts / counts.sum(), class_labels, vocab)
