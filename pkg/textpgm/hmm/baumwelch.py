"""
Baum-Welch Re-Estimation

EM over a corpus of sequences with Rabiner-scaled
forward-backward accumulators.

The code is licensed under the MIT license.
"""

import logging
from typing import List, NamedTuple, Sequence, Tuple
import numpy as np
from textpgm.core.exceptions import EmptyCorpus, ImpossibleSequence
from textpgm.core.loader import processing_handler
from textpgm.interface.base import Base
from textpgm.interface.hmm import BaumWelchConfig, HmmModel
from textpgm.utilities.validations import observation_sequence

logger = logging.getLogger(__name__)


class ExpectedCounts(NamedTuple):
    """
    Sufficient statistics of one sequence
    """

    loglik: float
    initial: np.ndarray
    transitions: np.ndarray
    departures: np.ndarray
    emissions: np.ndarray


def expected_counts(model: HmmModel, obs: np.ndarray) -> ExpectedCounts:
    """
    E-step for one sequence
    """

    loglik, alphas, scales = model.forward_scaled(obs)
    if loglik == -np.inf:
        raise ImpossibleSequence("Training sequence has zero likelihood")

    betas = model.backward_scaled(obs, scales)

    # gamma_t(i) = alpha_t(i) beta_t(i) / c_t under this scaling
    gamma = alphas * betas / scales[:, np.newaxis]

    # sum_t xi_t(i, j)
    transitions = model.A * (
        alphas[:-1].T @ (model.B[:, obs[1:]].T * betas[1:])
    )

    emissions = np.zeros((model.n_states, model.n_symbols))
    np.add.at(emissions.T, obs, gamma)

    return ExpectedCounts(
        loglik, gamma[0], transitions, gamma[:-1].sum(axis=0), emissions
    )


def _normalize(totals: np.ndarray, mass: np.ndarray) -> np.ndarray:
    """
    Divide rows by their mass; massless rows become uniform
    """

    width = totals.shape[1]
    rows = np.full(totals.shape, 1.0 / width)
    visited = mass > 0
    rows[visited] = totals[visited] / mass[visited, np.newaxis]

    # Exact row sums
    rows[visited] /= rows[visited].sum(axis=1, keepdims=True)

    return rows


def reestimate(model: HmmModel, stats: Sequence[ExpectedCounts]) -> HmmModel:
    """
    M-step from accumulated statistics
    """

    initial = sum(s.initial for s in stats)
    transitions = sum(s.transitions for s in stats)
    departures = sum(s.departures for s in stats)
    emissions = sum(s.emissions for s in stats)

    A = _normalize(transitions, departures)
    B = _normalize(emissions, emissions.sum(axis=1))
    pi = _normalize(initial[np.newaxis, :], np.array([initial.sum()]))[0]

    return HmmModel(A, B, pi)


def baum_welch(
    init: HmmModel,
    corpus: Sequence[Sequence[int]],
    max_iters: int = 100,
    tol: float = 1e-6,
) -> Tuple[HmmModel, List[float]]:
    """
    Re-estimate lambda until the relative improvement of the corpus
    log-likelihood drops below tol or max_iters is reached

    history[k] is the log-likelihood of the model entering
    iteration k. When the improvement test stops the loop the
    returned model is the last one evaluated.
    """

    cfg = BaumWelchConfig(max_iters, tol)

    if len(corpus) == 0:
        raise EmptyCorpus("Baum-Welch needs at least one sequence")

    corpus = [observation_sequence(obs, init.n_symbols) for obs in corpus]
    model = init
    history = []

    for iteration in range(cfg.max_iters):

        stats = processing_handler(
            [(model, obs) for obs in corpus], expected_counts, 1, Base.threads
        )
        loglik = float(sum(s.loglik for s in stats))
        logger.debug("iteration %d: log-likelihood %.6f", iteration, loglik)

        if history and loglik - history[-1] <= cfg.tol * abs(history[-1]):
            history.append(loglik)
            break

        history.append(loglik)
        model = reestimate(model, stats)

    return model, history
