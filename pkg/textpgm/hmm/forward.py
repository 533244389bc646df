"""
Scaled Forward-Backward

Every forward step is normalized to sum to one; the scale
factors c_t give ln P(O | lambda) = -sum(ln c_t).

The code is licensed under the MIT license.
"""

from typing import NamedTuple, Sequence
import numpy as np
from textpgm.utilities.validations import observation_sequence


class ForwardResult(NamedTuple):
    """
    Output of the scaled forward pass
    """

    loglik: float
    alphas: np.ndarray
    scales: np.ndarray


def forward_scaled(self, obs: Sequence[int]) -> ForwardResult:
    """
    ln P(O | lambda) with scaled alphas and scale factors

    A zero-probability sequence yields -inf; alphas and scales
    after the impossible step are left at zero.
    """

    obs = observation_sequence(obs, self.n_symbols)
    T, N = len(obs), self.n_states
    alphas = np.zeros((T, N))
    scales = np.zeros(T)

    alpha = self.pi * self.B[:, obs[0]]

    for t in range(T):

        if t > 0:
            alpha = (alphas[t - 1] @ self.A) * self.B[:, obs[t]]

        total = alpha.sum()
        if not total > 0:
            return ForwardResult(-np.inf, alphas, scales)

        scales[t] = 1.0 / total
        alphas[t] = alpha * scales[t]

    return ForwardResult(float(-np.sum(np.log(scales))), alphas, scales)


def backward_scaled(self, obs: Sequence[int], scales: np.ndarray) -> np.ndarray:
    """
    Scaled betas using the forward scale factors
    """

    obs = observation_sequence(obs, self.n_symbols)
    T = len(obs)
    betas = np.zeros((T, self.n_states))

    betas[T - 1] = scales[T - 1]
    for t in range(T - 2, -1, -1):
        betas[t] = scales[t] * (self.A @ (self.B[:, obs[t + 1]] * betas[t + 1]))

    return betas
