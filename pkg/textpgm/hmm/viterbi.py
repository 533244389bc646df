"""
Viterbi Decoding

The code is licensed under the MIT license.
"""

from typing import Sequence, Tuple
import numpy as np
from textpgm.core.exceptions import ImpossibleSequence
from textpgm.utilities.validations import observation_sequence


def viterbi(self, obs: Sequence[int]) -> Tuple[np.ndarray, float]:
    """
    Most probable state path and its log probability

    Computed in log space; backpointer ties go to the lower state.
    """

    obs = observation_sequence(obs, self.n_symbols)
    T, N = len(obs), self.n_states

    with np.errstate(divide="ignore"):
        log_a, log_b, log_pi = np.log(self.A), np.log(self.B), np.log(self.pi)

    backpointers = np.zeros((T, N), dtype=np.int64)
    delta = log_pi + log_b[:, obs[0]]

    for t in range(1, T):
        # candidates[i, j]: best path ending in i, then i -> j
        candidates = delta[:, np.newaxis] + log_a
        backpointers[t] = np.argmax(candidates, axis=0)
        delta = candidates[backpointers[t], np.arange(N)] + log_b[:, obs[t]]

    last = int(np.argmax(delta))
    if delta[last] == -np.inf:
        raise ImpossibleSequence("No state path can emit the sequence")

    path = np.zeros(T, dtype=np.int64)
    path[T - 1] = last
    for t in range(T - 1, 0, -1):
        path[t - 1] = backpointers[t, path[t]]

    return path, float(delta[last])
