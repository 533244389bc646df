"""
Utilities - Validations

The code is licensed under the MIT license.
"""

from typing import Iterable
import numpy as np
from textpgm.core.exceptions import SymbolOutOfRange, TextPgmError


def observation_sequence(symbols: Iterable[int], n_symbols: int) -> np.ndarray:
    """
    Validate an observation sequence O_1..O_T
    """

    obs = np.asarray(list(symbols), dtype=np.int64)

    if obs.ndim != 1 or len(obs) == 0:
        raise TextPgmError("Observation sequences must be non-empty")
    if obs.min() < 0 or obs.max() >= n_symbols:
        raise SymbolOutOfRange(f"Symbols must lie in [0, {n_symbols})")

    return obs


def column_range(indices: np.ndarray, n_columns: int) -> bool:
    """
    Do all column ids lie in [0, n_columns)?
    """

    return len(indices) == 0 or (indices.min() >= 0 and indices.max() < n_columns)
