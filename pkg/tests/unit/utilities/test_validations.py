"""
Validation Utility Tests

The code is licensed under the MIT license.
"""

import numpy as np
import pytest
from textpgm.core.exceptions import SymbolOutOfRange, TextPgmError
from textpgm.utilities.validations import column_range, observation_sequence


def test_observation_sequence():
    """
    Valid symbols come back as an integer array
    """

    obs = observation_sequence([0, 2, 1], 3)

    assert obs.dtype == np.int64
    assert obs.tolist() == [0, 2, 1]


@pytest.mark.parametrize("symbols", [[3], [-1, 0]])
def test_observation_sequence_out_of_range(symbols):
    """
    Symbols outside the alphabet are refused
    """

    with pytest.raises(SymbolOutOfRange):
        observation_sequence(symbols, 3)


def test_observation_sequence_empty():
    """
    Empty sequences are refused
    """

    with pytest.raises(TextPgmError):
        observation_sequence([], 3)


def test_column_range():
    """
    Column ids must lie in [0, n)
    """

    assert column_range(np.array([], dtype=np.int64), 0)
    assert column_range(np.array([0, 4]), 5)
    assert not column_range(np.array([5]), 5)
