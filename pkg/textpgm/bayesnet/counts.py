"""
Sufficient Statistics

The code is licensed under the MIT license.
"""

from typing import Optional, Sequence
import numpy as np
from textpgm.core.exceptions import CardinalityOverflow
from textpgm.interface.base import Base
from textpgm.interface.network import CountTable, DiscreteData


def configuration_index(data: DiscreteData, parents: Sequence[int]) -> np.ndarray:
    """
    Mixed-radix parent configuration of every instance,
    first parent as the most significant digit
    """

    index = np.zeros(len(data), dtype=np.int64)
    for p in parents:
        index = index * int(data.cardinalities[p]) + data.values[:, p]

    return index


def collect_counts(
    data: DiscreteData,
    var: int,
    parents: Sequence[int],
    limit: Optional[int] = None,
) -> CountTable:
    """
    Tally N_ijk for one variable and parent list
    """

    limit = Base.cardinality_limit if limit is None else limit
    parents = tuple(int(p) for p in parents)

    q = 1
    for p in parents:
        q *= int(data.cardinalities[p])
    if q > limit:
        raise CardinalityOverflow(var, q, limit)

    r = int(data.cardinalities[var])
    cells = configuration_index(data, parents) * r + data.values[:, var]
    counts = np.bincount(cells, minlength=q * r).reshape(q, r)

    return CountTable(var, parents, counts)
