"""
Stratified Split

The code is licensed under the MIT license.
"""

import math
from typing import Tuple
import numpy as np
from textpgm.core.exceptions import ClassTooSmall


def stratified_split(self, spec) -> Tuple["Dataset", "Dataset"]:
    """
    Split the dataset in two, class by class

    Each class contributes floor(fraction x count) documents to the
    first part; classes sorted by name take one extra document in turn
    until the overall size is the closest to fraction x total.
    """

    counts = self.counts()
    for label, count in counts.items():
        if count < 2:
            raise ClassTooSmall(label)

    positions = self._data.groupby("label", sort=True).indices

    # Per-class floor and whether a remainder exists
    quota = {}
    remainders = []
    for label in sorted(positions):
        exact = spec.train_fraction * len(positions[label])
        quota[label] = math.floor(exact + 1e-9)
        if exact - quota[label] > 1e-9:
            remainders.append(label)

    target = math.floor(spec.train_fraction * len(self) + 0.5)
    extra = max(0, target - sum(quota.values()))
    for label in remainders[:extra]:
        quota[label] += 1

    rng = np.random.default_rng(spec.seed)
    first = []
    for label in sorted(positions):
        shuffled = rng.permutation(positions[label])
        first.extend(shuffled[: quota[label]].tolist())

    chosen = np.zeros(len(self), dtype=bool)
    chosen[first] = True

    return (
        self._select(np.flatnonzero(chosen)),
        self._select(np.flatnonzero(~chosen)),
    )
