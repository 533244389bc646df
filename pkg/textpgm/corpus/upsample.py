"""
Upsample Minority Classes

The code is licensed under the MIT license.
"""

from typing import Iterable, List, Set
import numpy as np
import pandas as pd
from textpgm.core.exceptions import SingleClass
from textpgm.core.warn import warn


def copy_ids(ids: Iterable[str], taken: Set[str]) -> List[str]:
    """
    Ids "<id>#<n>" for copied documents, skipping any id in taken

    New ids are added to taken.
    """

    fresh = []
    for position, doc_id in enumerate(ids, start=1):
        n = position
        while f"{doc_id}#{n}" in taken:
            n += 1
        taken.add(f"{doc_id}#{n}")
        fresh.append(f"{doc_id}#{n}")

    return fresh


def upsample_minority(self, seed: int = 0) -> "Dataset":
    """
    Duplicate documents of smaller classes until every class
    is as large as the majority class
    """

    counts = self.counts()
    counts = counts[counts > 0]

    if len(counts.index) < 2:
        raise SingleClass("Upsampling needs at least two classes")

    majority = counts.max()

    if (counts == majority).all():
        warn("Skipping upsampling of a balanced dataset")
        return self._select(range(len(self)))

    rng = np.random.default_rng(seed)
    positions = self._data.groupby("label", sort=False).indices
    taken = set(self._data["id"])
    extra = []

    # Classes in label order
    for label in self.labels:
        if label not in counts.index or counts[label] == majority:
            continue
        drawn = rng.choice(positions[label], size=majority - counts[label])
        copies = self._data.iloc[drawn].copy()
        copies["id"] = copy_ids(copies["id"], taken)
        extra.append(copies)

    return type(self)(pd.concat([self._data, *extra]), self.labels)
