"""
Vocabulary Building

The code is licensed under the MIT license.
"""

from collections import Counter
from typing import Iterable, List
from textpgm.core.exceptions import EmptyCorpus
from textpgm.interface.features import PipelineConfig, Vocabulary


def document_frequencies(docs: Iterable[List[str]]) -> tuple:
    """
    Count in how many documents each term occurs
    """

    counter = Counter()
    size = 0

    for tokens in docs:
        counter.update(set(tokens))
        size += 1

    return counter, size


def build_vocabulary(docs: Iterable[List[str]], cfg: PipelineConfig) -> Vocabulary:
    """
    Keep the words_to_keep terms with the highest document frequency

    Ties are broken lexicographically; columns follow
    (doc_freq desc, term asc).
    """

    counter, size = document_frequencies(docs)

    if size == 0:
        raise EmptyCorpus("Cannot build a vocabulary from an empty corpus")

    ranked = sorted(counter.items(), key=lambda item: (-item[1], item[0]))
    kept = ranked[: cfg.words_to_keep]

    return Vocabulary([term for term, _ in kept], dict(kept), size)
