"""
Tokenization

The code is licensed under the MIT license.
"""

from typing import List
from textpgm.interface.features import PipelineConfig


def tokenize(normalized: str, cfg: PipelineConfig = PipelineConfig()) -> List[str]:
    """
    Split normalized text on whitespace, dropping short tokens
    and stopwords
    """

    stopwords = cfg.stopword_list or frozenset()

    return [
        token
        for token in normalized.split()
        if len(token) >= cfg.min_token_length and token not in stopwords
    ]
