"""
Text Normalization

The code is licensed under the MIT license.
"""

import re

# Whitespace-delimited token with a scheme or a leading www.
URL_PATTERN = re.compile(r"(?<!\S)(?:[A-Za-z][A-Za-z0-9+.\-]*://|www\.)\S*", re.I)

PUNCTUATION_PATTERN = re.compile(r"[^\w\s]")

SYMBOL_PATTERN = re.compile(r"[\d_]|[^\w\s]")

WHITESPACE_PATTERN = re.compile(r"\s+")


def normalize_text(raw: str, lowercase: bool = True) -> str:
    """
    Replace URLs, strip punctuation, digits and symbols, lowercase
    and collapse whitespace
    """

    text = URL_PATTERN.sub(" URL ", raw)
    text = PUNCTUATION_PATTERN.sub("", text)
    text = SYMBOL_PATTERN.sub("", text)

    if lowercase:
        # Case mapping can emit combining marks
        text = SYMBOL_PATTERN.sub("", text.lower())

    return WHITESPACE_PATTERN.sub(" ", text).strip()
