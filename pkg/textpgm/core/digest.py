"""
Core Class - Content Digests

The code is licensed under the MIT license.
"""

import hashlib


def text_digest(text: str) -> str:
    """
    Get the SHA-256 digest of a text
    """

    return hashlib.sha256(text.encode("utf-8")).hexdigest()
