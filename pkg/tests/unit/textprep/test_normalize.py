"""
Normalization & Tokenization Tests

The code is licensed under the MIT license.
"""

import random
import pytest
from textpgm.interface.features import PipelineConfig
from textpgm.textprep.normalize import normalize_text
from textpgm.textprep.tokenize import tokenize


def test_normalize_url():
    """
    URLs become the URL token, punctuation goes away
    """

    assert normalize_text("Visit http://x.co NOW!!") == "visit url now"


def test_normalize_www():
    """
    A leading www. is a URL too
    """

    assert normalize_text("see www.example.org today") == "see url today"


def test_normalize_digits():
    """
    Digits and punctuation are removed
    """

    assert normalize_text("Room 101, floor 2") == "room floor"


def test_normalize_empty():
    """
    Empty text stays empty
    """

    assert normalize_text("") == ""


def test_normalize_keep_case():
    """
    Lowercasing can be switched off
    """

    assert normalize_text("Great  Film", lowercase=False) == "Great Film"


def test_tokenize():
    """
    Whitespace split
    """

    assert tokenize("visit url now") == ["visit", "url", "now"]


def test_tokenize_min_length():
    """
    Tokens shorter than the minimum are dropped
    """

    assert tokenize("a b", PipelineConfig(min_token_length=2)) == []


def test_tokenize_stopwords():
    """
    Stopwords are dropped
    """

    cfg = PipelineConfig(stopword_list={"now"})

    assert tokenize("visit url now", cfg) == ["visit", "url"]


FRAGMENTS = (
    "Good",
    "film",
    "BAD",
    "Café",
    "Straße",
    "ΣΟΦΙΑ",
    "İstanbul",
    "naïve",
    "2nd",
    "1999",
    "³",
    "_id",
    "!!",
    "?",
    "...",
    "-",
    "'s",
    "(x)",
    "€",
    "😀",
    "http://x.co/a?b=1",
    "https://Example.org",
    "www.site.net",
    "ftp://host",
    "www",
    "://",
    "\t",
    "\n",
    " ",
    "́",
)


def _random_text(rng: random.Random) -> str:
    pieces = rng.choices(FRAGMENTS, k=rng.randint(0, 8))
    joiners = rng.choices(("", " ", "  ", ".", "/"), k=len(pieces))

    return "".join(piece + joiner for piece, joiner in zip(pieces, joiners))


@pytest.mark.parametrize("lowercase", [True, False])
def test_normalize_idempotent(lowercase):
    """
    Normalizing normalized text changes nothing
    """

    rng = random.Random(7)

    for _ in range(10000):
        raw = _random_text(rng)
        once = normalize_text(raw, lowercase)

        assert normalize_text(once, lowercase) == once, raw
