"""
HMM Serialization

A model block is a header (states, symbols, label) followed by
pi, the rows of A and the rows of B with 12 significant digits.
A bank file holds the priors, the symbol vocabulary and one
model block per class.

The code is licensed under the MIT license.
"""

from typing import List, Tuple
import numpy as np
from textpgm.core.exceptions import ParseError
from textpgm.interface.hmm import ClassHmmBank, HmmModel
from textpgm.textprep.io import parse_vocabulary

# Format tag on the first line of a bank file
MAGIC = "# textpgm hmm bank"


def _row(values: np.ndarray) -> str:
    return " ".join("%.12g" % v for v in values)


def model_text(model: HmmModel, label: str = "") -> str:
    """
    Render one model block
    """

    lines = [
        f"hmm {label}",
        f"states {model.n_states}",
        f"symbols {model.n_symbols}",
        "pi " + _row(model.pi),
    ]
    lines.extend("A " + _row(row) for row in model.A)
    lines.extend("B " + _row(row) for row in model.B)

    return "\n".join(lines) + "\n"


class _Cursor:

    """
    Line reader that knows its 1-based line number
    """

    def __init__(self, lines: List[str], number: int = 0) -> None:
        self.lines = lines
        self.number = number

    def take(self, keyword: str) -> str:
        """
        Consume a "<keyword> <value>" line and return the value
        """

        self.number += 1
        if self.number > len(self.lines):
            raise ParseError(self.number, f"expected '{keyword}', got end of file")
        head, _, value = self.lines[self.number - 1].partition(" ")
        if head != keyword:
            raise ParseError(self.number, f"expected '{keyword}'")

        return value

    def floats(self, keyword: str) -> List[float]:
        """
        Consume a line of numbers
        """

        try:
            return [float(v) for v in self.take(keyword).split()]
        except ValueError as error:
            raise ParseError(self.number, str(error)) from error

    def integer(self, keyword: str) -> int:
        """
        Consume a line holding one integer
        """

        try:
            return int(self.take(keyword))
        except ValueError as error:
            raise ParseError(self.number, str(error)) from error


def _parse_model(cursor: _Cursor) -> Tuple[HmmModel, str]:
    label = cursor.take("hmm")
    n = cursor.integer("states")
    cursor.integer("symbols")
    pi = cursor.floats("pi")
    A = [cursor.floats("A") for _ in range(n)]
    B = [cursor.floats("B") for _ in range(n)]

    return HmmModel(A, B, pi), label


def parse_model(text: str) -> HmmModel:
    """
    Parse one model block
    """

    return _parse_model(_Cursor(text.splitlines()))[0]


def bank_text(bank: ClassHmmBank) -> str:
    """
    Render a bank
    """

    vocab_lines = bank.vocab.to_text()
    header = [
        MAGIC,
        f"classes {len(bank.models)}",
        "priors " + _row(bank.class_priors),
        f"vocabulary {vocab_lines.count(chr(10))}",
    ]
    blocks = [
        model_text(model, label) for model, label in zip(bank.models, bank.class_labels)
    ]

    return "\n".join(header) + "\n" + vocab_lines + "".join(blocks)


def parse_bank(text: str) -> ClassHmmBank:
    """
    Parse a bank
    """

    lines = text.splitlines()
    if not lines or lines[0] != MAGIC:
        raise ParseError(1, "not a textpgm hmm bank file")

    cursor = _Cursor(lines, 1)
    k = cursor.integer("classes")
    priors = cursor.floats("priors")
    size = cursor.integer("vocabulary")

    start = cursor.number
    vocab = parse_vocabulary("\n".join(lines[start : start + size]))
    cursor.number += size

    models, labels = [], []
    for _ in range(k):
        model, label = _parse_model(cursor)
        models.append(model)
        labels.append(label)

    return ClassHmmBank(models, priors, labels, vocab)


def write_bank(bank: ClassHmmBank, path: str) -> None:
    """
    Write a bank file
    """

    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(bank_text(bank))


def read_bank(path: str) -> ClassHmmBank:
    """
    Read a bank file
    """

    with open(path, encoding="utf-8") as f:
        return parse_bank(f.read())
