"""
Network Serialization

Plain text: a header (variables, cardinalities, class labels,
discretization threshold, vocabulary digest), one "parents i: ..."
line per variable, then every CPT row with 12 significant digits.

The code is licensed under the MIT license.
"""

from typing import List
import numpy as np
from textpgm.core.exceptions import ParseError
from textpgm.interface.network import BayesNetClassifier, Cpt, Dag

# Format tag on the first line
MAGIC = "# textpgm bayesnet"


def _number(value: float) -> str:
    return "%.12g" % value


def network_text(model: BayesNetClassifier) -> str:
    """
    Render a classifier in the text format
    """

    lines = [
        MAGIC,
        f"variables {model.dag.n}",
        "cardinalities " + " ".join(str(int(r)) for r in model.cardinalities),
        "classes " + "\t".join(model.class_labels),
        f"threshold {model.threshold!r}",
        f"vocabulary {model.vocab_digest}",
    ]

    for var, family in enumerate(model.dag.parents):
        lines.append(f"parents {var}: " + " ".join(map(str, family)))

    for cpt in model.cpts:
        lines.append(f"cpt {cpt.var}")
        lines.extend(" ".join(map(_number, row)) for row in cpt.table)

    return "\n".join(lines) + "\n"


def write_network(model: BayesNetClassifier, path: str) -> None:
    """
    Write a classifier file
    """

    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(network_text(model))


def _expect(lines: List[str], number: int, keyword: str) -> str:
    """
    Value after a header keyword
    """

    if number > len(lines) or not lines[number - 1].startswith(keyword + " "):
        raise ParseError(number, f"expected '{keyword}'")

    return lines[number - 1][len(keyword) + 1 :]


def parse_network(text: str) -> BayesNetClassifier:
    """
    Parse the text format
    """

    lines = text.splitlines()

    if not lines or lines[0] != MAGIC:
        raise ParseError(1, "not a textpgm bayesnet file")

    try:
        n = int(_expect(lines, 2, "variables"))
        cardinalities = [int(r) for r in _expect(lines, 3, "cardinalities").split()]
        class_labels = _expect(lines, 4, "classes").split("\t")
        threshold = float(_expect(lines, 5, "threshold"))
    except ValueError as error:
        raise ParseError(2, str(error)) from error
    digest = _expect(lines, 6, "vocabulary").strip()

    number = 7
    parents = []
    for var in range(n):
        declared = _expect(lines, number, "parents")
        head, _, family = declared.partition(":")
        if head != str(var):
            raise ParseError(number, f"expected parents of variable {var}")
        parents.append([int(p) for p in family.split()])
        number += 1

    dag = Dag(n, parents)

    cpts = []
    for var in range(n):
        if _expect(lines, number, "cpt") != str(var):
            raise ParseError(number, f"expected cpt {var}")
        rows = int(np.prod([cardinalities[p] for p in dag.parents[var]]))
        table = []
        for offset in range(1, rows + 1):
            if number + offset > len(lines):
                raise ParseError(number + offset, "truncated CPT")
            try:
                table.append([float(v) for v in lines[number + offset - 1].split()])
            except ValueError as error:
                raise ParseError(number + offset, str(error)) from error
        cpts.append(Cpt(var, np.array(table, dtype=np.float64)))
        number += rows + 1

    return BayesNetClassifier(dag, cpts, cardinalities, class_labels, digest, threshold)


def read_network(path: str) -> BayesNetClassifier:
    """
    Read a classifier file
    """

    with open(path, encoding="utf-8") as f:
        return parse_network(f.read())
