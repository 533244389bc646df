"""
Corpus Loader - ARFF Files

Reads the string attribute + nominal class shape of
WEKA's Attribute-Relation File Format. Numeric attributes,
sparse rows and missing values are not supported.

The code is licensed under the MIT license.
"""

import re
import shlex
from typing import List
from textpgm.core.exceptions import ParseError, UnsupportedArff
from textpgm.interface.dataset import Dataset, Document

# @attribute <name> <type>
_ATTRIBUTE = re.compile(r"@attribute\s+('[^']*'|\"[^\"]*\"|\S+)\s+(.+)$", re.I)


def _unquote(value: str) -> str:
    """
    Strip ARFF quotes from a name or nominal value
    """

    value = value.strip()
    if len(value) >= 2 and value[0] == value[-1] and value[0] in "'\"":
        return value[1:-1]

    return value


def _split_row(line: str, number: int) -> List[str]:
    """
    Split a data row on commas, honouring quotes and backslash escapes
    """

    lexer = shlex.shlex(line, posix=True)
    lexer.whitespace = ","
    lexer.whitespace_split = True
    lexer.commenters = ""
    lexer.escapedquotes = "'\""

    try:
        return [field.strip() for field in lexer]
    except ValueError as error:
        raise ParseError(number, str(error)) from error


def load_arff(path: str) -> Dataset:
    """
    Load an ARFF file with one string and one nominal attribute
    """

    attributes = []
    nominal = []
    documents = []
    number = 0
    relation = False
    in_data = False

    with open(path, encoding="utf-8") as f:
        for number, raw in enumerate(f, start=1):

            line = raw.strip()

            # Skip comments and blank lines
            if not line or line.startswith("%"):
                continue

            if in_data:
                if line.startswith("{"):
                    raise UnsupportedArff("Sparse ARFF rows are not supported")
                fields = _split_row(line, number)
                if len(fields) != len(attributes):
                    raise ParseError(
                        number, f"expected {len(attributes)} fields, got {len(fields)}"
                    )
                values = dict(zip((kind for _, kind in attributes), fields))
                if values["class"] == "?":
                    raise ParseError(number, "missing class value")
                if values["class"] not in nominal:
                    raise ParseError(number, f"unknown class '{values['class']}'")
                documents.append(
                    Document(str(len(documents) + 1), values["string"], values["class"])
                )
                continue

            keyword = line.split(None, 1)[0].lower()

            if keyword == "@relation":
                relation = True

            elif keyword == "@attribute":
                found = _ATTRIBUTE.match(line)
                if found is None:
                    raise ParseError(number, "bad attribute declaration")
                declared = found.group(2).strip()
                if declared.startswith("{"):
                    if not declared.endswith("}"):
                        raise ParseError(number, "unterminated nominal declaration")
                    if any(kind == "class" for _, kind in attributes):
                        raise UnsupportedArff("More than one nominal attribute")
                    nominal = [
                        _unquote(value) for value in declared[1:-1].split(",")
                    ]
                    attributes.append((_unquote(found.group(1)), "class"))
                elif declared.lower() == "string":
                    if any(kind == "string" for _, kind in attributes):
                        raise UnsupportedArff("More than one string attribute")
                    attributes.append((_unquote(found.group(1)), "string"))
                else:
                    raise UnsupportedArff(f"Unsupported attribute type: {declared}")

            elif keyword == "@data":
                if not relation:
                    raise ParseError(number, "@data before @relation")
                kinds = {kind for _, kind in attributes}
                if "class" not in kinds:
                    raise UnsupportedArff("No nominal class attribute")
                if "string" not in kinds:
                    raise UnsupportedArff("No string attribute")
                in_data = True

            else:
                raise ParseError(number, f"unexpected line: {line[:40]}")

    if not in_data:
        raise ParseError(number, "missing @data section")

    return Dataset(documents, nominal)
