"""
Core Class - Exceptions

Every error raised on purpose by the package derives from
TextPgmError, which is also a ValueError.

The code is licensed under the MIT license.
"""

from typing import Optional


class TextPgmError(ValueError):
    """
    Root of the package's exception hierarchy
    """


class ConfigError(TextPgmError):
    """
    Invalid or incomplete experiment configuration
    """


# Corpus


class MissingColumn(TextPgmError):
    """
    A required column is absent from the CSV header
    """

    def __init__(self, column: str) -> None:
        super().__init__(f"Missing column: {column}")
        self.column = column


class MalformedRow(TextPgmError):
    """
    A data row cannot be turned into a document
    """

    def __init__(self, line: int, reason: str = "malformed row") -> None:
        super().__init__(f"Line {line}: {reason}")
        self.line = line


class DuplicateDocument(TextPgmError):
    """
    Two documents share one id
    """

    def __init__(self, doc_id: str) -> None:
        super().__init__(f"Duplicate document id: {doc_id}")
        self.doc_id = doc_id


class EmptyDataset(TextPgmError):
    """
    A file holds no data rows
    """


class UnsupportedArff(TextPgmError):
    """
    ARFF relation outside the string attribute + nominal class shape
    """


class ParseError(TextPgmError):
    """
    Syntax error in an input file
    """

    def __init__(self, line: int, reason: str = "syntax error") -> None:
        super().__init__(f"Line {line}: {reason}")
        self.line = line


class ClassTooSmall(TextPgmError):
    """
    A class has too few documents to be split
    """

    def __init__(self, label: str) -> None:
        super().__init__(f"Class '{label}' needs at least 2 documents")
        self.label = label


class SingleClass(TextPgmError):
    """
    At least two classes are required
    """


# Text preprocessing


class EmptyCorpus(TextPgmError):
    """
    No documents to build from
    """


class VocabMismatch(TextPgmError):
    """
    Features refer to a vocabulary that is not available
    """


# Bayesian networks


class CardinalityOverflow(TextPgmError):
    """
    Too many parent configurations for one variable
    """

    def __init__(self, var: int, configurations: int, limit: int) -> None:
        super().__init__(
            f"Variable {var} has {configurations} parent configurations (limit {limit})"
        )
        self.var = var


class InvalidAlpha(TextPgmError):
    """
    Equivalent sample size must be positive
    """


class InvalidStructure(TextPgmError):
    """
    A graph violates the DAG or classifier constraints
    """


class TooFewVariables(TextPgmError):
    """
    Tree augmentation needs at least two features
    """


class ValueOutOfRange(TextPgmError):
    """
    A variable takes a state outside its cardinality
    """

    def __init__(self, var: int, value: Optional[int] = None) -> None:
        super().__init__(f"Value {value} out of range for variable {var}")
        self.var = var


# Hidden Markov models


class InvalidModel(TextPgmError):
    """
    Model parameters are not stochastic
    """


class SymbolOutOfRange(TextPgmError):
    """
    An observation symbol is outside the model alphabet
    """


class ImpossibleSequence(TextPgmError):
    """
    An observation sequence has zero likelihood
    """


class EmptyClass(TextPgmError):
    """
    A class has no training documents
    """

    def __init__(self, label: str) -> None:
        super().__init__(f"Class '{label}' has no documents")
        self.label = label


# Baselines


class NegativeFeature(TextPgmError):
    """
    Multinomial naive Bayes requires nonnegative weights
    """


class ColumnOutOfRange(TextPgmError):
    """
    A feature column is outside the model's vocabulary
    """


# Evaluation


class LengthMismatch(TextPgmError):
    """
    Truths and predictions differ in length
    """


class UnknownLabel(TextPgmError):
    """
    A label is not in the label set
    """


class EmptyMatrix(TextPgmError):
    """
    Metrics are undefined on an empty confusion matrix
    """


# Command line


class VocabHashMismatch(TextPgmError):
    """
    Model and data were built from different vocabularies
    """
