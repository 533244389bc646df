"""
Model Kind Enumeration

The code is licensed under the MIT license.
"""

from enum import Enum


class ModelKind(Enum):
    """
    The classifiers an experiment can train
    """

    BAYESNET = "bayesnet"
    HMM = "hmm"
    NB = "nb"
    LOGREG = "logreg"
    SVM = "svm"


class LinearKind(Enum):
    """
    The loss a linear model was trained with
    """

    LOGISTIC = "logistic"
    SVM = "svm"
