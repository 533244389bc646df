"""
Weighting Enumeration

The code is licensed under the MIT license.
"""

from enum import Enum


class Weighting(Enum):
    """
    The feature weighting schemes of the text pipeline
    """

    TFIDF_WEKA = "tfidf_weka"
    TFIDF_SMOOTH_L2 = "tfidf_smooth_l2"
    BINARY_PRESENCE = "binary_presence"
