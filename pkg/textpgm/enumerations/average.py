"""
Averaging Enumeration

The code is licensed under the MIT license.
"""

from enum import Enum


class Average(Enum):
    """
    The ways per-class metrics are aggregated
    """

    MICRO = "micro"
    MACRO = "macro"
    WEIGHTED = "weighted"
