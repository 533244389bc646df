"""
Structure Search Enumeration

The code is licensed under the MIT license.
"""

from enum import Enum


class Search(Enum):
    """
    The structure search algorithms
    """

    NAIVE = "naive"
    K2 = "k2"
    HILL_CLIMB = "hill_climb"
    REPEATED_HILL_CLIMB = "repeated_hill_climb"
    LAGD = "lagd"
    TABU = "tabu"
    TAN = "tan"
