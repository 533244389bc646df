"""
Base Interface Class

The code is licensed under the MIT license.
"""


class Base:

    """
    Base class that provides settings which are used across the package
    """

    # Number of processes used for parallel work
    processes: int = 1

    # Number of threads used for parallel work
    threads: int = 1

    # Default random seed
    seed: int = 0

    # Largest number of parent configurations of one variable
    cardinality_limit: int = 10**6
