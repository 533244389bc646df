"""
Core Class - Processing Handler

The code is licensed under the MIT license.
"""

from multiprocessing import Pool
from multiprocessing.pool import ThreadPool
from typing import Callable, Iterable, List


def processing_handler(
    items: Iterable[tuple], work: Callable, cores: int = 1, threads: int = 1
) -> List:
    """
    Run a function over argument tuples (simultaneously)

    Results are returned in input order whatever the
    number of workers.
    """

    items = list(items)

    # Multi-core processing
    if cores > 1 and len(items) > 1:

        # Create process pool
        with Pool(cores) as pool:

            # Process items in pool
            output = pool.starmap(work, items)

            # Wait for Pool to finish
            pool.close()
            pool.join()

    # Multi-thread processing
    elif threads > 1 and len(items) > 1:

        # Create thread pool
        with ThreadPool(threads) as pool:

            # Process items in pool
            output = pool.starmap(work, items)

            # Wait for Pool to finish
            pool.close()
            pool.join()

    # Single-thread processing
    else:

        output = [work(*item) for item in items]

    return output
