"""
Copyright 2026 The mie_ring Authors

Licensed under the MIT License. See the LICENSE file in the project root.
"""

import logging
from multiprocessing import Pool
from typing import Callable, Iterable, TypeVar

logger = logging.getLogger(__name__)

Cell = TypeVar("Cell")
Result = TypeVar("Result")


def mapCells(function: Callable[[Cell], Result], cells: Iterable[Cell], jobs: int = 1) -> list[Result]:
    """Evaluate independent cells, in worker processes for jobs > 1.

    The function must be defined at module level so that it can be pickled. Results keep the
    order of the cells, writing them stays in the calling process.

    :param function: Computation of one cell.
    :param cells: The cells.
    :param jobs: Number of worker processes.
    :returns: One result per cell.
    """
    cells = list(cells)
    if jobs <= 1 or len(cells) <= 1:
        return [function(cell) for cell in cells]
    logger.info("evaluating %d cells with %d worker processes", len(cells), jobs)
    with Pool(min(jobs, len(cells))) as p:
        results = p.map(function, cells)
    return results
