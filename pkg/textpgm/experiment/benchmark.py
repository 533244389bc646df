"""
Benchmark Step

Run several experiments and aggregate them into one report
and a classifier x dataset grid.

The code is licensed under the MIT license.
"""

import logging
import os
from typing import Dict, List, Optional, Sequence, Tuple
from textpgm.core.exceptions import ConfigError, TextPgmError
from textpgm.core.loader import processing_handler
from textpgm.interface.base import Base
from textpgm.interface.experiment import ExperimentConfig
from textpgm.interface.metrics import EvalResult
from textpgm.interface.runner import Experiment
from textpgm.experiment.config import read_config
from textpgm.experiment.evaluate import write_reports

logger = logging.getLogger(__name__)

# Written into a cell directory when the cell fails
ERROR_FILE = "error.log"

# Classifier column of a configuration that could not be read
UNREADABLE = "config"

Failure = Tuple[str, str, str]


def cell_directory(output: str, position: int, config: ExperimentConfig) -> str:
    """
    Output directory of one benchmark cell
    """

    return os.path.join(
        output, f"{position:02d}-{config.classifier}-{config.source.name}"
    )


def write_error(directory: str, error: Exception) -> str:
    """
    Describe a failure in the cell directory; returns the log path
    """

    os.makedirs(directory, exist_ok=True)
    pointer = os.path.join(directory, ERROR_FILE)
    with open(pointer, "w", encoding="utf-8", newline="\n") as f:
        f.write(f"{type(error).__name__}: {error}\n")

    return pointer


def run_cell(
    config: ExperimentConfig, directory: str
) -> Tuple[Optional[EvalResult], Optional[Failure]]:
    """
    Run one experiment; failures are caught and described
    """

    try:
        return Experiment(config, directory).run(), None
    except (TextPgmError, OSError) as error:
        pointer = write_error(directory, error)
        logger.error(
            "%s on %s failed: %s", config.classifier, config.source.name, error
        )
        return None, (config.classifier, config.source.name, pointer)


def _run_cells(
    configs: Sequence[Tuple[int, ExperimentConfig]],
    output: str,
    rejected: Sequence[Tuple[int, Failure]] = (),
) -> Tuple[List[EvalResult], List[Failure], str]:
    jobs = [
        (config, cell_directory(output, position, config))
        for position, config in configs
    ]
    outcomes = processing_handler(jobs, run_cell, Base.processes, 1)

    results = [result for result, _ in outcomes if result is not None]
    failed: Dict[int, Failure] = dict(rejected)
    for (position, _), (_, failure) in zip(configs, outcomes):
        if failure is not None:
            failed[position] = failure
    failures = [failed[position] for position in sorted(failed)]

    text, _ = write_reports(results, output, failures)
    logger.info(
        "Benchmark: %d cells, %d failed", len(jobs) + len(rejected), len(failures)
    )

    return results, failures, text


def run_benchmark(
    configs: Sequence[ExperimentConfig], output: str
) -> Tuple[List[EvalResult], List[Failure], str]:
    """
    Run every configuration and write the combined reports

    Cells run in a pool of Base.processes workers; results keep
    the configuration order. Returns results, failures and the
    report text.
    """

    return _run_cells(list(enumerate(configs)), output)


def run_benchmark_files(
    paths: Sequence[str],
    output: str,
    overrides: Optional[Dict[str, Dict[str, str]]] = None,
) -> Tuple[List[EvalResult], List[Failure], str]:
    """
    Read and run every configuration file

    A file that cannot be read (bad INI, missing dataset) becomes
    a failed cell named after the file; the other cells still run.
    """

    configs, rejected = [], []

    for position, path in enumerate(paths):
        try:
            configs.append((position, read_config(path, overrides=overrides)))
        except (ConfigError, OSError) as error:
            name = os.path.splitext(os.path.basename(path))[0]
            directory = os.path.join(output, f"{position:02d}-{UNREADABLE}-{name}")
            logger.error("%s could not be read: %s", path, error)
            pointer = write_error(directory, error)
            rejected.append((position, (UNREADABLE, name, pointer)))

    return _run_cells(configs, output, rejected)
