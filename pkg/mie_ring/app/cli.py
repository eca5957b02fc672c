"""
Copyright 2026 The mie_ring Authors

Licensed under the MIT License. See the LICENSE file in the project root.
"""

import argparse
import logging
import os
import sys
from typing import Optional

from mie_ring.quantum.error import (
    MieRingCatalogError,
    MieRingConfigError,
    MieRingDomainError,
    MieRingError,
    MieRingVerificationError,
)

from .config import COMMAND, OUTPUT_FORMAT, RunConfig
from .datahandler import DataManager
from .figures import runFigures, saveFigures
from .records import runDensity, runFisher, runSpectrum
from .tables import runTables
from .verify import VERIFY_COLUMNS, runVerify

logger = logging.getLogger(__name__)

EXIT_SUCCESS = 0
EXIT_VERIFICATION_FAILURE = 1
EXIT_USAGE = 2

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def buildParser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mie-ring",
        description="Bound states, densities and Fisher information of the ring-shaped "
        "Kratzer-Fues and modified Kratzer potentials.",
    )
    parser.add_argument("command", choices=[command.value for command in COMMAND])
    parser.add_argument("--molecule", help="catalog molecule, all molecules if omitted")
    parser.add_argument("--De", type=float, help="custom dissociation energy in eV")
    parser.add_argument("--re", type=float, help="custom equilibrium bond length in angstrom")
    parser.add_argument("--mu", type=float, help="custom reduced mass in amu")
    parser.add_argument("--n", default="0..2", help="radial quantum numbers, e.g. 2 or 0..5")
    parser.add_argument("--ntilde", default="0..2", help="angular quantum numbers")
    parser.add_argument("--m", default="0..2", help="magnetic quantum numbers")
    parser.add_argument("--eta", default="0", help="comma separated ring strengths")
    parser.add_argument(
        "--variant", default="both", help="kratzer-fues, modified or both"
    )
    parser.add_argument("--units", default="physical", choices=["physical", "natural"])
    parser.add_argument(
        "--format",
        default=OUTPUT_FORMAT.CSV.value,
        choices=[outputFormat.value for outputFormat in OUTPUT_FORMAT],
    )
    parser.add_argument(
        "--out", help="output file, directory for tables and figures, standard output if omitted"
    )
    parser.add_argument("--states", type=int, help="subsample size for verify and tables")
    parser.add_argument("--jobs", type=int, default=1, help="worker processes")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    return parser


def configureLogging(verbosity: int) -> None:
    if verbosity >= 2:
        level = logging.DEBUG
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = logging.WARNING
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)
    return


def _dumpFailures(failures: list[dict], columns: list[str]) -> None:
    """Failing cases as CSV on standard error."""
    manager = DataManager(columns)
    manager.extend([{column: failure.get(column) for column in columns} for failure in failures])
    sys.stderr.write(manager.toCsv())
    sys.stderr.flush()
    return


def _runTables(config: RunConfig) -> int:
    artifacts = runTables(config)
    failures = []
    for artifact in artifacts:
        path = None
        if config.out is not None:
            path = os.path.join(config.out, f"{artifact.tableId.toString()}.{config.outputFormat.value}")
        artifact.dataManager().saveDataAsText(path, config.outputFormat)
        failures.extend(artifact.failures)
    if len(failures) > 0:
        _dumpFailures(failures, artifacts[0].columns)
        return EXIT_VERIFICATION_FAILURE
    return EXIT_SUCCESS


def _runVerify(config: RunConfig) -> int:
    report = runVerify(config)
    report.dataManager().saveDataAsText(config.out, config.outputFormat)
    try:
        report.raiseForFailures()
    except MieRingVerificationError as exception:
        logger.error(str(exception))
        _dumpFailures(exception.failures, VERIFY_COLUMNS)
        return EXIT_VERIFICATION_FAILURE
    return EXIT_SUCCESS


def run(config: RunConfig) -> int:
    """Execute one command.

    :param config: The configuration.
    :returns: The exit status.
    """
    if config.command is COMMAND.TABLES:
        return _runTables(config)
    if config.command is COMMAND.VERIFY:
        return _runVerify(config)
    if config.command is COMMAND.FIGURES:
        for path in saveFigures(runFigures(config), config):
            logger.info("written %s", path)
        return EXIT_SUCCESS
    producers = {
        COMMAND.SPECTRUM: runSpectrum,
        COMMAND.FISHER: runFisher,
        COMMAND.DENSITY: runDensity,
    }
    producers[config.command](config).saveDataAsText(config.out, config.outputFormat)
    return EXIT_SUCCESS


def main(argv: Optional[list[str]] = None) -> int:
    """Entry point of the mie-ring command.

    :param argv: Arguments without the program name, None takes them from sys.argv.
    :returns: 0 on success, 1 for verification failures, 2 for usage and configuration errors.
    """
    parser = buildParser()
    try:
        arguments = parser.parse_args(argv)
    except SystemExit as exception:
        return EXIT_SUCCESS if exception.code == 0 else EXIT_USAGE
    configureLogging(arguments.verbose)
    try:
        config = RunConfig.fromArguments(arguments)
        return run(config)
    except (MieRingConfigError, MieRingCatalogError, MieRingDomainError) as exception:
        sys.stderr.write(f"mie-ring: {exception}\n")
        return EXIT_USAGE
    except MieRingError as exception:
        sys.stderr.write(f"mie-ring: {exception}\n")
        return EXIT_VERIFICATION_FAILURE


if __name__ == "__main__":
    sys.exit(main())
