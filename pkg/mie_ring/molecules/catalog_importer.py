"""
Copyright 2026 The mie_ring Authors

Licensed under the MIT License. See the LICENSE file in the project root.
"""

import csv
import logging
import re
from dataclasses import dataclass
from typing import Optional

from mie_ring.quantum.error import MieRingCatalogError
from mie_ring.quantum.model import Molecule
from .GOLDEN import *
from .SPECTROSCOPIC import *

logger = logging.getLogger(__name__)

CATALOG_HEADER = ["name", "De_eV", "re_angstrom", "mu_amu"]


def readLinesFromCatalog(path: Optional[str] = None) -> list[str]:
    """Read the lines of a molecule catalog.

    :param path: Path of a CSV file, None selects the embedded catalog.
    :returns: All lines including the header.
    :raises MieRingCatalogError: If the file can not be read.
    """
    if path is None:
        return SPECTROSCOPIC_csv.strip().split("\n")
    try:
        with open(path, "r", encoding="utf-8") as file:
            return file.read().splitlines()
    except OSError as exception:
        raise MieRingCatalogError(4, f"{path}: {exception}") from exception


def parseCatalog(lines: list[str]) -> list[Molecule]:
    """Parse catalog lines into molecules.

    The first non-empty line must be the header ``name,De_eV,re_angstrom,mu_amu``. Empty lines
    are skipped. Line numbers in errors count from 1 including the header.

    :param lines: Lines as returned by :func:`readLinesFromCatalog`.
    :returns: The molecules in file order, empty for an empty file.
    :raises MieRingCatalogError: Code 1 for malformed rows, code 2 for non-positive constants.
    """
    molecules = []
    headerSeen = False
    for lineNumber, row in enumerate(csv.reader(lines), start=1):
        cells = [cell.strip() for cell in row]
        if len(cells) == 0 or all(cell == "" for cell in cells):
            continue
        if not headerSeen:
            if cells != CATALOG_HEADER:
                raise MieRingCatalogError(
                    1, f"line {lineNumber}: expected header {','.join(CATALOG_HEADER)}"
                )
            headerSeen = True
            continue
        if len(cells) != len(CATALOG_HEADER) or cells[0] == "":
            raise MieRingCatalogError(
                1, f"line {lineNumber}: expected {len(CATALOG_HEADER)} columns"
            )
        try:
            De, re_, mu = (float(cell) for cell in cells[1:])
        except ValueError as exception:
            raise MieRingCatalogError(1, f"line {lineNumber}: {exception}") from exception
        try:
            molecules.append(Molecule(cells[0], De, re_, mu))
        except MieRingCatalogError as exception:
            raise MieRingCatalogError(
                2, f"line {lineNumber}: {cells[0]}"
            ) from exception
    logger.debug("parsed %d molecules", len(molecules))
    return molecules


@dataclass(frozen=True)
class GoldenEnergyRow:
    """One printed row of the energy tables.

    :param molecule: Molecule name.
    :param n: Radial quantum number.
    :param nTilde: Angular quantum number.
    :param m: Magnetic quantum number.
    :param firstPair: The two values printed under the Kratzer-Fues header, indexed by eta.
    :param secondPair: The two values printed under the modified Kratzer header, indexed by eta.
    """

    molecule: str
    n: int
    nTilde: int
    m: int
    firstPair: dict[float, float]
    secondPair: dict[float, float]

    def pairFor(self, eta: float) -> tuple[float, float]:
        """The unordered pair of printed energies for one ring strength."""
        return self.firstPair[eta], self.secondPair[eta]


@dataclass(frozen=True)
class GoldenFisherRow:
    """One printed row of the Fisher information table.

    :param values: Printed values indexed by eta.
    """

    molecule: str
    n: int
    nTilde: int
    m: int
    values: dict[float, float]


ENERGY_ETAS = (0.0, 10.0)
FISHER_ETAS = (1.0, 10.0)

_numberPattern = r"(-?[0-9]+\.[0-9]+o?)"
_energyRegex = re.compile(
    r"^([A-Za-z]+)\s+([0-9]+)\s+([0-9]+)\s+([0-9]+)" + (r"\s+" + _numberPattern) * 4 + r"\s*$"
)
_fisherRegex = re.compile(
    r"^([A-Za-z]+)\s+([0-9]+)\s+([0-9]+)\s+([0-9]+)" + (r"\s+" + _numberPattern) * 2 + r"\s*$"
)


def _printedNumber(text: str) -> float:
    """
    One printed cell ends with the letter o instead of the digit 0.
    """
    return float(text.replace("o", "0"))


def _profileLines(profile: str) -> list[str]:
    return [line for line in profile.strip().split("\n") if line.strip() != ""]


def parseGoldenEnergies(profile: str) -> list[GoldenEnergyRow]:
    """Parse an embedded energy table.

    :param profile: Either ``HYDRIDE_ENERGIES_profile`` or ``COMPOUND_ENERGIES_profile``.
    :returns: The rows in printed order.
    :raises MieRingCatalogError: Code 5 for rows not matching the format.
    """
    rows = []
    for lineNumber, line in enumerate(_profileLines(profile), start=1):
        linematch = _energyRegex.match(line)
        if linematch is None:
            raise MieRingCatalogError(5, f"energy row {lineNumber}: {line!r}")
        values = [_printedNumber(linematch.group(i)) for i in range(5, 9)]
        rows.append(
            GoldenEnergyRow(
                molecule=linematch.group(1),
                n=int(linematch.group(2)),
                nTilde=int(linematch.group(3)),
                m=int(linematch.group(4)),
                firstPair=dict(zip(ENERGY_ETAS, values[0:2])),
                secondPair=dict(zip(ENERGY_ETAS, values[2:4])),
            )
        )
    return rows


def parseGoldenFisher(profile: str) -> list[GoldenFisherRow]:
    """Parse the embedded Fisher information table.

    :param profile: ``FISHER_ENTROPIES_profile``.
    :returns: The rows in stored order.
    :raises MieRingCatalogError: Code 5 for rows not matching the format.
    """
    rows = []
    for lineNumber, line in enumerate(_profileLines(profile), start=1):
        linematch = _fisherRegex.match(line)
        if linematch is None:
            raise MieRingCatalogError(5, f"Fisher row {lineNumber}: {line!r}")
        rows.append(
            GoldenFisherRow(
                molecule=linematch.group(1),
                n=int(linematch.group(2)),
                nTilde=int(linematch.group(3)),
                m=int(linematch.group(4)),
                values={
                    FISHER_ETAS[0]: _printedNumber(linematch.group(5)),
                    FISHER_ETAS[1]: _printedNumber(linematch.group(6)),
                },
            )
        )
    return rows


def getHydrideEnergies() -> list[GoldenEnergyRow]:
    return parseGoldenEnergies(HYDRIDE_ENERGIES_profile)


def getCompoundEnergies() -> list[GoldenEnergyRow]:
    return parseGoldenEnergies(COMPOUND_ENERGIES_profile)


def getFisherEntropies() -> list[GoldenFisherRow]:
    return parseGoldenFisher(FISHER_ENTROPIES_profile)
