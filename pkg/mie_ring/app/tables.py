"""
Copyright 2026 The mie_ring Authors

Licensed under the MIT License. See the LICENSE file in the project root.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Union

from mie_ring.molecules.catalog_importer import (
    ENERGY_ETAS,
    FISHER_ETAS,
    GoldenEnergyRow,
    GoldenFisherRow,
    getCompoundEnergies,
    getFisherEntropies,
    getHydrideEnergies,
)
from mie_ring.quantum.error import MieRingConfigError
from mie_ring.quantum.fisher import FISHER_MODE, fisherTotal
from mie_ring.quantum.model import VARIANT, Molecule, UnitSystem, findMolecule, fromMolecule, loadMolecules
from mie_ring.quantum.spectrum import QuantumNumbers, bindingEnergy, deriveState

from .config import RunConfig
from .datahandler import ENERGY_FORMAT, DataManager, shiftedEnergy
from .pool import mapCells

logger = logging.getLogger(__name__)

ENERGY_TOLERANCE = 5e-6
"""eV, applied to both members of the sorted pair"""

ENERGY_COLUMNS = [
    "table",
    "molecule",
    "n",
    "ntilde",
    "m",
    "eta",
    "energy_kratzer_fues",
    "energy_modified",
    "printed_first",
    "printed_second",
    "delta",
    "status",
]

ENERGY_FORMATS = {"energy_kratzer_fues": ENERGY_FORMAT, "energy_modified": ENERGY_FORMAT}

FISHER_TABLE_COLUMNS = [
    "table",
    "molecule",
    "n",
    "ntilde",
    "m",
    "eta",
    "total_closed",
    "total_quadrature",
    "printed",
    "delta_closed",
    "delta_quadrature",
    "status",
]


class TABLE_ID(Enum):
    """The reproduced tables."""

    HYDRIDE_ENERGIES = "hydride-energies"
    COMPOUND_ENERGIES = "compound-energies"
    FISHER_ENTROPIES = "fisher-entropies"

    @classmethod
    def fromString(cls, tableId: Union[str, "TABLE_ID"]) -> "TABLE_ID":
        if isinstance(tableId, TABLE_ID):
            return tableId
        for member in cls:
            if member.value == str(tableId).strip().lower():
                return member
        raise MieRingConfigError(f"unknown table {tableId!r}")

    def toString(self) -> str:
        return self.value


@dataclass(frozen=True)
class TableArtifact:
    """A recomputed table with its comparison against the printed values.

    :param tableId: The table.
    :param rows: One record per printed row and ring strength.
    """

    tableId: TABLE_ID
    rows: tuple[dict[str, Any], ...]

    @property
    def columns(self) -> list[str]:
        if self.tableId is TABLE_ID.FISHER_ENTROPIES:
            return FISHER_TABLE_COLUMNS
        return ENERGY_COLUMNS

    @property
    def failures(self) -> list[dict[str, Any]]:
        return [row for row in self.rows if row["status"] == "fail"]

    @property
    def passed(self) -> bool:
        """True if no row failed, informational rows never fail."""
        return len(self.failures) == 0

    def dataManager(self) -> DataManager:
        formats = {} if self.tableId is TABLE_ID.FISHER_ENTROPIES else ENERGY_FORMATS
        manager = DataManager(self.columns, formats)
        manager.extend(list(self.rows))
        return manager


def energyCell(cell: tuple[TABLE_ID, GoldenEnergyRow, float, Molecule]) -> dict[str, Any]:
    """Both variants of one printed energy row, compared as unordered pair."""
    tableId, row, eta, molecule = cell
    qn = QuantumNumbers(row.n, row.nTilde, row.m)
    kratzerFues, modified = (
        shiftedEnergy(bindingEnergy(spec, molecule.mu, qn), spec.c)
        for spec in (
            fromMolecule(molecule, VARIANT.KRATZER_FUES, eta),
            fromMolecule(molecule, VARIANT.MODIFIED_KRATZER, eta),
        )
    )
    printed = row.pairFor(eta)
    delta = max(
        abs(computed - value)
        for computed, value in zip(sorted((kratzerFues, modified)), sorted(printed))
    )
    return {
        "table": tableId.toString(),
        "molecule": row.molecule,
        "n": row.n,
        "ntilde": row.nTilde,
        "m": row.m,
        "eta": eta,
        "energy_kratzer_fues": kratzerFues,
        "energy_modified": modified,
        "printed_first": printed[0],
        "printed_second": printed[1],
        "delta": delta,
        "status": "pass" if delta <= ENERGY_TOLERANCE else "fail",
    }


def fisherCell(cell: tuple[GoldenFisherRow, float, Molecule]) -> dict[str, Any]:
    """Closed form and quadrature Fisher information of one printed row, never gated."""
    row, eta, molecule = cell
    qn = QuantumNumbers(row.n, row.nTilde, row.m)
    state = deriveState(fromMolecule(molecule, VARIANT.KRATZER_FUES, eta), molecule.mu, qn, UnitSystem.PHYSICAL)
    report = fisherTotal(state, FISHER_MODE.CLOSED_FORM, withCounterpart=True)
    printed = row.values[eta]
    return {
        "table": TABLE_ID.FISHER_ENTROPIES.toString(),
        "molecule": row.molecule,
        "n": row.n,
        "ntilde": row.nTilde,
        "m": row.m,
        "eta": eta,
        "total_closed": report.total,
        "total_quadrature": report.counterpart.total,
        "printed": printed,
        "delta_closed": report.total - printed,
        "delta_quadrature": report.counterpart.total - printed,
        "status": "informational",
    }


def _rowsFor(config: RunConfig, rows: list) -> list:
    if config.molecule is None:
        return rows
    return [row for row in rows if row.molecule.lower() == config.molecule.strip().lower()]


def runTables(config: RunConfig) -> list[TableArtifact]:
    """Recompute the energy tables and the Fisher table from the catalog.

    Energy rows pass if the sorted pair of computed energies matches the sorted printed pair
    within 5e-6 eV, the printed column headers of the two variants are interchanged. Fisher rows
    are informational only.

    :param config: Run configuration, --molecule restricts the rows, --states subsamples them.
    :returns: One artifact per table.
    :raises MieRingCatalogError: If a printed molecule is missing from the catalog.
    """
    catalog = loadMolecules()
    artifacts = []
    for tableId, golden in (
        (TABLE_ID.HYDRIDE_ENERGIES, getHydrideEnergies()),
        (TABLE_ID.COMPOUND_ENERGIES, getCompoundEnergies()),
    ):
        rows = config.subsample(_rowsFor(config, golden))
        cells = [
            (tableId, row, eta, findMolecule(catalog, row.molecule))
            for row in rows
            for eta in ENERGY_ETAS
        ]
        artifacts.append(TableArtifact(tableId, tuple(mapCells(energyCell, cells, config.jobs))))

    rows = config.subsample(_rowsFor(config, getFisherEntropies()))
    cells = [(row, eta, findMolecule(catalog, row.molecule)) for row in rows for eta in FISHER_ETAS]
    artifacts.append(
        TableArtifact(TABLE_ID.FISHER_ENTROPIES, tuple(mapCells(fisherCell, cells, config.jobs)))
    )

    for artifact in artifacts:
        if artifact.passed:
            logger.info("%s: %d rows", artifact.tableId.toString(), len(artifact.rows))
        else:
            logger.warning(
                "%s: %d of %d rows outside %g eV",
                artifact.tableId.toString(),
                len(artifact.failures),
                len(artifact.rows),
                ENERGY_TOLERANCE,
            )
    return artifacts
