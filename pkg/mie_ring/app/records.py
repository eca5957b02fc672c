"""
Copyright 2026 The mie_ring Authors

Licensed under the MIT License. See the LICENSE file in the project root.
"""

import logging
from typing import Any, Iterator

import numpy as np

from mie_ring.quantum.error import MieRingSingularityError
from mie_ring.quantum.fisher import FISHER_MODE, fisherTotal
from mie_ring.quantum.model import VARIANT, Molecule, UnitSystem, fromMolecule, loadMolecules
from mie_ring.quantum.oracle import RadialGrid
from mie_ring.quantum.spectrum import QuantumNumbers, QuantumState, deriveState, sampleDensity

from .config import RunConfig
from .datahandler import ENERGY_FORMAT, DataManager, shiftedEnergy
from .pool import mapCells

logger = logging.getLogger(__name__)

STATE_COLUMNS = ["molecule", "variant", "units", "n", "ntilde", "m", "eta"]

SPECTRUM_COLUMNS = STATE_COLUMNS + [
    "zeta",
    "ell_eff",
    "gamma",
    "varsigma",
    "binding",
    "energy",
    "norm_product",
]

SPECTRUM_FORMATS = {"energy": ENERGY_FORMAT}

FISHER_COLUMNS = STATE_COLUMNS + [
    "i_theta_closed",
    "i_r_closed",
    "total_closed",
    "i_theta_quadrature",
    "i_r_quadrature",
    "total_quadrature",
    "note",
]

DENSITY_COLUMNS = STATE_COLUMNS + ["r", "theta", "phi", "rho"]

DENSITY_RADII = 21
DENSITY_ANGLES = 13


def selectedMolecules(config: RunConfig) -> list[Molecule]:
    """Molecules of a run, the catalog is only loaded when no custom constants are given."""
    if config.isCustom:
        return config.selectMolecules([])
    return config.selectMolecules(loadMolecules())


def iterateStates(config: RunConfig) -> Iterator[tuple[Molecule, VARIANT, float, QuantumState]]:
    """All states of a run in output order: molecule, variant, eta, then quantum numbers."""
    quantumNumbers = config.quantumNumbers()
    for molecule in selectedMolecules(config):
        for variant in config.variants:
            for eta in config.etas:
                spec = fromMolecule(molecule, variant, eta)
                for qn in quantumNumbers:
                    yield molecule, variant, eta, deriveState(spec, molecule.mu, qn, config.units)


def _stateRecord(molecule: Molecule, variant: VARIANT, units: UnitSystem, eta: float, qn: QuantumNumbers) -> dict[str, Any]:
    return {
        "molecule": molecule.name,
        "variant": variant.toString(),
        "units": units.name,
        "n": qn.n,
        "ntilde": qn.nTilde,
        "m": qn.m,
        "eta": float(eta),
    }


def runSpectrum(config: RunConfig) -> DataManager:
    """Energies and derived parameters of every configured state."""
    manager = DataManager(SPECTRUM_COLUMNS, SPECTRUM_FORMATS)
    for molecule, variant, eta, state in iterateStates(config):
        record = _stateRecord(molecule, variant, config.units, eta, state.qn)
        record.update(
            {
                "zeta": state.zeta,
                "ell_eff": state.ellEff,
                "gamma": state.gamma,
                "varsigma": state.varsigma,
                "binding": state.binding,
                "energy": shiftedEnergy(state.binding, state.c),
                "norm_product": state.normProduct,
            }
        )
        manager.addRecord(record)
    logger.info("spectrum: %d states", len(manager))
    return manager


def fisherCell(cell: tuple[Molecule, VARIANT, float, QuantumNumbers, UnitSystem]) -> dict[str, Any]:
    """Closed form and quadrature Fisher information of one state.

    The closed form is left empty where it is singular (zeta = 0).
    """
    molecule, variant, eta, qn, units = cell
    state = deriveState(fromMolecule(molecule, variant, eta), molecule.mu, qn, units)
    record = _stateRecord(molecule, variant, units, eta, qn)
    quadrature = fisherTotal(state, FISHER_MODE.QUADRATURE)
    record.update(
        {
            "i_theta_quadrature": quadrature.iTheta,
            "i_r_quadrature": quadrature.iR,
            "total_quadrature": quadrature.total,
        }
    )
    try:
        closed = fisherTotal(state, FISHER_MODE.CLOSED_FORM)
    except MieRingSingularityError as exception:
        record["note"] = "closed form singular: " + str(exception.errorMessage)
        return record
    record.update(
        {
            "i_theta_closed": closed.iTheta,
            "i_r_closed": closed.iR,
            "total_closed": closed.total,
        }
    )
    if qn.n > 0:
        record["note"] = "radial closed form differs from the integral for n > 0"
    return record


def runFisher(config: RunConfig) -> DataManager:
    """Fisher information of every configured state in both modes."""
    cells = [
        (molecule, variant, eta, state.qn, config.units)
        for molecule, variant, eta, state in iterateStates(config)
    ]
    manager = DataManager(FISHER_COLUMNS)
    manager.extend(mapCells(fisherCell, cells, config.jobs))
    logger.info("fisher: %d states", len(manager))
    return manager


def densityGrid(state: QuantumState) -> tuple[np.ndarray, np.ndarray]:
    """Radii covering the state and polar angles on [0, pi]."""
    grid = RadialGrid.forDecay([state.varsigma], [state.gamma], [state.qn.n])
    radii = np.linspace(grid.rMin, grid.rMax, DENSITY_RADII)
    angles = np.linspace(0.0, np.pi, DENSITY_ANGLES)
    return radii, angles


def runDensity(config: RunConfig) -> DataManager:
    """Probability density samples of every configured state at phi = 0."""
    manager = DataManager(DENSITY_COLUMNS)
    for molecule, variant, eta, state in iterateStates(config):
        base = _stateRecord(molecule, variant, config.units, eta, state.qn)
        radii, angles = densityGrid(state)
        for sample in sampleDensity(state, radii, angles):
            record = dict(base)
            record.update({"r": sample.r, "theta": sample.theta, "phi": sample.phi, "rho": sample.rho})
            manager.addRecord(record)
    logger.info("density: %d samples", len(manager))
    return manager
