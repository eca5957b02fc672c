"""
Copyright 2026 The mie_ring Authors

Licensed under the MIT License. See the LICENSE file in the project root.
"""

import logging
import math
import os
from typing import Any, Optional

import numpy as np

from mie_ring.quantum.fisher import FISHER_MODE, fisherTotal
from mie_ring.quantum.model import (
    VARIANT,
    Molecule,
    UnitSystem,
    evalSpec,
    findMolecule,
    fromMolecule,
    loadMolecules,
)
from mie_ring.quantum.spectrum import QuantumNumbers, deriveState

from .config import RunConfig
from .datahandler import ENERGY_FORMAT, DataManager, shiftedEnergy
from .pool import mapCells
from .records import selectedMolecules

logger = logging.getLogger(__name__)

DEFAULT_FIGURE_DIRECTORY = "mie-ring-figures"
DEFAULT_SURFACE_MOLECULE = "ScH"

"""
Parameters of the sweeps in natural units (hbar = 1).
"""
SWEEP_DE = 15.0
SWEEP_RE = 0.8
SWEEP_MU = 1.0
SWEEP_STATES = (QuantumNumbers(0, 0, 0), QuantumNumbers(1, 1, 0), QuantumNumbers(3, 2, 1))
ENERGY_SWEEP_ETAS = (10.0,)
FISHER_SWEEP_ETAS = (1.0, 10.0)
SWEEPS = {
    "mu": np.linspace(0.2, 5.0, 25),
    "re": np.linspace(0.2, 2.0, 25),
    "De": np.linspace(1.0, 30.0, 30),
}

SURFACE_COLUMNS = ["series", "molecule", "eta", "r", "theta", "potential"]
ENERGY_SWEEP_COLUMNS = [
    "series",
    "parameter",
    "value",
    "n",
    "ntilde",
    "m",
    "eta",
    "energy_kratzer_fues",
    "energy_modified",
]
ENERGY_SWEEP_FORMATS = {"energy_kratzer_fues": ENERGY_FORMAT, "energy_modified": ENERGY_FORMAT}
FISHER_SWEEP_COLUMNS = [
    "series",
    "parameter",
    "value",
    "n",
    "ntilde",
    "m",
    "eta",
    "fisher_kratzer_fues",
    "fisher_modified",
    "fisher_closed",
]


def surfaceGrid(re: float) -> tuple[np.ndarray, np.ndarray]:
    """r from r_e/2 to 3 r_e in steps of r_e/20, theta within one radian of the equator."""
    r = re * (1.0 + 0.05 * np.arange(-10, 41))
    theta = 0.5 * math.pi + 0.05 * np.arange(-20, 21)
    return r, theta


def _surfaceMolecule(config: RunConfig) -> Molecule:
    if config.isCustom or config.molecule is not None:
        return selectedMolecules(config)[0]
    return findMolecule(loadMolecules(), DEFAULT_SURFACE_MOLECULE)


def potentialSurface(config: RunConfig, variant: VARIANT) -> DataManager:
    """V(r, theta) of one variant for every configured eta, physical units."""
    molecule = _surfaceMolecule(config)
    series = "surface-" + variant.toString()
    r, theta = surfaceGrid(molecule.re)
    manager = DataManager(SURFACE_COLUMNS)
    for eta in config.etas:
        values = evalSpec(fromMolecule(molecule, variant, eta), r[:, np.newaxis], theta[np.newaxis, :])
        for i, radius in enumerate(r):
            for j, angle in enumerate(theta):
                manager.addRecord(
                    {
                        "series": series,
                        "molecule": molecule.name,
                        "eta": eta,
                        "r": float(radius),
                        "theta": float(angle),
                        "potential": float(values[i, j]),
                    }
                )
    return manager


def sweepMolecule(parameter: str, value: float) -> Molecule:
    constants = {"De": SWEEP_DE, "re": SWEEP_RE, "mu": SWEEP_MU}
    constants[parameter] = float(value)
    return Molecule(f"{parameter}={value:.6g}", constants["De"], constants["re"], constants["mu"])


def energyCell(cell: tuple[str, float, QuantumNumbers, float]) -> dict[str, Any]:
    parameter, value, qn, eta = cell
    molecule = sweepMolecule(parameter, value)
    states = [
        deriveState(fromMolecule(molecule, variant, eta), molecule.mu, qn, UnitSystem.NATURAL)
        for variant in (VARIANT.KRATZER_FUES, VARIANT.MODIFIED_KRATZER)
    ]
    energies = [shiftedEnergy(state.binding, state.c) for state in states]
    return {
        "series": f"energy-vs-{parameter}",
        "parameter": parameter,
        "value": float(value),
        "n": qn.n,
        "ntilde": qn.nTilde,
        "m": qn.m,
        "eta": eta,
        "energy_kratzer_fues": energies[0],
        "energy_modified": energies[1],
    }


def fisherCell(cell: tuple[str, float, QuantumNumbers, float]) -> dict[str, Any]:
    """Quadrature Fisher information of both variants and the closed form."""
    parameter, value, qn, eta = cell
    molecule = sweepMolecule(parameter, value)
    states = [
        deriveState(fromMolecule(molecule, variant, eta), molecule.mu, qn, UnitSystem.NATURAL)
        for variant in (VARIANT.KRATZER_FUES, VARIANT.MODIFIED_KRATZER)
    ]
    totals = [fisherTotal(state, FISHER_MODE.QUADRATURE).total for state in states]
    return {
        "series": f"fisher-vs-{parameter}",
        "parameter": parameter,
        "value": float(value),
        "n": qn.n,
        "ntilde": qn.nTilde,
        "m": qn.m,
        "eta": eta,
        "fisher_kratzer_fues": totals[0],
        "fisher_modified": totals[1],
        "fisher_closed": fisherTotal(states[0], FISHER_MODE.CLOSED_FORM).total,
    }


def _sweepCells(parameter: str, etas: tuple[float, ...]) -> list[tuple[str, float, QuantumNumbers, float]]:
    return [
        (parameter, float(value), qn, eta)
        for eta in etas
        for qn in SWEEP_STATES
        for value in SWEEPS[parameter]
    ]


def runFigures(config: RunConfig) -> dict[str, DataManager]:
    """Data series of the potential surfaces and the parameter sweeps.

    Surfaces use physical units and the selected molecule (ScH without a selection). Sweeps use
    natural units with D_e = 15, r_e = 0.8 and mu = 1 apart from the swept parameter.

    :param config: Run configuration.
    :returns: Series by name, in writing order.
    """
    figures: dict[str, DataManager] = dict()
    for variant in (VARIANT.MODIFIED_KRATZER, VARIANT.KRATZER_FUES):
        figures["surface-" + variant.toString()] = potentialSurface(config, variant)

    for parameter in SWEEPS:
        manager = DataManager(ENERGY_SWEEP_COLUMNS, ENERGY_SWEEP_FORMATS)
        manager.extend(mapCells(energyCell, _sweepCells(parameter, ENERGY_SWEEP_ETAS), config.jobs))
        figures[f"energy-vs-{parameter}"] = manager
    for parameter in SWEEPS:
        manager = DataManager(FISHER_SWEEP_COLUMNS)
        manager.extend(mapCells(fisherCell, _sweepCells(parameter, FISHER_SWEEP_ETAS), config.jobs))
        figures[f"fisher-vs-{parameter}"] = manager
    logger.info("figures: %d series", len(figures))
    return figures


def saveFigures(figures: dict[str, DataManager], config: RunConfig, directory: Optional[str] = None) -> list[str]:
    """Write one file per series.

    :param figures: Series by name.
    :param config: Gives the format and, as out, the directory.
    :param directory: Overrides config.out.
    :returns: The written paths.
    """
    if directory is None:
        directory = config.out if config.out is not None else DEFAULT_FIGURE_DIRECTORY
    paths = []
    for name, manager in figures.items():
        path = os.path.join(directory, f"{name}.{config.outputFormat.value}")
        manager.saveDataAsText(path, config.outputFormat)
        paths.append(path)
    return paths
