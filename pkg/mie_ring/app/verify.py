"""
Copyright 2026 The mie_ring Authors

Licensed under the MIT License. See the LICENSE file in the project root.
"""

import logging
import math
from dataclasses import dataclass
from typing import Any, Callable, Optional

import numpy as np

from mie_ring.molecules.catalog_importer import (
    ENERGY_ETAS,
    getCompoundEnergies,
    getHydrideEnergies,
)
from mie_ring.quantum.error import MieRingError, MieRingVerificationError
from mie_ring.quantum.fisher import iRClosed, iThetaClosed
from mie_ring.quantum.model import VARIANT, Molecule, PotentialSpec, UnitSystem, findMolecule, fromMolecule, loadMolecules
from mie_ring.quantum.oracle import checkAngularSubstitution, checkNormalization, fisherQuadrature, solveRadial
from mie_ring.quantum.specfun import (
    QUADRATURE,
    gegenbauerRecurrenceCheck,
    gegenbauerWeightDerivativeCheck,
    gegenbauerWeightedSqIntegral,
    gegenbauerWeightedSqIntegralLower,
    gegenbauerWeightedSqQuadrature,
    gegenbauer,
    laguerreAssoc,
    laguerreDerivativeCheck,
    laguerreOffdiagIntegral,
    laguerreOrthogonality,
    laguerreShiftedNormIntegral,
    makeQuadrature,
)
from mie_ring.quantum.spectrum import QuantumNumbers, QuantumState, deriveState, ellEffective

from .config import RunConfig
from .datahandler import DataManager
from .pool import mapCells
from .tables import TABLE_ID, energyCell

logger = logging.getLogger(__name__)

VERIFY_COLUMNS = [
    "category",
    "case",
    "value",
    "reference",
    "deviation",
    "tolerance",
    "status",
    "detail",
]

IDENTITY_TOLERANCE = 1e-10
RECURRENCE_TOLERANCE = 1e-12
DERIVATIVE_TOLERANCE = 1e-6
SHIFT_TOLERANCE = 1e-12
NORMALIZATION_TOLERANCE = 1e-8
SOLVER_TOLERANCE = 1e-6
PART_SUM_TOLERANCE = 1e-10
RADIAL_FISHER_TOLERANCE = 1e-6
FISHER_SHIFT_TOLERANCE = 1e-10

RADIAL_SOLVER_CASES = 10
PART_SUM_DRAWS = 50
RANDOM_SEED = 20260101

ANGULAR_ETAS = (0.0, 1.0, 5.0, 10.0)
ANGULAR_MS = (0, 1, 2, 4)
ANGULAR_LEVELS = 6

GEGENBAUER_PARAMETERS = (0.5, 1.0, 1.5, 2.5, 3.0, 4.0)
GEGENBAUER_NORM_DEGREES = range(0, 7)
LOWERED_PARAMETERS = (1.0, 1.5, 2.0, 3.0)
LAGUERRE_PARAMETERS = (0.5, 1.0, 2.0)
POLYNOMIAL_DEGREES = range(0, 6)
RECURRENCE_PARAMETERS = (0.6, 1.0, 2.5, 5.0)
RECURRENCE_DEGREES = range(0, 11)
RECURRENCE_ARGUMENTS = tuple(float(x) for x in np.linspace(-1.0, 1.0, 21))
SAMPLE_ARGUMENTS = (-0.9, -0.35, 0.1, 0.6, 0.95)


def _check(
    category: str,
    case: str,
    value: float,
    reference: float,
    tolerance: float,
    relative: bool = True,
    detail: Optional[str] = None,
) -> dict[str, Any]:
    """One check record, relative deviation unless the reference vanishes."""
    deviation = abs(value - reference)
    if relative and reference != 0.0:
        deviation /= abs(reference)
    return {
        "category": category,
        "case": case,
        "value": float(value),
        "reference": float(reference),
        "deviation": float(deviation),
        "tolerance": tolerance,
        "status": "pass" if deviation <= tolerance else "fail",
        "detail": detail,
    }


def _error(category: str, case: str, exception: Exception) -> dict[str, Any]:
    return {
        "category": category,
        "case": case,
        "value": None,
        "reference": None,
        "deviation": None,
        "tolerance": None,
        "status": "fail",
        "detail": str(exception),
    }


@dataclass(frozen=True)
class TabulatedState:
    """A state printed in the energy tables."""

    molecule: Molecule
    qn: QuantumNumbers
    eta: float

    def state(self, variant: VARIANT = VARIANT.KRATZER_FUES) -> QuantumState:
        return deriveState(fromMolecule(self.molecule, variant, self.eta), self.molecule.mu, self.qn)

    def __str__(self) -> str:
        return f"{self.molecule.name} {self.qn} eta={self.eta:g}"


def tabulatedStates(catalog: list[Molecule]) -> list[TabulatedState]:
    """The 120 states of both energy tables, in printed order."""
    states = []
    for row in getHydrideEnergies() + getCompoundEnergies():
        molecule = findMolecule(catalog, row.molecule)
        for eta in ENERGY_ETAS:
            states.append(TabulatedState(molecule, QuantumNumbers(row.n, row.nTilde, row.m), eta))
    return states


"""
Special function identities.
"""


def _gegenbauerNormChecks() -> list[dict[str, Any]]:
    checks = []
    for v in GEGENBAUER_PARAMETERS:
        for n in GEGENBAUER_NORM_DEGREES:
            checks.append(
                _check(
                    "special-functions",
                    f"gegenbauer norm n={n} v={v:g}",
                    gegenbauerWeightedSqIntegral(n, v),
                    gegenbauerWeightedSqQuadrature(n, v),
                    IDENTITY_TOLERANCE,
                )
            )
    for v in LOWERED_PARAMETERS:
        for n in POLYNOMIAL_DEGREES:
            comparison = gegenbauerWeightedSqIntegralLower(n, v)
            checks.append(
                _check(
                    "special-functions",
                    f"gegenbauer lowered weight n={n} v={v:g}",
                    comparison.corrected,
                    comparison.quadrature,
                    IDENTITY_TOLERANCE,
                    detail=f"stated closed form {comparison.stated:.12g}",
                )
            )
    return checks


def _laguerreIntegralChecks() -> list[dict[str, Any]]:
    checks = []
    for a in LAGUERRE_PARAMETERS:
        rule = makeQuadrature(QUADRATURE.GAUSS_LAGUERRE, 40, a)
        for n in POLYNOMIAL_DEGREES:
            for m in POLYNOMIAL_DEGREES:
                quadrature = rule.integrate(lambda x: laguerreAssoc(n, a, x) * laguerreAssoc(m, a, x))
                scale = laguerreOrthogonality(max(n, m), max(n, m), a)
                checks.append(
                    _check(
                        "special-functions",
                        f"laguerre orthogonality n={n} m={m} a={a:g}",
                        laguerreOrthogonality(n, m, a) / scale,
                        quadrature / scale,
                        IDENTITY_TOLERANCE,
                        relative=False,
                    )
                )
                if n != m:
                    checks.append(
                        _check(
                            "special-functions",
                            f"laguerre off-diagonal sum n={n} m={m} a={a:g}",
                            laguerreOffdiagIntegral(n, m, a, a, a) / scale,
                            quadrature / scale,
                            IDENTITY_TOLERANCE,
                            relative=False,
                        )
                    )
            shifted = rule.integrate(lambda x: laguerreAssoc(n, a - 1.0, x) ** 2)
            checks.append(
                _check(
                    "special-functions",
                    f"laguerre shifted norm n={n} a={a:g}",
                    laguerreShiftedNormIntegral(n, a),
                    shifted,
                    IDENTITY_TOLERANCE,
                )
            )
    for p, a, b in ((2.0, 1.0, 2.0), (3.5, 2.5, 1.5), (1.0, 0.0, 1.0)):
        rule = makeQuadrature(QUADRATURE.GAUSS_LAGUERRE, 40, p)
        for n in range(0, 4):
            for m in range(0, 4):
                quadrature = rule.integrate(lambda x: laguerreAssoc(n, a, x) * laguerreAssoc(m, b, x))
                checks.append(
                    _check(
                        "special-functions",
                        f"laguerre mixed integral n={n} m={m} p={p:g} a={a:g} b={b:g}",
                        laguerreOffdiagIntegral(n, m, p, a, b),
                        quadrature,
                        IDENTITY_TOLERANCE,
                        relative=abs(quadrature) > 1.0,
                    )
                )
    return checks


def _polynomialIdentityChecks() -> list[dict[str, Any]]:
    checks = []
    for lam in RECURRENCE_PARAMETERS:
        for n in RECURRENCE_DEGREES:
            for x in RECURRENCE_ARGUMENTS:
                scale = max(1.0, abs(gegenbauer(n + 2, lam, x)))
                checks.append(
                    _check(
                        "special-functions",
                        f"gegenbauer recurrence n={n} lambda={lam:g} x={x:g}",
                        gegenbauerRecurrenceCheck(n, lam, x) / scale,
                        0.0,
                        RECURRENCE_TOLERANCE,
                        relative=False,
                    )
                )
    for lam in GEGENBAUER_PARAMETERS:
        for n in range(1, POLYNOMIAL_DEGREES.stop):
            for x in SAMPLE_ARGUMENTS:
                value = (1.0 - x * x) ** (lam - 0.5) * gegenbauer(n, lam, x) ** 2
                checks.append(
                    _check(
                        "special-functions",
                        f"gegenbauer weight derivative n={n} lambda={lam:g} x={x:g}",
                        gegenbauerWeightDerivativeCheck(n, lam, x) / max(1.0, abs(value)),
                        0.0,
                        DERIVATIVE_TOLERANCE,
                        relative=False,
                    )
                )
    for alpha in LAGUERRE_PARAMETERS:
        for n in POLYNOMIAL_DEGREES:
            for x in (0.3, 1.7, 4.0, 9.5):
                scale = max(1.0, abs(laguerreAssoc(n, alpha, x)))
                checks.append(
                    _check(
                        "special-functions",
                        f"laguerre derivative n={n} alpha={alpha:g} x={x:g}",
                        laguerreDerivativeCheck(n, alpha, x) / scale,
                        0.0,
                        DERIVATIVE_TOLERANCE,
                        relative=False,
                    )
                )
    return checks


"""
Cells of the state based categories, module level so that worker processes can run them.
"""


def energyTableCell(cell: tuple) -> list[dict[str, Any]]:
    tableId, row, eta, molecule = cell
    record = energyCell((tableId, row, eta, molecule))
    return [
        _check(
            "energy-tables",
            f"{tableId.toString()} {row.molecule} ({row.n}, {row.nTilde}, {row.m}) eta={eta:g}",
            record["delta"],
            0.0,
            5e-6,
            relative=False,
        )
    ]


def cShiftCell(tabulated: TabulatedState) -> list[dict[str, Any]]:
    kratzerFues = tabulated.state(VARIANT.KRATZER_FUES)
    modified = tabulated.state(VARIANT.MODIFIED_KRATZER)
    checks = [
        _check(
            "c-shift",
            f"energy {tabulated}",
            modified.energy - kratzerFues.energy,
            tabulated.molecule.De,
            SHIFT_TOLERANCE,
        )
    ]
    for label in ("gamma", "varsigma", "normProduct"):
        checks.append(
            _check(
                "c-shift",
                f"{label} {tabulated}",
                getattr(modified, label),
                getattr(kratzerFues, label),
                0.0,
            )
        )
    return checks


def normalizationCell(cell: tuple[TabulatedState, float]) -> list[dict[str, Any]]:
    tabulated, normalizationFactor = cell
    case = f"{tabulated}"
    try:
        state = tabulated.state()
        value = checkNormalization(state, state.normProduct * normalizationFactor)
    except MieRingError as exception:
        return [_error("normalization", case, exception)]
    return [_check("normalization", case, value, 1.0, NORMALIZATION_TOLERANCE, relative=False)]


def radialSolverCell(tabulated: TabulatedState) -> list[dict[str, Any]]:
    case = f"{tabulated}"
    try:
        state = tabulated.state()
        spec = fromMolecule(tabulated.molecule, VARIANT.KRATZER_FUES, tabulated.eta)
        results = solveRadial(spec, tabulated.molecule.mu, state.ellEff, k=tabulated.qn.n + 1)
    except MieRingError as exception:
        return [_error("radial-solver", case, exception)]
    return [_check("radial-solver", case, results[-1].eigenvalue, state.energy, SOLVER_TOLERANCE)]


def angularSolverCell(cell: tuple[float, int]) -> list[dict[str, Any]]:
    eta, m = cell
    try:
        direct, substituted, _ = checkAngularSubstitution(eta, m, ANGULAR_LEVELS)
    except MieRingError as exception:
        return [_error("angular-solver", f"eta={eta:g} m={m}", exception)]
    checks = []
    for nTilde, (result, accelerated) in enumerate(zip(direct, substituted)):
        ell = ellEffective(QuantumNumbers(0, nTilde, m), eta)
        case = f"eta={eta:g} m={m} ntilde={nTilde}"
        checks.append(
            _check(
                "angular-solver",
                case,
                result.eigenvalue,
                ell * (ell + 1.0),
                SOLVER_TOLERANCE,
                relative=ell > 0.0,
            )
        )
        checks.append(
            _check(
                "angular-substitution",
                case,
                accelerated.eigenvalue,
                result.eigenvalue,
                SOLVER_TOLERANCE,
                relative=result.eigenvalue > 1.0,
            )
        )
    return checks


def partSumCell(state: QuantumState) -> list[dict[str, Any]]:
    case = f"{state.qn} zeta={state.zeta:.6g} gamma={state.gamma:.6g}"
    thetaParts, thetaCombined = iThetaClosed(state)
    rParts, rCombined = iRClosed(state)
    return [
        _check("fisher-part-sums", "angular " + case, math.fsum(thetaParts), thetaCombined, PART_SUM_TOLERANCE),
        _check("fisher-part-sums", "radial " + case, math.fsum(rParts), rCombined, PART_SUM_TOLERANCE),
    ]


def radialFisherCell(cell: tuple[str, QuantumState]) -> list[dict[str, Any]]:
    case, state = cell
    try:
        report = fisherQuadrature(state)
    except MieRingError as exception:
        return [_error("fisher-radial-closed-form", case, exception)]
    _, combined = iRClosed(state)
    return [_check("fisher-radial-closed-form", case, combined, report.iR, RADIAL_FISHER_TOLERANCE)]


def fisherInvarianceCell(tabulated: TabulatedState) -> list[dict[str, Any]]:
    case = f"{tabulated}"
    try:
        kratzerFues = fisherQuadrature(tabulated.state(VARIANT.KRATZER_FUES))
        modified = fisherQuadrature(tabulated.state(VARIANT.MODIFIED_KRATZER), crossCheck=False)
    except MieRingError as exception:
        return [_error("fisher-positivity", case, exception)]
    positivity = {
        "category": "fisher-positivity",
        "case": case,
        "value": kratzerFues.total,
        "reference": 0.0,
        "deviation": None,
        "tolerance": None,
        "status": "pass" if kratzerFues.total > 0.0 else "fail",
        "detail": None,
    }
    return [
        positivity,
        _check("fisher-c-shift", case, modified.total, kratzerFues.total, FISHER_SHIFT_TOLERANCE),
    ]


def _randomStates(count: int) -> list[QuantumState]:
    """Reproducible random states over a broad parameter range, physical units."""
    rng = np.random.default_rng(RANDOM_SEED)
    states = []
    for _ in range(count):
        molecule = Molecule(
            "random",
            float(rng.uniform(0.5, 10.0)),
            float(rng.uniform(0.5, 3.0)),
            float(rng.uniform(0.5, 50.0)),
        )
        eta = float(rng.uniform(0.5, 20.0))
        qn = QuantumNumbers(int(rng.integers(0, 6)), int(rng.integers(0, 6)), int(rng.integers(0, 5)))
        states.append(deriveState(fromMolecule(molecule, VARIANT.KRATZER_FUES, eta), molecule.mu, qn))
    return states


def _hydrogenicStates() -> list[tuple[str, QuantumState]]:
    """n = 0 states of a/r^2 = 0 and eta = 0 in natural units."""
    spec = PotentialSpec(0.0, 2.0, 0.0, 0.0)
    return [
        (f"hydrogenic (0, {nTilde}, {m})", deriveState(spec, 1.0, QuantumNumbers(0, nTilde, m), UnitSystem.NATURAL))
        for nTilde in range(0, 3)
        for m in range(0, 2)
    ]


def _mapChecks(function: Callable[[Any], list[dict[str, Any]]], cells: list, jobs: int) -> list[dict[str, Any]]:
    checks = []
    for result in mapCells(function, cells, jobs):
        checks.extend(result)
    return checks


@dataclass(frozen=True)
class VerificationReport:
    """All check records of one verification run.

    :param checks: Records with the columns of VERIFY_COLUMNS.
    """

    checks: tuple[dict[str, Any], ...]

    @property
    def failures(self) -> list[dict[str, Any]]:
        return [check for check in self.checks if check["status"] == "fail"]

    @property
    def passed(self) -> bool:
        return len(self.failures) == 0

    def categories(self) -> list[str]:
        """Category names in the order they first appear."""
        return list(dict.fromkeys(check["category"] for check in self.checks))

    def dataManager(self) -> DataManager:
        manager = DataManager(VERIFY_COLUMNS)
        manager.extend(list(self.checks))
        return manager

    def raiseForFailures(self) -> None:
        """
        :raises MieRingVerificationError: If any check failed.
        """
        if not self.passed:
            raise MieRingVerificationError(self.failures)
        return


def runVerify(config: RunConfig, normalizationFactor: float = 1.0) -> VerificationReport:
    """Run the invariant suite.

    --states subsamples the cases of each category, so every category is still exercised.

    :param config: Run configuration, uses states and jobs.
    :param normalizationFactor: Multiplies the normalization product before the normalization
        check. Any value other than 1 must make that check fail.
    :returns: The report, failures are records with status fail.
    """
    catalog = loadMolecules()
    tabulated = tabulatedStates(catalog)
    checks: list[dict[str, Any]] = []

    checks.extend(config.subsample(_gegenbauerNormChecks()))
    checks.extend(config.subsample(_laguerreIntegralChecks()))
    checks.extend(config.subsample(_polynomialIdentityChecks()))

    energyCells = [
        (tableId, row, eta, findMolecule(catalog, row.molecule))
        for tableId, golden in (
            (TABLE_ID.HYDRIDE_ENERGIES, getHydrideEnergies()),
            (TABLE_ID.COMPOUND_ENERGIES, getCompoundEnergies()),
        )
        for row in golden
        for eta in ENERGY_ETAS
    ]
    checks.extend(_mapChecks(energyTableCell, config.subsample(energyCells), 1))

    checks.extend(_mapChecks(cShiftCell, config.subsample(tabulated), 1))

    normalizationCells = [(state, normalizationFactor) for state in config.subsample(tabulated)]
    checks.extend(_mapChecks(normalizationCell, normalizationCells, config.jobs))

    solverStates = config.subsample(
        [tabulated[round(i * (len(tabulated) - 1) / (RADIAL_SOLVER_CASES - 1))] for i in range(RADIAL_SOLVER_CASES)]
    )
    checks.extend(_mapChecks(radialSolverCell, solverStates, config.jobs))

    angularCells = config.subsample([(eta, m) for eta in ANGULAR_ETAS for m in ANGULAR_MS])
    checks.extend(_mapChecks(angularSolverCell, angularCells, config.jobs))

    checks.extend(_mapChecks(partSumCell, config.subsample(_randomStates(PART_SUM_DRAWS)), 1))

    radialCells = _hydrogenicStates() + [
        (f"{state}", state.state()) for state in tabulated if state.qn.n == 0
    ]
    checks.extend(_mapChecks(radialFisherCell, config.subsample(radialCells), config.jobs))

    checks.extend(_mapChecks(fisherInvarianceCell, config.subsample(tabulated), config.jobs))

    report = VerificationReport(tuple(checks))
    logger.info(
        "verification: %d checks in %d categories, %d failed",
        len(report.checks),
        len(report.categories()),
        len(report.failures),
    )
    for failure in report.failures:
        logger.warning("failed %s %s: %s", failure["category"], failure["case"], failure["detail"] or failure["deviation"])
    return report
