"""
Copyright 2026 The mie_ring Authors

Licensed under the MIT License. See the LICENSE file in the project root.
"""

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Optional, Sequence, Union

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .error import MieRingConvergenceError, MieRingDomainError
from .fisher import FISHER_MODE, FisherReport
from .model import PotentialSpec, UnitSystem
from .specfun import QUADRATURE, compositeLegendre, makeQuadrature
from .spectrum import (
    QuantumState,
    angularDerivative,
    angularWavefunction,
    decayParameters,
    probabilityDensity,
    radialDerivative,
    radialWavefunction,
)

logger = logging.getLogger(__name__)

RADIAL_PANELS = 16
RADIAL_ORDERS = (24, 48)
QUADRATURE_TOLERANCE = 1e-8
DERIVATIVE_TOLERANCE = 1e-6
RADIAL_POINTS = 4000
ANGULAR_POINTS = 4000
REFINEMENT_TOLERANCE = 1e-7
MINIMUM_GRID_POINTS = 200


class GRID_SPACING(Enum):
    """
    Spacing of the radial finite difference grid.

    LOG is uniform in ln(r) and requires rMin > 0.
    """

    UNIFORM = "uniform"
    LOG = "log"

    @classmethod
    def fromString(cls, spacing: Union[str, "GRID_SPACING"]) -> "GRID_SPACING":
        if isinstance(spacing, GRID_SPACING):
            return spacing
        normalized = str(spacing).strip().lower()
        for member in cls:
            if member.value == normalized:
                return member
        raise MieRingDomainError(f"unknown grid spacing {spacing!r}")


class ANGULAR_GAUGE(Enum):
    """
    Eigenvalue convention of the angular solver.

    LEGENDRE reports ell(ell+1) of the associated Legendre form with order sqrt(m^2 + eta).
    STATED reports the eigenvalue of the angular equation with the ring term kept as
    eta cos^2/sin^2, which is smaller by eta.
    """

    LEGENDRE = "legendre"
    STATED = "stated"

    @classmethod
    def fromString(cls, gauge: Union[str, "ANGULAR_GAUGE"]) -> "ANGULAR_GAUGE":
        if isinstance(gauge, ANGULAR_GAUGE):
            return gauge
        normalized = str(gauge).strip().lower()
        for member in cls:
            if member.value == normalized:
                return member
        raise MieRingDomainError(f"unknown angular gauge {gauge!r}")


def _radialWindow(gamma: float, varsigma: float, n: int) -> tuple[float, float]:
    """Interval in r outside of which r^2 R^2 is negligible.

    In x = 2 varsigma r the integrand behaves like x^p e^-x with p = 2gamma + 2 + 2n.
    """
    mean = 2.0 * gamma + 3.0 + 2.0 * n
    deviation = math.sqrt(mean)
    lower = max(0.0, mean - 8.0 * deviation)
    upper = mean + 10.0 * deviation + 30.0
    return lower / (2.0 * varsigma), upper / (2.0 * varsigma)


@dataclass(frozen=True)
class RadialGrid:
    """Grid of the radial finite difference solver.

    :param rMin: Left Dirichlet boundary.
    :param rMax: Right Dirichlet boundary.
    :param points: Number of interior points of the coarsest level, at least 200.
    :param spacing: Uniform in r or in ln(r).
    """

    rMin: float
    rMax: float
    points: int = RADIAL_POINTS
    spacing: GRID_SPACING = GRID_SPACING.UNIFORM

    def __post_init__(self):
        object.__setattr__(self, "spacing", GRID_SPACING.fromString(self.spacing))
        if not self.rMin < self.rMax:
            raise MieRingDomainError(f"grid needs rMin < rMax, got {self.rMin}, {self.rMax}")
        if self.rMin < 0.0:
            raise MieRingDomainError("grid must not start at a negative radius")
        if self.spacing is GRID_SPACING.LOG and self.rMin <= 0.0:
            raise MieRingDomainError("logarithmic grid needs rMin > 0")
        if int(self.points) != self.points or self.points < MINIMUM_GRID_POINTS:
            raise MieRingDomainError(
                f"grid needs at least {MINIMUM_GRID_POINTS} points, got {self.points}"
            )

    @classmethod
    def forDecay(
        cls,
        varsigmas: Sequence[float],
        gammas: Sequence[float],
        ns: Sequence[int],
        points: int = RADIAL_POINTS,
        spacing: Union[str, GRID_SPACING] = GRID_SPACING.UNIFORM,
    ) -> "RadialGrid":
        """Grid covering every state given by its decay constant, radial power and node count.

        :param varsigmas: Decay constants.
        :param gammas: Radial powers.
        :param ns: Radial quantum numbers.
        :param points: Interior points of the coarsest level.
        :param spacing: Grid spacing.
        :returns: The grid.
        """
        spacing = GRID_SPACING.fromString(spacing)
        windows = [_radialWindow(g, s, n) for s, g, n in zip(varsigmas, gammas, ns)]
        if len(windows) == 0:
            raise MieRingDomainError("at least one state is needed to size a grid")
        rMin = min(window[0] for window in windows)
        rMax = max(window[1] for window in windows)
        if spacing is GRID_SPACING.LOG:
            rMin = max(rMin, 1e-4 * rMax)
        return cls(rMin, rMax, points, spacing)

    def abscissa(self, points: int) -> np.ndarray:
        """Interior points of a level with the given number of points, in r."""
        if self.spacing is GRID_SPACING.UNIFORM:
            return np.linspace(self.rMin, self.rMax, points + 2)[1:-1]
        return np.exp(np.linspace(math.log(self.rMin), math.log(self.rMax), points + 2)[1:-1])

    def step(self, points: int) -> float:
        """Spacing of a level, in r for uniform and in ln(r) for logarithmic grids."""
        if self.spacing is GRID_SPACING.UNIFORM:
            return (self.rMax - self.rMin) / (points + 1)
        return (math.log(self.rMax) - math.log(self.rMin)) / (points + 1)


@dataclass(frozen=True)
class EigenResult:
    """One eigenpair of a discretized equation.

    :param eigenvalue: Energy in eV for radial results, ell(ell+1) style value for angular ones.
    :param eigenvector: Function values on the abscissa, normalized on the grid, first lobe
        positive.
    :param residualNorm: ||A y - lambda y|| / ||A|| on the finest level.
    :param abscissa: Grid points in r or theta.
    """

    eigenvalue: float
    eigenvector: np.ndarray = field(repr=False)
    residualNorm: float
    abscissa: np.ndarray = field(repr=False)


def _checkConverged(coarse: float, fine: float, what: str) -> float:
    if abs(coarse - fine) > QUADRATURE_TOLERANCE * max(abs(fine), 1e-300):
        raise MieRingConvergenceError(
            f"{what} changed from {coarse!r} to {fine!r} when doubling the quadrature order"
        )
    return fine


def _radialQuadrature(state: QuantumState, integrand: Callable[[np.ndarray], np.ndarray], what: str) -> float:
    """Integral over r with composite Gauss-Legendre at two orders."""
    lower, upper = _radialWindow(state.gamma, state.varsigma, state.qn.n)
    values = []
    for order in RADIAL_ORDERS:
        r, weights = compositeLegendre(lower, upper, RADIAL_PANELS, order)
        values.append(float(np.dot(weights, integrand(r))))
    return _checkConverged(values[0], values[1], what)


def _angularQuadrature(
    state: QuantumState, integrand: Callable[[np.ndarray], np.ndarray], alpha: float, what: str
) -> float:
    """2 pi times the integral over x = cos(theta) in [-1, 1] with Gauss-Jacobi weight (1-x^2)^alpha.

    The integrand receives x and must return the function already divided by the weight.
    """
    values = []
    base = state.qn.nTilde + 4
    for order in (base, 2 * base):
        rule = makeQuadrature(QUADRATURE.GAUSS_JACOBI, order, alpha)
        values.append(2.0 * math.pi * rule.integrate(integrand))
    return _checkConverged(values[0], values[1], what)


def checkNormalization(state: QuantumState, normProduct: Optional[float] = None) -> float:
    """Integral of |Psi|^2 r^2 sin(theta) over all space.

    The radial integral uses composite Gauss-Legendre, the angular one Gauss-Jacobi with weight
    (1-x^2)^(2 zeta), which makes the angular integrand a polynomial.

    :param state: The state.
    :param normProduct: Normalization product to use instead of the one of the state, for
        example 1 for the unnormalized integral.
    :returns: The integral, 1 within 1e-8 for the state's own normalization.
    :raises MieRingConvergenceError: If two quadrature orders disagree by more than 1e-8.
    """
    radial = _radialQuadrature(
        state, lambda r: np.square(radialWavefunction(state, r) * r), "radial normalization"
    )
    alpha = 2.0 * state.zeta

    def angularIntegrand(x: np.ndarray) -> np.ndarray:
        return np.square(angularWavefunction(state, np.arccos(x))) / np.power(1.0 - x * x, alpha)

    angular = _angularQuadrature(state, angularIntegrand, alpha, "angular normalization")
    value = radial * angular
    if normProduct is not None:
        value *= (normProduct / state.normProduct) ** 2
    logger.debug("normalization of %s: %.15g", state.qn, value)
    return value


def _crossCheckDerivatives(state: QuantumState) -> None:
    """Compare the analytic derivatives of rho with central differences of rho."""
    peak = 2.0 * state.gamma + 3.0 + 2.0 * state.qn.n
    mean = peak / (2.0 * state.varsigma)
    spread = math.sqrt(peak) / (2.0 * state.varsigma)
    radii = mean + spread * np.array([-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0])
    radii = radii[radii > 0.01 * spread]
    angles = np.array([0.35, 0.8, 1.2, 1.5, 1.9, 2.4, 2.8])
    r = radii[:, np.newaxis]
    theta = angles[np.newaxis, :]

    radial = radialWavefunction(state, r)
    angular = angularWavefunction(state, theta)
    analyticR = 2.0 * radial * radialDerivative(state, r) * np.square(angular)
    analyticTheta = 2.0 * angular * angularDerivative(state, theta) * np.square(radial)

    stepR = 1e-4 * spread
    differenceR = (
        probabilityDensity(state, r + stepR, theta) - probabilityDensity(state, r - stepR, theta)
    ) / (2.0 * stepR)
    stepTheta = 1e-5
    differenceTheta = (
        probabilityDensity(state, r, theta + stepTheta)
        - probabilityDensity(state, r, theta - stepTheta)
    ) / (2.0 * stepTheta)

    for label, analytic, difference in (
        ("radial", analyticR, differenceR),
        ("angular", analyticTheta, differenceTheta),
    ):
        scale = np.max(np.abs(analytic))
        if scale == 0.0:
            continue
        deviation = np.max(np.abs(analytic - difference))
        if deviation > DERIVATIVE_TOLERANCE * scale:
            raise MieRingConvergenceError(
                f"{label} derivative of the density of {state.qn} deviates from the central "
                f"difference by {deviation / scale:.3g} relative"
            )
    return


def fisherQuadrature(state: QuantumState, crossCheck: bool = True) -> FisherReport:
    """Fisher information by quadrature of its defining integral.

    The integrand (grad rho)^2 / rho is evaluated as 4 (grad sqrt(rho))^2, which stays finite on
    the nodes of rho. The phi integral contributes 2 pi.

    I_r = 4 int R'^2 r^2 dr and I_theta = 4 <r^-2> 2 pi int Theta'^2 sin(theta) dtheta.

    :param state: The state.
    :param crossCheck: Compare the analytic derivatives with central differences of rho first.
    :returns: Report with mode QUADRATURE.
    :raises MieRingConvergenceError: For quadrature drift or derivative mismatch.
    """
    if crossCheck:
        _crossCheckDerivatives(state)

    iR = 4.0 * _radialQuadrature(
        state, lambda r: np.square(radialDerivative(state, r) * r), "radial Fisher integral"
    )
    inverseSquare = _radialQuadrature(
        state, lambda r: np.square(radialWavefunction(state, r)), "mean inverse square radius"
    )
    alpha = 2.0 * state.zeta - 1.0 if state.zeta > 0.0 else 0.0

    def angularIntegrand(x: np.ndarray) -> np.ndarray:
        return np.square(angularDerivative(state, np.arccos(x))) / np.power(1.0 - x * x, alpha)

    angular = _angularQuadrature(state, angularIntegrand, alpha, "angular Fisher integral")
    iTheta = 4.0 * inverseSquare * angular
    return FisherReport(FISHER_MODE.QUADRATURE, (iTheta,), iTheta, (iR,), iR, iTheta + iR)


def _fixSign(vector: np.ndarray) -> np.ndarray:
    """Make the first lobe of significant size positive."""
    significant = np.nonzero(np.abs(vector) > 1e-3 * np.max(np.abs(vector)))[0]
    if len(significant) > 0 and vector[significant[0]] < 0.0:
        return -vector
    return vector


def _tridiagonalResidual(
    diagonal: np.ndarray, offDiagonal: np.ndarray, eigenvalue: float, vector: np.ndarray
) -> float:
    product = diagonal * vector
    product[:-1] += offDiagonal * vector[1:]
    product[1:] += offDiagonal * vector[:-1]
    norm = np.max(
        np.abs(diagonal)
        + np.concatenate(([0.0], np.abs(offDiagonal)))
        + np.concatenate((np.abs(offDiagonal), [0.0]))
    )
    return float(np.linalg.norm(product - eigenvalue * vector) / norm)


def _lowest(diagonal: np.ndarray, offDiagonal: np.ndarray, k: int) -> tuple[np.ndarray, np.ndarray]:
    return eigh_tridiagonal(diagonal, offDiagonal, select="i", select_range=(0, k - 1))


def _radialMatrix(
    spec: PotentialSpec, kmu: float, ellEff: float, grid: RadialGrid, points: int
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Symmetric tridiagonal matrix of -u'' + W u with W = (2mu a + l(l+1))/r^2 - 2mu b/r."""
    r = grid.abscissa(points)
    h = grid.step(points)
    potential = (kmu * spec.a + ellEff * (ellEff + 1.0)) / (r * r) - kmu * spec.b / r
    if grid.spacing is GRID_SPACING.UNIFORM:
        diagonal = 2.0 / (h * h) + potential
        offDiagonal = np.full(points - 1, -1.0 / (h * h))
    else:
        # r = e^x and u = e^(x/2) v give -v'' + (1/4 + r^2 W) v = eps r^2 v, symmetrized with y = r v
        diagonal = (2.0 / (h * h) + 0.25 + r * r * potential) / (r * r)
        offDiagonal = -1.0 / (h * h) / (r[:-1] * r[1:])
    return diagonal, offDiagonal, r


def radialEigenvalues(
    spec: PotentialSpec,
    mu: float,
    ellEff: float,
    u: UnitSystem = UnitSystem.PHYSICAL,
    grid: Optional[RadialGrid] = None,
    k: int = 1,
) -> np.ndarray:
    """Lowest k finite difference eigenvalues of the radial equation on one grid level.

    :param spec: The potential.
    :param mu: Reduced mass.
    :param ellEff: Effective angular momentum.
    :param u: Unit system.
    :param grid: The grid, its points give the level.
    :param k: Number of eigenvalues.
    :returns: Energies in eV, not extrapolated.
    """
    if grid is None:
        grid = _defaultRadialGrid(spec, mu, ellEff, u, k, GRID_SPACING.UNIFORM)
    kmu = mu * u.twoMuScale
    diagonal, offDiagonal, _ = _radialMatrix(spec, kmu, ellEff, grid, grid.points)
    eigenvalues = eigh_tridiagonal(
        diagonal, offDiagonal, eigvals_only=True, select="i", select_range=(0, k - 1)
    )
    return spec.c + eigenvalues / kmu


def _defaultRadialGrid(
    spec: PotentialSpec, mu: float, ellEff: float, u: UnitSystem, k: int, spacing: GRID_SPACING
) -> RadialGrid:
    parameters = [decayParameters(spec, mu, n, ellEff, u) for n in range(k)]
    return RadialGrid.forDecay(
        [p[2] for p in parameters], [p[0] for p in parameters], list(range(k)), spacing=spacing
    )


def _richardson(coarse: np.ndarray, fine: np.ndarray) -> np.ndarray:
    """Removes the h^2 term for a halved spacing."""
    return (4.0 * fine - coarse) / 3.0


def solveRadial(
    spec: PotentialSpec,
    mu: float,
    ellEff: float,
    u: UnitSystem = UnitSystem.PHYSICAL,
    grid: Optional[RadialGrid] = None,
    k: int = 1,
) -> list[EigenResult]:
    """Lowest k bound states of the radial equation by finite differences.

    -u'' + [(2mu a/hbar^2 + l(l+1))/r^2 - 2mu b/(hbar^2 r)] u = 2mu (E - c)/hbar^2 u with
    Dirichlet ends, l = ellEff real. Three levels with N, 2N+1 and 4N+3 interior points halve the
    spacing twice, two Richardson steps remove the h^2 error.

    :param spec: The potential.
    :param mu: Reduced mass.
    :param ellEff: Effective angular momentum.
    :param u: Unit system.
    :param grid: Grid, None sizes one from the analytic decay constants of the k states.
    :param k: Number of states.
    :returns: k results with energies in eV in increasing order.
    :raises MieRingDomainError: If the grid ends before 10/varsigma of the highest state.
    :raises MieRingConvergenceError: If the two extrapolations disagree by more than
        1e-7 (c - E).
    """
    if int(k) != k or k < 1:
        raise MieRingDomainError(f"number of states {k} must be a positive integer")
    k = int(k)
    if grid is None:
        grid = _defaultRadialGrid(spec, mu, ellEff, u, k, GRID_SPACING.UNIFORM)
    _, _, slowest = decayParameters(spec, mu, k - 1, ellEff, u)
    if slowest > 0.0 and grid.rMax < 10.0 / slowest:
        raise MieRingDomainError(
            f"grid ends at {grid.rMax}, the states need at least {10.0 / slowest}"
        )
    kmu = mu * u.twoMuScale

    levels = (grid.points, 2 * grid.points + 1, 4 * grid.points + 3)
    eigenvalues = []
    for index, points in enumerate(levels):
        diagonal, offDiagonal, r = _radialMatrix(spec, kmu, ellEff, grid, points)
        if index < len(levels) - 1:
            values = eigh_tridiagonal(
                diagonal, offDiagonal, eigvals_only=True, select="i", select_range=(0, k - 1)
            )
        else:
            values, vectors = _lowest(diagonal, offDiagonal, k)
        eigenvalues.append(values)

    first = _richardson(eigenvalues[0], eigenvalues[1])
    second = _richardson(eigenvalues[1], eigenvalues[2])
    disagreement = np.abs(first - second)
    allowed = REFINEMENT_TOLERANCE * np.maximum(np.abs(second), 1e-300)
    if np.any(disagreement > allowed):
        worst = int(np.argmax(disagreement / allowed))
        raise MieRingConvergenceError(
            f"radial eigenvalue {worst} not converged: extrapolations differ by "
            f"{disagreement[worst] / kmu:.3g} for c - E = {abs(second[worst]) / kmu:.6g}"
        )

    h = grid.step(levels[-1])
    results = []
    for i in range(k):
        vector = vectors[:, i]
        residual = _tridiagonalResidual(diagonal, offDiagonal, eigenvalues[2][i], vector)
        if grid.spacing is GRID_SPACING.UNIFORM:
            function = vector / math.sqrt(h)
        else:
            function = vector / np.sqrt(r)
            function = function / math.sqrt(np.sum(function * function * r) * h)
        results.append(
            EigenResult(
                eigenvalue=float(spec.c + second[i] / kmu),
                eigenvector=_fixSign(function),
                residualNorm=residual,
                abscissa=r,
            )
        )
    logger.debug(
        "radial solver l = %.6g: %s", ellEff, ", ".join(f"{e.eigenvalue:.12g}" for e in results)
    )
    return results


class ANGULAR_METHOD(Enum):
    """
    Discretization of the angular equation.

    DIRECT discretizes -(1/sin)(sin Theta')' + (m^2 + eta cos^2)/sin^2 Theta = lambda Theta as
    written and assumes nothing about the solution. SUBSTITUTED factors Theta = sin^M f with
    M = sqrt(m^2 + eta) first, which converges faster near the poles but builds the effective
    order into the operator. It is only meaningful when checked against DIRECT.
    """

    DIRECT = "direct"
    SUBSTITUTED = "substituted"

    @classmethod
    def fromString(cls, method: Union[str, "ANGULAR_METHOD"]) -> "ANGULAR_METHOD":
        if isinstance(method, ANGULAR_METHOD):
            return method
        normalized = str(method).strip().lower()
        for member in cls:
            if member.value == normalized:
                return member
        raise MieRingDomainError(f"unknown angular method {method!r}")


def _cellGrid(points: int) -> tuple[float, np.ndarray, np.ndarray]:
    """Cells on (0, pi), centres half a step away from the poles, and their faces."""
    h = math.pi / points
    theta = (np.arange(1, points + 1) - 0.5) * h
    faces = np.arange(0, points + 1) * h
    return h, theta, faces


def _directAngularMatrix(eta: float, m: int, points: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """-(1/sin)(sin Theta')' + (m^2 + eta cos^2)/sin^2 Theta, symmetrized with sin^(1/2).

    The flux through the pole faces vanishes because sin does.
    """
    h, theta, faces = _cellGrid(points)
    sinCell = np.sin(theta)
    sinFace = np.sin(faces)
    sinFace[0] = 0.0
    sinFace[-1] = 0.0
    potential = (m * m + eta * np.square(np.cos(theta))) / np.square(sinCell)
    diagonal = (sinFace[:-1] + sinFace[1:]) / (h * h * sinCell) + potential
    offDiagonal = -sinFace[1:-1] / (h * h * np.sqrt(sinCell[:-1] * sinCell[1:]))
    return diagonal, offDiagonal, theta


def _substitutedAngularMatrix(order: float, points: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """-(w f')'/w with w = sin^(2 order + 1) on the cell grid, symmetrized with w^(1/2).

    Weights enter through their logarithms so that large orders do not underflow.
    """
    h, theta, faces = _cellGrid(points)
    exponent = 2.0 * order + 1.0
    logCell = exponent * np.log(np.sin(theta))
    logFace = np.full(points + 1, -np.inf)
    logFace[1:-1] = exponent * np.log(np.sin(faces[1:-1]))
    diagonal = (np.exp(logFace[:-1] - logCell) + np.exp(logFace[1:] - logCell)) / (h * h)
    offDiagonal = -np.exp(logFace[1:-1] - 0.5 * (logCell[:-1] + logCell[1:])) / (h * h)
    return diagonal, offDiagonal, theta


def solveAngular(
    eta: float,
    m: int,
    k: int,
    points: Optional[int] = None,
    gauge: Union[str, ANGULAR_GAUGE] = ANGULAR_GAUGE.LEGENDRE,
    method: Union[str, ANGULAR_METHOD] = ANGULAR_METHOD.DIRECT,
) -> list[EigenResult]:
    """Lowest k eigenvalues of the angular equation.

    The direct method discretizes the ring term (m^2 + eta cos^2)/sin^2 as it stands, so its
    eigenvalues say by themselves which combination of m and eta sets the effective angular
    momentum. Cell centred grids with N, 2N and 4N cells are extrapolated like the radial solver.

    :param eta: Ring strength, eta >= 0.
    :param m: Magnetic quantum number.
    :param k: Number of eigenvalues, one per nTilde = 0 .. k-1.
    :param points: Cells of the coarsest level, default 4000.
    :param gauge: "legendre" for ell(ell+1), "stated" for ell(ell+1) - eta.
    :param method: "direct" or "substituted", see ANGULAR_METHOD.
    :returns: k results, eigenvectors are Theta on the cell centres.
    :raises MieRingDomainError: For eta < 0 or k < 1.
    :raises MieRingConvergenceError: If the extrapolations disagree by more than
        1e-7 max(1, lambda).
    """
    if eta < 0.0:
        raise MieRingDomainError(f"ring strength {eta} must not be negative")
    if int(k) != k or k < 1:
        raise MieRingDomainError(f"number of states {k} must be a positive integer")
    k = int(k)
    m = abs(int(m))
    gauge = ANGULAR_GAUGE.fromString(gauge)
    method = ANGULAR_METHOD.fromString(method)
    points = ANGULAR_POINTS if points is None else int(points)
    if points < MINIMUM_GRID_POINTS:
        raise MieRingDomainError(f"angular grid needs at least {MINIMUM_GRID_POINTS} cells")

    if method is ANGULAR_METHOD.DIRECT:
        # the direct operator already has the stated eigenvalues
        def build(cells: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
            return _directAngularMatrix(eta, m, cells)

        toLegendre = eta
    else:
        order = math.sqrt(m * m + eta)

        def build(cells: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
            return _substitutedAngularMatrix(order, cells)

        toLegendre = order * (order + 1.0)

    levels = (points, 2 * points, 4 * points)
    eigenvalues = []
    for index, cells in enumerate(levels):
        diagonal, offDiagonal, theta = build(cells)
        if index < len(levels) - 1:
            values = eigh_tridiagonal(
                diagonal, offDiagonal, eigvals_only=True, select="i", select_range=(0, k - 1)
            )
        else:
            values, vectors = _lowest(diagonal, offDiagonal, k)
        eigenvalues.append(values)

    first = _richardson(eigenvalues[0], eigenvalues[1]) + toLegendre
    second = _richardson(eigenvalues[1], eigenvalues[2]) + toLegendre
    disagreement = np.abs(first - second)
    if np.any(disagreement > REFINEMENT_TOLERANCE * np.maximum(1.0, np.abs(second))):
        raise MieRingConvergenceError(
            f"angular eigenvalues not converged, extrapolations differ by {np.max(disagreement):.3g}"
        )

    h = math.pi / levels[-1]
    offset = eta if gauge is ANGULAR_GAUGE.STATED else 0.0
    results = []
    for i in range(k):
        vector = vectors[:, i]
        residual = _tridiagonalResidual(diagonal, offDiagonal, eigenvalues[2][i], vector)
        # y = sin^(1/2) Theta for both methods, sum y^2 = 1 fixes the grid norm
        function = vector / np.sqrt(np.sin(theta)) / math.sqrt(2.0 * math.pi * h)
        results.append(
            EigenResult(
                eigenvalue=float(second[i] - offset),
                eigenvector=_fixSign(function),
                residualNorm=residual,
                abscissa=theta,
            )
        )
    logger.debug(
        "angular solver (%s) eta = %g, m = %d: %s",
        method.value,
        eta,
        m,
        ", ".join(f"{e.eigenvalue:.12g}" for e in results),
    )
    return results


def checkAngularSubstitution(
    eta: float, m: int, k: int, points: Optional[int] = None
) -> tuple[list[EigenResult], list[EigenResult], float]:
    """Solve the angular equation with both methods.

    :returns: Direct results, substituted results and the largest deviation
        |lambda_substituted - lambda_direct| / max(1, lambda_direct), both in the Legendre gauge.
    """
    direct = solveAngular(eta, m, k, points, method=ANGULAR_METHOD.DIRECT)
    substituted = solveAngular(eta, m, k, points, method=ANGULAR_METHOD.SUBSTITUTED)
    deviation = max(
        abs(s.eigenvalue - d.eigenvalue) / max(1.0, abs(d.eigenvalue))
        for d, s in zip(direct, substituted)
    )
    return direct, substituted, deviation


def recoveredEll(eigenvalue: float) -> float:
    """ell from lambda = ell(ell+1), the non-negative root.

    :raises MieRingDomainError: For lambda < -1/4.
    """
    discriminant = 1.0 + 4.0 * eigenvalue
    if discriminant < 0.0:
        raise MieRingDomainError(f"eigenvalue {eigenvalue} is below -1/4")
    return 0.5 * (-1.0 + math.sqrt(discriminant))
