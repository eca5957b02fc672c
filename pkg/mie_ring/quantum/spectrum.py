"""
Copyright 2026 The mie_ring Authors

Licensed under the MIT License. See the LICENSE file in the project root.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy import special

from .error import MieRingDomainError, MieRingSingularityError, MieRingUnboundStateError
from .model import PotentialSpec, UnitSystem, dimensionlessGroups
from .specfun import ArrayLike, gegenbauer, laguerreAssoc, laguerreDeriv, valueFromLog

logger = logging.getLogger(__name__)

_LOG_2 = math.log(2.0)


@dataclass(frozen=True)
class QuantumNumbers:
    """Quantum numbers of a bound state.

    :param n: Radial quantum number, n >= 0.
    :param nTilde: Angular (Gegenbauer) quantum number, nTilde >= 0.
    :param m: Magnetic quantum number, stored as |m|.
    """

    n: int
    nTilde: int
    m: int = 0

    def __post_init__(self):
        for label, value in (("n", self.n), ("nTilde", self.nTilde), ("m", self.m)):
            if int(value) != value:
                raise MieRingDomainError(f"quantum number {label} = {value} must be an integer")
        if self.n < 0 or self.nTilde < 0:
            raise MieRingDomainError(
                f"quantum numbers n = {self.n} and nTilde = {self.nTilde} must not be negative"
            )
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "nTilde", int(self.nTilde))
        object.__setattr__(self, "m", abs(int(self.m)))

    def __str__(self) -> str:
        return f"({self.n}, {self.nTilde}, {self.m})"


@dataclass(frozen=True)
class QuantumState:
    """A bound state with all derived parameters.

    Lengths are in angstrom and energies in eV for physical units.

    :param qn: The quantum numbers.
    :param zeta: sqrt(m^2 + eta) / 2, exponent of sin(theta) is 2 zeta.
    :param ellEff: Effective angular momentum sqrt(m^2 + eta) + nTilde.
    :param gamma: Radial power -1/2 + sqrt((ellEff + 1/2)^2 + 2 mu a / hbar^2).
    :param varsigma: Radial decay constant sqrt(2 mu (c - E)) / hbar.
    :param energy: Energy eigenvalue.
    :param normProduct: Product of radial and angular normalization constants.
    :param logNormProduct: Natural logarithm of normProduct.
    :param c: Constant shift of the potential the energy refers to.
    :param binding: c - E, independent of c.
    :param logRadialNorm: Logarithm of the radial normalization constant.
    :param logAngularNorm: Logarithm of the angular normalization constant.
    """

    qn: QuantumNumbers
    zeta: float
    ellEff: float
    gamma: float
    varsigma: float
    energy: float
    normProduct: float
    logNormProduct: float
    c: float
    binding: float
    logRadialNorm: float
    logAngularNorm: float

    @property
    def gegenbauerParameter(self) -> float:
        return 2.0 * self.zeta + 0.5

    @property
    def laguerreParameter(self) -> float:
        return 2.0 * self.gamma + 1.0


@dataclass(frozen=True)
class DensitySample:
    """Probability density at one point, rho in 1/angstrom^3."""

    r: float
    theta: float
    phi: float
    rho: float


def zetaOf(m: int, eta: float) -> float:
    """Half the square root of m^2 + eta.

    :param m: Magnetic quantum number, the sign does not matter.
    :param eta: Ring strength, eta >= 0.
    :returns: zeta.
    """
    if eta < 0.0:
        raise MieRingDomainError(f"ring strength {eta} must not be negative")
    return 0.5 * math.sqrt(m * m + eta)


def ellEffective(qn: QuantumNumbers, eta: float) -> float:
    """Effective angular momentum sqrt(m^2 + eta) + nTilde, an integer for eta = 0."""
    return 2.0 * zetaOf(qn.m, eta) + qn.nTilde


def decayParameters(
    spec: PotentialSpec, mu: float, n: int, ellEff: float, u: UnitSystem = UnitSystem.PHYSICAL
) -> tuple[float, float, float]:
    """Radial parameters for a real effective angular momentum.

    :param spec: The potential.
    :param mu: Reduced mass.
    :param n: Radial quantum number.
    :param ellEff: Effective angular momentum.
    :param u: Unit system.
    :returns: Tuple (gamma, binding energy c - E, varsigma).
    """
    twoMuA, twoMuB2 = dimensionlessGroups(spec, mu, u)
    root = math.sqrt((ellEff + 0.5) ** 2 + twoMuA)
    gamma = root - 0.5
    binding = twoMuB2 / (1.0 + 2.0 * n + 2.0 * root) ** 2
    varsigma = math.sqrt(mu * u.twoMuScale * binding)
    return gamma, binding, varsigma


def bindingEnergy(
    spec: PotentialSpec, mu: float, qn: QuantumNumbers, u: UnitSystem = UnitSystem.PHYSICAL
) -> float:
    """c - E, which does not depend on c.

    twoMuB2 [1 + 2n + 2 sqrt((ellEff + 1/2)^2 + twoMuA)]^-2
    """
    _, binding, _ = decayParameters(spec, mu, qn.n, ellEffective(qn, spec.eta), u)
    return binding


def energy(
    spec: PotentialSpec, mu: float, qn: QuantumNumbers, u: UnitSystem = UnitSystem.PHYSICAL
) -> float:
    """Energy eigenvalue c - bindingEnergy, equal to c when b = 0.

    :param spec: The potential.
    :param mu: Reduced mass in amu (physical units).
    :param qn: Quantum numbers.
    :param u: Unit system.
    :returns: Energy in eV (physical units).
    """
    return spec.c - bindingEnergy(spec, mu, qn, u)


def _logRadialNorm(n: int, gamma: float, varsigma: float) -> float:
    return 0.5 * (
        special.gammaln(n + 1.0)
        + (2.0 * gamma + 3.0) * math.log(2.0 * varsigma)
        - math.log(2.0 * (n + gamma + 1.0))
        - special.gammaln(n + 2.0 * gamma + 2.0)
    )


def _logAngularNorm(nTilde: int, zeta: float) -> float:
    return 0.5 * (
        special.gammaln(nTilde + 1.0)
        + math.log(nTilde + 2.0 * zeta + 0.5)
        + 2.0 * special.gammaln(2.0 * zeta + 0.5)
        + (8.0 * zeta - 1.0) * _LOG_2
        - 2.0 * math.log(math.pi)
        - special.gammaln(4.0 * zeta + nTilde + 1.0)
    )


def deriveState(
    spec: PotentialSpec, mu: float, qn: QuantumNumbers, u: UnitSystem = UnitSystem.PHYSICAL
) -> QuantumState:
    """Compute all parameters of a bound state.

    varsigma is taken from the binding energy so that it, gamma, zeta and the normalization
    are bit-identical for potentials that differ only in c.

    :param spec: The potential.
    :param mu: Reduced mass.
    :param qn: Quantum numbers.
    :param u: Unit system.
    :returns: The state.
    :raises MieRingUnboundStateError: If c - E <= 0.
    """
    zeta = zetaOf(qn.m, spec.eta)
    ellEff = 2.0 * zeta + qn.nTilde
    gamma, binding, varsigma = decayParameters(spec, mu, qn.n, ellEff, u)
    if not binding > 0.0 or not varsigma > 0.0:
        raise MieRingUnboundStateError(
            f"state {qn} has c - E = {binding}, no bound state without attraction"
        )
    logRadial = _logRadialNorm(qn.n, gamma, varsigma)
    logAngular = _logAngularNorm(qn.nTilde, zeta)
    logProduct = logRadial + logAngular
    state = QuantumState(
        qn=qn,
        zeta=zeta,
        ellEff=ellEff,
        gamma=gamma,
        varsigma=varsigma,
        energy=spec.c - binding,
        normProduct=valueFromLog(logProduct, "normalization product"),
        logNormProduct=logProduct,
        c=spec.c,
        binding=binding,
        logRadialNorm=logRadial,
        logAngularNorm=logAngular,
    )
    logger.debug(
        "state %s: gamma %.6g, varsigma %.6g, E %.12g", qn, gamma, varsigma, state.energy
    )
    return state


def normalizationProduct(state: QuantumState) -> float:
    """Radial times angular normalization constant, evaluated in log space.

    N^2 = n! (2 varsigma)^(2gamma+3) / (2 (n+gamma+1) Gamma(n+2gamma+2))
    M^2 = nTilde! (nTilde+2zeta+1/2) Gamma(2zeta+1/2)^2 2^(8zeta) / (2 pi^2 Gamma(4zeta+nTilde+1))

    :param state: The state.
    :returns: N M.
    """
    logValue = _logRadialNorm(state.qn.n, state.gamma, state.varsigma) + _logAngularNorm(
        state.qn.nTilde, state.zeta
    )
    return valueFromLog(logValue, "normalization product")


def _radialEnvelope(state: QuantumState, r: np.ndarray) -> np.ndarray:
    """N r^gamma e^(-varsigma r), r = 0 included."""
    positive = r > 0.0
    safe = np.where(positive, r, 1.0)
    envelope = np.exp(state.logRadialNorm + state.gamma * np.log(safe) - state.varsigma * safe)
    atOrigin = math.exp(state.logRadialNorm) if state.gamma == 0.0 else 0.0
    return np.where(positive, envelope, atOrigin)


def _asResult(value: np.ndarray, *arguments) -> ArrayLike:
    if all(np.ndim(argument) == 0 for argument in arguments):
        return float(value)
    return value


def radialWavefunction(state: QuantumState, r: ArrayLike) -> ArrayLike:
    """R(r) = N r^gamma e^(-varsigma r) L_n^(2gamma+1)(2 varsigma r).

    Normalized with weight r^2. The prefactor is evaluated through its logarithm because gamma
    reaches several hundred for heavy molecules.

    :param state: The state.
    :param r: Radius >= 0, scalar or array.
    :returns: R with the shape of r.
    """
    ra = np.asarray(r, dtype=float)
    if np.any(ra < 0.0):
        raise MieRingDomainError("radius must not be negative")
    polynomial = laguerreAssoc(state.qn.n, state.laguerreParameter, 2.0 * state.varsigma * ra)
    return _asResult(_radialEnvelope(state, ra) * polynomial, r)


def radialDerivative(state: QuantumState, r: ArrayLike) -> ArrayLike:
    """dR/dr = N r^gamma e^(-varsigma r) [(gamma/r - varsigma) L_n^(2gamma+1) - 2 varsigma L_(n-1)^(2gamma+2)].

    :param state: The state.
    :param r: Radius > 0.
    :returns: The derivative with the shape of r.
    """
    ra = np.asarray(r, dtype=float)
    if np.any(ra <= 0.0):
        raise MieRingDomainError("radius must be positive")
    x = 2.0 * state.varsigma * ra
    alpha = state.laguerreParameter
    logarithmic = (state.gamma / ra if state.gamma != 0.0 else 0.0) - state.varsigma
    bracket = logarithmic * laguerreAssoc(state.qn.n, alpha, x) + 2.0 * state.varsigma * laguerreDeriv(
        state.qn.n, alpha, x
    )
    return _asResult(_radialEnvelope(state, ra) * bracket, r)


def _checkAngle(theta: np.ndarray) -> None:
    if np.any(theta < 0.0) or np.any(theta > math.pi):
        raise MieRingDomainError("polar angle must lie in [0, pi]")


def _angularPrefactor(state: QuantumState) -> float:
    return math.exp(state.logAngularNorm - 2.0 * state.zeta * _LOG_2)


def angularWavefunction(state: QuantumState, theta: ArrayLike) -> ArrayLike:
    """Theta(theta) = M 2^(-2zeta) sin^(2zeta)(theta) C_nTilde^(2zeta+1/2)(cos theta).

    Normalized so that 2 pi times the integral of Theta^2 sin(theta) over [0, pi] is one.

    :param state: The state.
    :param theta: Polar angle in [0, pi].
    :returns: Theta with the shape of theta.
    """
    ta = np.asarray(theta, dtype=float)
    _checkAngle(ta)
    sine = np.abs(np.sin(ta))
    value = (
        _angularPrefactor(state)
        * np.power(sine, 2.0 * state.zeta)
        * gegenbauer(state.qn.nTilde, state.gegenbauerParameter, np.cos(ta))
    )
    return _asResult(value, theta)


def angularDerivative(state: QuantumState, theta: ArrayLike) -> ArrayLike:
    """dTheta/dtheta.

    M 2^(-2zeta) [2zeta cos(theta) sin^(2zeta-1)(theta) C_nTilde^lambda(cos theta)
    - 2 lambda sin^(2zeta+1)(theta) C_(nTilde-1)^(lambda+1)(cos theta)], lambda = 2zeta + 1/2.

    :param state: The state.
    :param theta: Polar angle in [0, pi], open interval when 0 < zeta < 1/2.
    :returns: The derivative with the shape of theta.
    """
    ta = np.asarray(theta, dtype=float)
    _checkAngle(ta)
    zeta = state.zeta
    lam = state.gegenbauerParameter
    sine = np.abs(np.sin(ta))
    cosine = np.cos(ta)
    if 0.0 < zeta < 0.5 and np.any(sine == 0.0):
        raise MieRingSingularityError("angular derivative diverges on the polar axis for zeta < 1/2")

    if zeta == 0.0:
        first = np.zeros_like(ta)
    else:
        first = (
            2.0 * zeta * cosine * np.power(sine, 2.0 * zeta - 1.0)
            * gegenbauer(state.qn.nTilde, lam, cosine)
        )
    if state.qn.nTilde == 0:
        second = np.zeros_like(ta)
    else:
        second = (
            2.0 * lam * np.power(sine, 2.0 * zeta + 1.0)
            * gegenbauer(state.qn.nTilde - 1, lam + 1.0, cosine)
        )
    return _asResult(_angularPrefactor(state) * (first - second), theta)


def probabilityDensity(state: QuantumState, r: ArrayLike, theta: ArrayLike) -> ArrayLike:
    """rho = R(r)^2 Theta(theta)^2, independent of phi and never negative.

    r and theta are broadcast against each other.
    """
    radial = np.asarray(radialWavefunction(state, r))
    angular = np.asarray(angularWavefunction(state, theta))
    return _asResult(np.square(radial) * np.square(angular), r, theta)


def sampleDensity(
    state: QuantumState, r: ArrayLike, theta: ArrayLike, phi: ArrayLike = 0.0
) -> list[DensitySample]:
    """Density samples on the Cartesian product of the given coordinates.

    :param state: The state.
    :param r: Radii.
    :param theta: Polar angles.
    :param phi: Azimuthal angles, rho does not depend on them.
    :returns: Samples ordered by r, then theta, then phi.
    """
    radii = np.atleast_1d(np.asarray(r, dtype=float))
    angles = np.atleast_1d(np.asarray(theta, dtype=float))
    azimuths = np.atleast_1d(np.asarray(phi, dtype=float))
    rho = np.multiply.outer(
        np.square(np.asarray(radialWavefunction(state, radii))),
        np.square(np.asarray(angularWavefunction(state, angles))),
    )
    samples = []
    for i, radius in enumerate(radii):
        for j, angle in enumerate(angles):
            for azimuth in azimuths:
                samples.append(
                    DensitySample(float(radius), float(angle), float(azimuth), float(rho[i, j]))
                )
    return samples
