"""
Copyright 2026 The mie_ring Authors

Licensed under the MIT License. See the LICENSE file in the project root.
"""

import logging
from dataclasses import dataclass, replace
from enum import Enum
from typing import Optional, Union

from .error import MieRingDomainError, MieRingSingularityError
from .spectrum import QuantumState

logger = logging.getLogger(__name__)


class FISHER_MODE(Enum):
    """
    How a Fisher information value was obtained.
    """

    CLOSED_FORM = "closed-form"
    QUADRATURE = "quadrature"

    @classmethod
    def fromString(cls, mode: Union[str, "FISHER_MODE"]) -> "FISHER_MODE":
        if isinstance(mode, FISHER_MODE):
            return mode
        normalized = str(mode).strip().lower().replace("_", "-")
        for member in cls:
            if member.value == normalized:
                return member
        raise MieRingDomainError(f"unknown Fisher mode {mode!r}")

    def toString(self) -> str:
        return self.value


@dataclass(frozen=True)
class FisherReport:
    """Fisher information of the density of one state, split in angular and radial part.

    Values are in 1/angstrom^2 for physical units.

    :param mode: Closed form or quadrature.
    :param iThetaParts: Angular components, three for the closed form and one for quadrature.
    :param iTheta: Angular part.
    :param iRParts: Radial components, five for the closed form and one for quadrature.
    :param iR: Radial part.
    :param total: iTheta + iR.
    :param counterpart: Report of the other mode when both were requested.
    """

    mode: FISHER_MODE
    iThetaParts: tuple[float, ...]
    iTheta: float
    iRParts: tuple[float, ...]
    iR: float
    total: float
    counterpart: Optional["FisherReport"] = None

    def discrepancy(self) -> dict[str, float]:
        """Differences of this report minus its counterpart.

        :returns: Dictionary with the keys "iTheta", "iR" and "total".
        :raises MieRingDomainError: If the report has no counterpart.
        """
        if self.counterpart is None:
            raise MieRingDomainError("report has no counterpart to compare with")
        return {
            "iTheta": self.iTheta - self.counterpart.iTheta,
            "iR": self.iR - self.counterpart.iR,
            "total": self.total - self.counterpart.total,
        }


def _radialDenominator(state: QuantumState) -> float:
    n = state.qn.n
    return (n + state.gamma + 1.0) * (n + 2.0 * state.gamma + 1.0)


def iThetaClosed(state: QuantumState) -> tuple[tuple[float, float, float], float]:
    """Closed-form angular Fisher components and their combined form.

    The components carry 1/zeta and the third one 1/(4zeta + nTilde - 1). The combined form
    equals the sum of the components.

    :param state: The state.
    :returns: Tuple ((I_theta1, I_theta2, I_theta3), combined).
    :raises MieRingSingularityError: For zeta = 0 or 4 zeta + nTilde - 1 = 0.
    """
    zeta = state.zeta
    nt = state.qn.nTilde
    if zeta == 0.0:
        raise MieRingSingularityError("angular closed form has the factor 1/zeta, zeta = 0")
    lowered = 4.0 * zeta + nt - 1.0
    if lowered == 0.0:
        raise MieRingSingularityError("angular closed form has the factor 1/(4 zeta + nTilde - 1)")

    s2 = state.varsigma * state.varsigma
    scale = zeta * _radialDenominator(state)
    first = -2.0 * s2 * (2.0 * zeta + nt) ** 2 * (8.0 * zeta + 2.0 * nt + 1.0) / scale
    second = -2.0 * nt * s2 * (2.0 * nt + 4.0 * zeta + 1.0) * (4.0 * zeta + nt) / scale
    third = (
        2.0 * nt * s2 * (2.0 * nt + 4.0 * zeta + 1.0) * (4.0 * zeta + nt) * (2.0 * zeta + nt)
        / (scale * lowered)
    )
    combined = (
        2.0 * s2 / scale
        * (
            nt * (4.0 * zeta + nt) * (1.0 - 2.0 * zeta) * (4.0 * zeta + 2.0 * nt + 1.0) / lowered
            - (2.0 * zeta + nt) ** 2 * (2.0 * nt + 8.0 * zeta + 1.0)
        )
    )
    return (first, second, third), combined


def iRClosed(
    state: QuantumState,
) -> tuple[tuple[float, float, float, float, float], float]:
    """Closed-form radial Fisher components and their combined form.

    I_r1 = -8 n s^2/(n+g+1), I_r2 = 8 g^2 s^2/((n+g+1)(n+2g+1)), I_r3 = -8 g s^2/(n+g+1),
    I_r4 = 4 s^2, I_r5 = 8 n s^2/(n+g+1) with g = gamma and s = varsigma. The combined form
    4 s^2/(n+g+1) [2 g^2/(n+2g+1) + n - g + 1] equals their sum. It agrees with the integral of
    the density only for n = 0.

    :param state: The state.
    :returns: Tuple ((I_r1, ..., I_r5), combined).
    """
    n = state.qn.n
    gamma = state.gamma
    s2 = state.varsigma * state.varsigma
    shifted = n + gamma + 1.0
    parts = (
        -8.0 * n * s2 / shifted,
        8.0 * gamma * gamma * s2 / _radialDenominator(state),
        -8.0 * gamma * s2 / shifted,
        4.0 * s2,
        8.0 * n * s2 / shifted,
    )
    combined = 4.0 * s2 / shifted * (2.0 * gamma * gamma / (n + 2.0 * gamma + 1.0) + n - gamma + 1.0)
    return parts, combined


def _closedFormReport(state: QuantumState) -> FisherReport:
    thetaParts, iTheta = iThetaClosed(state)
    rParts, iR = iRClosed(state)
    return FisherReport(FISHER_MODE.CLOSED_FORM, thetaParts, iTheta, rParts, iR, iTheta + iR)


def fisherTotal(
    state: QuantumState,
    mode: Union[str, FISHER_MODE] = FISHER_MODE.CLOSED_FORM,
    withCounterpart: bool = False,
) -> FisherReport:
    """Fisher information I_theta + I_r of the density of a state.

    :param state: The state.
    :param mode: Closed form or quadrature of the defining integral.
    :param withCounterpart: Also compute the other mode and attach it as counterpart.
    :returns: The report.
    :raises MieRingSingularityError: For closed forms at zeta = 0.
    """
    from .oracle import fisherQuadrature

    mode = FISHER_MODE.fromString(mode)
    if mode is FISHER_MODE.CLOSED_FORM:
        report = _closedFormReport(state)
        other = fisherQuadrature if withCounterpart else None
    else:
        report = fisherQuadrature(state)
        other = _closedFormReport if withCounterpart else None
    if other is not None:
        report = replace(report, counterpart=other(state))
        logger.debug("Fisher discrepancy for %s: %s", state.qn, report.discrepancy())
    return report
