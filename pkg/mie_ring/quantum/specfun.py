"""
Copyright 2026 The mie_ring Authors

Licensed under the MIT License. See the LICENSE file in the project root.
"""

import logging
import math
import sys
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Union

import numpy as np
from numpy.polynomial.laguerre import laggauss
from numpy.polynomial.legendre import leggauss
from scipy import special

from .error import MieRingDomainError, MieRingSingularityError
from .ledger import ledger

logger = logging.getLogger(__name__)

ArrayLike = Union[float, np.ndarray]

_LOG_FLOAT_MAX = math.log(sys.float_info.max)


class QUADRATURE(Enum):
    """
    Supported Gaussian quadrature families.
    """

    GAUSS_LEGENDRE = "gauss-legendre"
    GAUSS_LAGUERRE = "gauss-laguerre"
    GAUSS_JACOBI = "gauss-jacobi"

    @classmethod
    def fromString(cls, kind: Union[str, "QUADRATURE"]) -> "QUADRATURE":
        """Convert a string like ``"gauss-legendre"`` to the enumeration member.

        :param kind: Member or its value string.
        :returns: The matching member.
        :raises MieRingDomainError: For unknown names.
        """
        if isinstance(kind, QUADRATURE):
            return kind
        normalized = str(kind).strip().lower().replace("_", "-")
        for member in cls:
            if member.value == normalized:
                return member
        raise MieRingDomainError(f"unknown quadrature kind {kind!r}")


_MAXIMUM_ORDER: dict[QUADRATURE, int] = {
    QUADRATURE.GAUSS_LEGENDRE: 4096,
    QUADRATURE.GAUSS_LAGUERRE: 150,
    QUADRATURE.GAUSS_JACOBI: 1024,
}
"""above these orders the smallest weights underflow or the node generators lose accuracy"""


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes and weights of a Gaussian quadrature rule.

    The arrays are read-only after construction.

    :param kind: Quadrature family.
    :param order: Number of nodes.
    :param nodes: Nodes in ascending order.
    :param weights: Strictly positive weights.
    :param alpha: Exponent of the weight function, x^alpha e^-x for Laguerre and
        (1-x^2)^alpha for Jacobi, 0 for Legendre.
    """

    kind: QUADRATURE
    order: int
    nodes: np.ndarray = field(repr=False)
    weights: np.ndarray = field(repr=False)
    alpha: float = 0.0

    def __post_init__(self):
        self.nodes.setflags(write=False)
        self.weights.setflags(write=False)

    def integrate(self, function: Callable[[np.ndarray], np.ndarray]) -> float:
        """Apply the rule to a vectorized function.

        The weight function of the rule is implied, so for Laguerre rules this returns
        the approximation of the integral of x^alpha e^-x f(x).

        :param function: Vectorized integrand without the weight function.
        :returns: The quadrature sum.
        """
        return float(np.dot(self.weights, function(self.nodes)))

    def mapped(self, lower: float, upper: float) -> tuple[np.ndarray, np.ndarray]:
        """Map a Legendre rule from [-1, 1] onto [lower, upper].

        :param lower: Lower integration limit.
        :param upper: Upper integration limit.
        :returns: Tuple of nodes and weights on the interval.
        """
        if self.kind is not QUADRATURE.GAUSS_LEGENDRE:
            raise MieRingDomainError("only Gauss-Legendre rules can be mapped")
        halfWidth = 0.5 * (upper - lower)
        center = 0.5 * (upper + lower)
        return center + halfWidth * self.nodes, halfWidth * self.weights


def makeQuadrature(
    kind: Union[str, QUADRATURE], order: int, alpha: float = 0.0
) -> QuadratureRule:
    """Create a Gaussian quadrature rule.

    * Gauss-Legendre on [-1, 1] with weight 1.
    * Gauss-Laguerre on [0, inf) with weight x^alpha e^-x.
    * Gauss-Jacobi on [-1, 1] with the symmetric weight (1-x^2)^alpha.

    :param kind: Family, member of :class:`~mie_ring.quantum.specfun.QUADRATURE` or its string.
    :param order: Number of nodes, at least 2.
    :param alpha: Weight exponent for Laguerre and Jacobi rules, must be above -1.
    :returns: The rule.
    :raises MieRingDomainError: For unsupported orders or weight exponents.
    """
    kind = QUADRATURE.fromString(kind)
    if int(order) != order or order < 2 or order > _MAXIMUM_ORDER[kind]:
        raise MieRingDomainError(
            f"unsupported order {order} for {kind.value}, "
            f"allowed are 2 to {_MAXIMUM_ORDER[kind]}"
        )
    order = int(order)
    if alpha <= -1.0:
        raise MieRingDomainError(f"weight exponent {alpha} must be above -1")

    if kind is QUADRATURE.GAUSS_LEGENDRE:
        nodes, weights = leggauss(order)
        alpha = 0.0
    elif kind is QUADRATURE.GAUSS_LAGUERRE:
        if alpha == 0.0:
            nodes, weights = laggauss(order)
        else:
            nodes, weights = special.roots_genlaguerre(order, alpha)
    else:
        nodes, weights = special.roots_jacobi(order, alpha, alpha)

    nodes = np.array(nodes, dtype=float)
    weights = np.array(weights, dtype=float)
    if np.any(weights <= 0.0):
        raise MieRingDomainError(
            f"order {order} of {kind.value} produces non-positive weights"
        )
    return QuadratureRule(kind, order, nodes, weights, float(alpha))


def compositeLegendre(
    lower: float, upper: float, panels: int, order: int
) -> tuple[np.ndarray, np.ndarray]:
    """Composite Gauss-Legendre nodes and weights on [lower, upper].

    :param lower: Lower limit.
    :param upper: Upper limit.
    :param panels: Number of equally wide panels.
    :param order: Nodes per panel.
    :returns: Tuple of nodes and weights.
    """
    rule = makeQuadrature(QUADRATURE.GAUSS_LEGENDRE, order)
    edges = np.linspace(lower, upper, panels + 1)
    nodes = []
    weights = []
    for left, right in zip(edges[:-1], edges[1:]):
        panelNodes, panelWeights = rule.mapped(left, right)
        nodes.append(panelNodes)
        weights.append(panelWeights)
    return np.concatenate(nodes), np.concatenate(weights)


def _checkDegree(n: int) -> int:
    if int(n) != n or n < 0:
        raise MieRingDomainError(f"polynomial degree {n} must be a non-negative integer")
    return int(n)


def _asResult(value: np.ndarray, argument: ArrayLike) -> ArrayLike:
    if np.ndim(argument) == 0:
        return float(value)
    return value


def _gegenbauerNumerator(
    k: int, lam: float, x: np.ndarray, current: np.ndarray, previous: np.ndarray
) -> np.ndarray:
    """(k+1) C_{k+1} from C_k and C_{k-1}."""
    return 2.0 * (k + lam) * x * current - (k + 2.0 * lam - 1.0) * previous


def gegenbauer(n: int, lam: float, x: ArrayLike) -> ArrayLike:
    """Gegenbauer polynomial C_n^lambda(x).

    Evaluated with the forward three-term recurrence

    (k+1) C_{k+1} = 2(k+lambda) x C_k - (k+2lambda-1) C_{k-1},

    starting from C_0 = 1 and C_1 = 2 lambda x.

    :param n: Degree.
    :param lam: Parameter lambda > 0.
    :param x: Argument, scalar or array. Values outside [-1, 1] are allowed.
    :returns: The polynomial value with the shape of x.
    :raises MieRingDomainError: If lambda <= 0 or n is not a non-negative integer.
    """
    n = _checkDegree(n)
    if not lam > 0.0:
        raise MieRingDomainError(f"Gegenbauer parameter {lam} must be positive")
    xa = np.asarray(x, dtype=float)
    if np.any(np.abs(xa) > 1.0):
        logger.debug("Gegenbauer polynomial evaluated outside [-1, 1]")

    previous = np.ones_like(xa)
    if n == 0:
        return _asResult(previous, x)
    current = 2.0 * lam * xa
    for k in range(1, n):
        previous, current = (
            current,
            _gegenbauerNumerator(k, lam, xa, current, previous) / (k + 1),
        )
    return _asResult(current, x)


def laguerreAssoc(n: int, alpha: float, x: ArrayLike) -> ArrayLike:
    """Associated Laguerre polynomial L_n^alpha(x).

    (k+1) L_{k+1} = (2k+1+alpha-x) L_k - (k+alpha) L_{k-1}, L_0 = 1, L_1 = 1+alpha-x.

    :param n: Degree.
    :param alpha: Parameter alpha > -1.
    :param x: Argument, scalar or array.
    :returns: The polynomial value with the shape of x.
    :raises MieRingDomainError: If alpha <= -1.
    """
    n = _checkDegree(n)
    if not alpha > -1.0:
        raise MieRingDomainError(f"Laguerre parameter {alpha} must be above -1")
    xa = np.asarray(x, dtype=float)

    previous = np.ones_like(xa)
    if n == 0:
        return _asResult(previous, x)
    current = 1.0 + alpha - xa
    for k in range(1, n):
        previous, current = (
            current,
            ((2 * k + 1 + alpha - xa) * current - (k + alpha) * previous) / (k + 1),
        )
    return _asResult(current, x)


def laguerreDeriv(n: int, alpha: float, x: ArrayLike) -> ArrayLike:
    """Derivative of L_n^alpha with respect to x.

    d/dx L_n^alpha(x) = -L_{n-1}^{alpha+1}(x), zero for n = 0.

    :param n: Degree.
    :param alpha: Parameter alpha > -1.
    :param x: Argument.
    :returns: The derivative with the shape of x.
    """
    n = _checkDegree(n)
    if n == 0:
        return _asResult(np.zeros_like(np.asarray(x, dtype=float)), x)
    return -laguerreAssoc(n - 1, alpha + 1.0, x)


def valueFromLog(logValue: float, what: str) -> float:
    """exp(logValue), or a domain error naming `what` if the result is not representable."""
    if logValue > _LOG_FLOAT_MAX:
        raise MieRingDomainError(f"{what} exceeds the floating point range")
    return math.exp(logValue)


def gegenbauerWeightedSqIntegral(n: int, v: float) -> float:
    """Closed form of the integral of (1-x^2)^(v-1/2) [C_n^v(x)]^2 over [-1, 1].

    pi 2^(1-2v) Gamma(2v+n) / (n! (n+v) Gamma(v)^2), evaluated in log space.
    With C_1^v = 2vx this gives 2 for (0, 1/2) and pi/2 for (0, 1).

    :param n: Degree.
    :param v: Gegenbauer parameter, v > 0.
    :returns: The integral.
    :raises MieRingDomainError: For v <= 0 or results beyond the float range.
    """
    n = _checkDegree(n)
    if not v > 0.0:
        raise MieRingDomainError(f"Gegenbauer parameter {v} must be positive")
    logValue = (
        math.log(math.pi)
        + (1.0 - 2.0 * v) * math.log(2.0)
        + special.gammaln(2.0 * v + n)
        - special.gammaln(n + 1.0)
        - math.log(n + v)
        - 2.0 * special.gammaln(v)
    )
    return valueFromLog(logValue, "weighted Gegenbauer integral")


def gegenbauerWeightedSqQuadrature(
    n: int, v: float, shift: int = 0, order: int = 0
) -> float:
    """Quadrature value of the integral of (1-x^2)^(v-1/2-shift) [C_n^v(x)]^2 over [-1, 1].

    The substitution x = cos(theta) turns the integrand into sin^(2v-2shift)(theta) times
    the squared polynomial, which is bounded on [0, pi]; Gauss-Legendre is applied there.

    :param n: Degree.
    :param v: Gegenbauer parameter.
    :param shift: 0 for the standard weight, 1 for the weight lowered by one power.
    :param order: Number of nodes, 0 selects a default that grows with n.
    :returns: The integral.
    """
    n = _checkDegree(n)
    if order == 0:
        order = max(96, 4 * n + 64)
    exponent = 2.0 * v - 2.0 * shift
    if exponent <= -1.0:
        raise MieRingSingularityError(
            f"weight exponent {v - 0.5 - shift} makes the integral diverge"
        )
    theta, weights = makeQuadrature(QUADRATURE.GAUSS_LEGENDRE, order).mapped(0.0, math.pi)
    integrand = np.power(np.sin(theta), exponent) * gegenbauer(n, v, np.cos(theta)) ** 2
    return float(np.dot(weights, integrand))


@dataclass(frozen=True)
class LowerIntegralComparison:
    """Values of the integral of (1-x^2)^(v-3/2) [C_n^v]^2.

    :param stated: The closed form pi Gamma(2v+n) 2^(1-2v) / (n! (1/2-v) Gamma(v)^2).
    :param quadrature: The quadrature value, the ground truth.
    :param corrected: The closed form with the factor (v-1/2) in the denominator.
    """

    stated: float
    quadrature: float
    corrected: float

    @property
    def discrepancy(self) -> float:
        return self.stated - self.quadrature


def gegenbauerWeightedSqIntegralLower(n: int, v: float) -> LowerIntegralComparison:
    """Integral of (1-x^2)^(v-3/2) [C_n^v(x)]^2 over [-1, 1] in three forms.

    The stated closed form carries the factor (1/2 - v) and is therefore negative for every
    admissible v while the integrand is positive. Both the stated value and the quadrature
    value are returned, the disagreement is written to the discrepancy ledger.

    :param n: Degree.
    :param v: Gegenbauer parameter, v > 1/2.
    :returns: The comparison record.
    :raises MieRingSingularityError: For v <= 1/2 where the integral diverges.
    """
    n = _checkDegree(n)
    if not v > 0.5:
        raise MieRingSingularityError(
            f"integral diverges for Gegenbauer parameter {v} <= 1/2"
        )
    logMagnitude = (
        math.log(math.pi)
        + special.gammaln(2.0 * v + n)
        + (1.0 - 2.0 * v) * math.log(2.0)
        - special.gammaln(n + 1.0)
        - math.log(v - 0.5)
        - 2.0 * special.gammaln(v)
    )
    magnitude = valueFromLog(logMagnitude, "lowered Gegenbauer integral")
    comparison = LowerIntegralComparison(
        stated=-magnitude,
        quadrature=gegenbauerWeightedSqQuadrature(n, v, shift=1),
        corrected=magnitude,
    )
    ledger.record(
        "gegenbauer-lowered-weight-integral",
        "closed form with factor (1/2 - v) is negative, quadrature of the positive "
        "integrand equals the form with (v - 1/2)",
    )
    return comparison


def laguerreOrthogonality(n: int, m: int, a: float) -> float:
    """Integral of x^a e^-x L_n^a L_m^a over [0, inf).

    :param n: First degree.
    :param m: Second degree.
    :param a: Laguerre parameter, a > -1.
    :returns: Gamma(a+n+1)/Gamma(n+1) for n == m, otherwise 0.
    """
    n = _checkDegree(n)
    m = _checkDegree(m)
    if not a > -1.0:
        raise MieRingDomainError(f"Laguerre parameter {a} must be above -1")
    if n != m:
        return 0.0
    return valueFromLog(
        special.gammaln(a + n + 1.0) - special.gammaln(n + 1.0), "Laguerre norm"
    )


def laguerreShiftedNormIntegral(n: int, a: float) -> float:
    """Integral of x^a e^-x [L_n^(a-1)]^2 over [0, inf).

    :param n: Degree.
    :param a: Weight exponent, a > 0 so that a-1 > -1.
    :returns: (a+2n) Gamma(a+n) / Gamma(n+1).
    """
    n = _checkDegree(n)
    if not a > 0.0:
        raise MieRingDomainError(f"weight exponent {a} must be positive")
    return (a + 2.0 * n) * valueFromLog(
        special.gammaln(a + n) - special.gammaln(n + 1.0), "Laguerre norm"
    )


def laguerreOffdiagIntegral(n: int, m: int, p: float, a: float, b: float) -> float:
    """Integral of x^p e^-x L_n^a(x) L_m^b(x) over [0, inf) as a finite sum.

    Gamma(p+1) sum_r (-1)^(n+m) C(p-a, n-r) C(p-b, m-r) C(p+r, r), r = 0..min(n, m),
    with generalized binomial coefficients.

    :param n: Degree of the first polynomial.
    :param m: Degree of the second polynomial.
    :param p: Power of x, p > -1.
    :param a: Parameter of the first polynomial.
    :param b: Parameter of the second polynomial.
    :returns: The integral.
    :raises MieRingDomainError: For p <= -1 or results beyond the float range.
    """
    n = _checkDegree(n)
    m = _checkDegree(m)
    if not p > -1.0:
        raise MieRingDomainError(f"power {p} must be above -1")
    total = 0.0
    for r in range(min(n, m) + 1):
        total += (
            special.binom(p - a, n - r)
            * special.binom(p - b, m - r)
            * special.binom(p + r, r)
        )
    if total == 0.0:
        return 0.0
    sign = -1.0 if (n + m) % 2 else 1.0
    # Gamma(p+1) alone overflows for p > 170 even when the sum is small
    magnitude = valueFromLog(special.gammaln(p + 1.0) + math.log(abs(total)), "Laguerre mixed integral")
    return math.copysign(magnitude, sign * total)


def gegenbauerRecurrenceCheck(n: int, lam: float, x: float) -> float:
    """Residual of the Gegenbauer three-term recurrence.

    (n+2) C_{n+2} - 2(lambda+n+1) x C_{n+1} + (2lambda+n) C_n, which vanishes up to
    rounding: |residual| <= 1e-12 max(1, |C_{n+2}|).

    :param n: Lowest degree involved.
    :param lam: Parameter lambda > 0.
    :param x: Argument.
    :returns: The residual.
    """
    n = _checkDegree(n)
    c0 = gegenbauer(n, lam, x)
    c1 = gegenbauer(n + 1, lam, x)
    c2 = gegenbauer(n + 2, lam, x)
    numerator = _gegenbauerNumerator(n + 1, lam, np.asarray(x, dtype=float), c1, c0)
    return float((n + 2) * c2 - numerator)


def gegenbauerRecurrenceCheckVerbatim(n: int, lam: float, x: float) -> float:
    """Residual of the recurrence written without the factor x on the middle term.

    This form does not hold for generic x, the value is kept to document the difference.

    :returns: (n+2) C_{n+2} - 2(lambda+n+1) C_{n+1} + (2lambda+n) C_n.
    """
    n = _checkDegree(n)
    residual = (
        (n + 2) * gegenbauer(n + 2, lam, x)
        - 2.0 * (lam + n + 1.0) * gegenbauer(n + 1, lam, x)
        + (2.0 * lam + n) * gegenbauer(n, lam, x)
    )
    ledger.record(
        "gegenbauer-recurrence",
        "recurrence without the factor x on the middle term fails for generic x, "
        "the standard form is used",
    )
    return float(residual)


def _finiteDifferenceStep(x: float, scale: float = 1.0) -> float:
    return 1e-5 * max(scale, abs(x), 1e-3)


def gegenbauerWeightDerivativeCheck(n: int, lam: float, x: float) -> float:
    """Residual of the derivative identity of the weighted squared Gegenbauer polynomial.

    d/dx (1-x^2)^(lambda-1/2) C_n^2 = 2 (1-x^2)^(lambda-3/2)
    [(2lambda+n-1) C_n C_{n-1} - (lambda+n-1/2) x C_n^2],

    compared against a central finite difference of the left side. The right side without the
    factor 2 (1-x^2)^(lambda-1/2) is recorded in the discrepancy ledger.

    :param n: Degree, n >= 1.
    :param lam: Parameter lambda > 0.
    :param x: Argument with |x| < 1.
    :returns: Finite difference minus analytic derivative; |residual| <= 1e-6 max(1, |value|).
    :raises MieRingDomainError: For |x| >= 1 or n < 1.
    """
    n = _checkDegree(n)
    if n < 1:
        raise MieRingDomainError("derivative identity needs n >= 1")
    if abs(x) >= 1.0:
        raise MieRingDomainError(f"argument {x} must satisfy |x| < 1")

    def weighted(t: float) -> float:
        return (1.0 - t * t) ** (lam - 0.5) * gegenbauer(n, lam, t) ** 2

    step = min(1e-5, 0.5 * (1.0 - abs(x)))
    finiteDifference = (weighted(x + step) - weighted(x - step)) / (2.0 * step)

    cn = gegenbauer(n, lam, x)
    cnm1 = gegenbauer(n - 1, lam, x)
    analytic = (
        2.0
        * (1.0 - x * x) ** (lam - 1.5)
        * ((2.0 * lam + n - 1.0) * cn * cnm1 - (lam + n - 0.5) * x * cn * cn)
    )
    ledger.record(
        "gegenbauer-weight-derivative",
        "right side of the derivative identity lacks the factor 2 (1-x^2)^(lambda-1/2)",
    )
    return float(finiteDifference - analytic)


def laguerreDerivativeCheck(n: int, alpha: float, x: float) -> float:
    """Residual of d/dx L_n^alpha = -L_{n-1}^{alpha+1} against a central difference.

    :returns: Finite difference minus laguerreDeriv, below 1e-6 max(1, |value|).
    """
    step = _finiteDifferenceStep(x)
    lower = max(x - step, 0.0)
    upper = lower + 2.0 * step
    finiteDifference = (
        laguerreAssoc(n, alpha, upper) - laguerreAssoc(n, alpha, lower)
    ) / (upper - lower)
    midpoint = 0.5 * (upper + lower)
    return float(finiteDifference - laguerreDeriv(n, alpha, midpoint))
