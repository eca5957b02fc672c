"""
Copyright 2026 The mie_ring Authors

Licensed under the MIT License. See the LICENSE file in the project root.
"""

import logging
import math
import os
from dataclasses import dataclass
from enum import Enum
from typing import ClassVar, Optional, Union

import numpy as np

from .error import MieRingCatalogError, MieRingDomainError, MieRingSingularityError
from .specfun import ArrayLike

logger = logging.getLogger(__name__)

CATALOG_ENVIRONMENT_VARIABLE = "MIE_RING_MOLECULES"


class VARIANT(Enum):
    """
    Members of the potential family.

    KRATZER_FUES has no constant shift, MODIFIED_KRATZER is shifted by +D_e so that the minimum
    sits at zero energy. CUSTOM is any other constant.
    """

    KRATZER_FUES = "kratzer-fues"
    MODIFIED_KRATZER = "modified-kratzer"
    CUSTOM = "custom"

    @classmethod
    def fromString(cls, variant: Union[str, "VARIANT"]) -> "VARIANT":
        """Convert a string to the variant.

        "modified" is accepted as a short form of "modified-kratzer".

        :param variant: Member or string.
        :returns: The member.
        :raises MieRingDomainError: For unknown variants.
        """
        if isinstance(variant, VARIANT):
            return variant
        normalized = str(variant).strip().lower().replace("_", "-")
        if normalized == "modified":
            normalized = VARIANT.MODIFIED_KRATZER.value
        for member in cls:
            if member.value == normalized:
                return member
        raise MieRingDomainError(f"unknown potential variant {variant!r}")

    def toString(self) -> str:
        return self.value


@dataclass(frozen=True)
class UnitSystem:
    """Conversion constants between the inputs (eV, angstrom, amu) and the formulas.

    :param amuToEV: Rest energy of one mass unit in eV.
    :param hbarC: hbar times c in eV angstrom.
    :param name: "physical" or "natural".
    """

    amuToEV: float
    hbarC: float
    name: str = "physical"

    PHYSICAL: ClassVar["UnitSystem"]
    NATURAL: ClassVar["UnitSystem"]

    @property
    def twoMuScale(self) -> float:
        """2 mu / hbar^2 per mass unit, in 1/(eV angstrom^2) for physical units."""
        return 2.0 * self.amuToEV / (self.hbarC * self.hbarC)

    @classmethod
    def fromString(cls, name: str) -> "UnitSystem":
        normalized = str(name).strip().lower()
        if normalized == "physical":
            return cls.PHYSICAL
        if normalized == "natural":
            return cls.NATURAL
        raise MieRingDomainError(f"unknown unit system {name!r}")


UnitSystem.PHYSICAL = UnitSystem(931.494028e6, 1973.29, "physical")
UnitSystem.NATURAL = UnitSystem(1.0, 1.0, "natural")


@dataclass(frozen=True)
class MiePotential:
    """General Mie-type potential with ring term.

    V = D_e [k/(j-k) (r_e/r)^j - j/(j-k) (r_e/r)^k] + eta cos^2(theta) / (r^2 sin^2(theta))

    :param De: Dissociation energy in eV.
    :param re: Equilibrium bond length in angstrom.
    :param j: Repulsive exponent.
    :param k: Attractive exponent, j > k >= 1.
    :param eta: Ring strength, eta >= 0.
    """

    De: float
    re: float
    j: int = 2
    k: int = 1
    eta: float = 0.0

    def __post_init__(self):
        if not (self.j > self.k >= 1):
            raise MieRingDomainError(f"exponents must satisfy j > k >= 1, got {self.j}, {self.k}")
        if self.eta < 0.0:
            raise MieRingDomainError(f"ring strength {self.eta} must not be negative")


@dataclass(frozen=True)
class PotentialSpec:
    """Inverse-square plus Coulomb form a/r^2 - b/r + c with ring term.

    :param a: Inverse-square strength in eV angstrom^2.
    :param b: Coulomb strength in eV angstrom.
    :param c: Constant shift in eV.
    :param eta: Ring strength.
    :param variant: Family member, consistent with c.
    """

    a: float
    b: float
    c: float = 0.0
    eta: float = 0.0
    variant: VARIANT = VARIANT.CUSTOM

    def __post_init__(self):
        if self.a < 0.0 or self.b < 0.0:
            raise MieRingDomainError(f"a = {self.a} and b = {self.b} must not be negative")
        if self.eta < 0.0:
            raise MieRingDomainError(f"ring strength {self.eta} must not be negative")
        if self.variant is VARIANT.KRATZER_FUES and self.c != 0.0:
            raise MieRingDomainError("Kratzer-Fues variant requires c = 0")
        if self.variant is VARIANT.MODIFIED_KRATZER:
            if self.a <= 0.0 or not math.isclose(
                self.c, self.b * self.b / (4.0 * self.a), rel_tol=1e-12
            ):
                raise MieRingDomainError("modified Kratzer variant requires c = b^2/(4a) = D_e")

    @property
    def equilibriumRadius(self) -> float:
        """Radius 2a/b of the minimum of a/r^2 - b/r, infinite without attraction."""
        if self.b == 0.0:
            return math.inf
        return 2.0 * self.a / self.b


@dataclass(frozen=True)
class Molecule:
    """Diatomic molecule with its spectroscopic constants.

    :param name: Chemical formula like "ScH".
    :param De: Dissociation energy in eV.
    :param re: Equilibrium bond length in angstrom.
    :param mu: Reduced mass in amu.
    """

    name: str
    De: float
    re: float
    mu: float

    def __post_init__(self):
        for label, value in (("De", self.De), ("re", self.re), ("mu", self.mu)):
            if not (value > 0.0 and math.isfinite(value)):
                raise MieRingCatalogError(2, f"{self.name}: {label} = {value}")


def _checkRadiusAndAngle(r: ArrayLike, theta: ArrayLike, eta: float) -> None:
    if np.any(np.asarray(r) <= 0.0):
        raise MieRingDomainError("radius must be positive")
    if eta > 0.0:
        thetaArray = np.asarray(theta)
        if np.any(thetaArray <= 0.0) or np.any(thetaArray >= math.pi):
            raise MieRingSingularityError("ring term diverges on the polar axis, theta must lie in (0, pi)")


def _ringTerm(r: ArrayLike, theta: ArrayLike, eta: float) -> ArrayLike:
    if eta == 0.0:
        return 0.0
    cosine = np.cos(theta)
    sine = np.sin(theta)
    return eta * cosine * cosine / (np.square(r) * sine * sine)


def _asResult(value, r, theta) -> ArrayLike:
    if np.ndim(r) == 0 and np.ndim(theta) == 0:
        return float(value)
    return np.asarray(value, dtype=float)


def evalMie(p: MiePotential, r: ArrayLike, theta: ArrayLike) -> ArrayLike:
    """Evaluate the general Mie-type potential with ring term.

    :param p: The potential.
    :param r: Radius in angstrom, scalar or array.
    :param theta: Polar angle in radians, broadcast against r.
    :returns: The potential in eV.
    :raises MieRingDomainError: For r <= 0.
    :raises MieRingSingularityError: For theta outside (0, pi) when eta > 0.
    """
    _checkRadiusAndAngle(r, theta, p.eta)
    ratio = p.re / np.asarray(r, dtype=float)
    spread = p.j - p.k
    radial = p.De * (p.k / spread * ratio**p.j - p.j / spread * ratio**p.k)
    return _asResult(radial + _ringTerm(r, theta, p.eta), r, theta)


def evalSpec(p: PotentialSpec, r: ArrayLike, theta: ArrayLike) -> ArrayLike:
    """Evaluate a/r^2 - b/r + c + eta cos^2(theta) / (r^2 sin^2(theta)).

    :param p: The potential.
    :param r: Radius in angstrom.
    :param theta: Polar angle in radians.
    :returns: The potential in eV.
    """
    _checkRadiusAndAngle(r, theta, p.eta)
    ra = np.asarray(r, dtype=float)
    radial = p.a / (ra * ra) - p.b / ra + p.c
    return _asResult(radial + _ringTerm(r, theta, p.eta), r, theta)


def fromMolecule(
    m: Molecule, variant: Union[str, VARIANT], eta: float = 0.0
) -> PotentialSpec:
    """Build the potential of a molecule.

    a = D_e r_e^2, b = 2 D_e r_e, c = 0 (Kratzer-Fues) or D_e (modified Kratzer).

    :param m: The molecule.
    :param variant: "kratzer-fues" or "modified-kratzer".
    :param eta: Ring strength.
    :returns: The potential.
    :raises MieRingDomainError: For unknown variants or the custom variant.
    """
    variant = VARIANT.fromString(variant)
    if variant is VARIANT.CUSTOM:
        raise MieRingDomainError("a molecule defines only the Kratzer-Fues and modified Kratzer variants")
    a = m.De * m.re * m.re
    b = 2.0 * m.De * m.re
    c = m.De if variant is VARIANT.MODIFIED_KRATZER else 0.0
    return PotentialSpec(a, b, c, eta, variant)


def dimensionlessGroups(
    p: PotentialSpec, mu: float, u: UnitSystem = UnitSystem.PHYSICAL
) -> tuple[float, float]:
    """The two combinations of the potential the spectrum depends on.

    :param p: The potential.
    :param mu: Reduced mass in amu (or natural mass units).
    :param u: Unit system.
    :returns: Tuple (2 mu a / hbar^2, 2 mu b^2 / hbar^2), the second in eV.
    :raises MieRingDomainError: For negative masses.
    """
    if mu < 0.0:
        raise MieRingDomainError(f"reduced mass {mu} must not be negative")
    scale = mu * u.twoMuScale
    return scale * p.a, scale * p.b * p.b


def loadMolecules(path: Optional[str] = None) -> list[Molecule]:
    """Load a molecule catalog.

    Without a path the file named by the environment variable MIE_RING_MOLECULES is used, and
    without that the embedded catalog of ten molecules.

    :param path: Path of a CSV file with header ``name,De_eV,re_angstrom,mu_amu``.
    :returns: The molecules in file order.
    :raises MieRingCatalogError: For unreadable files, malformed rows or invalid constants.
    """
    from mie_ring.molecules.catalog_importer import parseCatalog, readLinesFromCatalog

    if path is None:
        path = os.environ.get(CATALOG_ENVIRONMENT_VARIABLE) or None
        if path is not None:
            logger.info("molecule catalog taken from %s", path)
    lines = readLinesFromCatalog(path)
    molecules = parseCatalog(lines)
    if len(molecules) == 0:
        logger.warning("molecule catalog %s is empty", path)
    return molecules


def findMolecule(catalog: list[Molecule], name: str) -> Molecule:
    """Case-insensitive lookup of a molecule by name.

    :raises MieRingCatalogError: If the molecule is not in the catalog.
    """
    for molecule in catalog:
        if molecule.name.lower() == name.strip().lower():
            return molecule
    raise MieRingCatalogError(3, name)
