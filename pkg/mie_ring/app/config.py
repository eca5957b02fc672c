"""
Copyright 2026 The mie_ring Authors

Licensed under the MIT License. See the LICENSE file in the project root.
"""

import argparse
import itertools
import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Sequence, TypeVar, Union

from mie_ring.quantum.error import MieRingConfigError, MieRingDomainError
from mie_ring.quantum.model import VARIANT, Molecule, UnitSystem, findMolecule
from mie_ring.quantum.spectrum import QuantumNumbers

Item = TypeVar("Item")


class COMMAND(Enum):
    """Commands of the command line interface."""

    SPECTRUM = "spectrum"
    FISHER = "fisher"
    DENSITY = "density"
    VERIFY = "verify"
    TABLES = "tables"
    FIGURES = "figures"

    @classmethod
    def fromString(cls, command: Union[str, "COMMAND"]) -> "COMMAND":
        if isinstance(command, COMMAND):
            return command
        for member in cls:
            if member.value == str(command).strip().lower():
                return member
        raise MieRingConfigError(f"unknown command {command!r}")


class OUTPUT_FORMAT(Enum):
    """Formats of the record files."""

    CSV = "csv"
    JSON = "json"

    @classmethod
    def fromString(cls, outputFormat: Union[str, "OUTPUT_FORMAT"]) -> "OUTPUT_FORMAT":
        if isinstance(outputFormat, OUTPUT_FORMAT):
            return outputFormat
        for member in cls:
            if member.value == str(outputFormat).strip().lower():
                return member
        raise MieRingConfigError(f"unknown output format {outputFormat!r}")


def _processRangeInput(text: Union[int, str], allowNegative: bool = False) -> tuple[int, int]:
    """Private function to process quantum number ranges.

    Ranges can be passed as in the following examples:

    * _processRangeInput(3)        The single value 3.
    * _processRangeInput("3")      The single value 3.
    * _processRangeInput("0..5")   The values 0 to 5 including both ends.

    :param text: Range in format as described in the previous section.
    :param allowNegative: Accept negative bounds, used for m.
    :returns: Tuple of first and last value.
    :raises MieRingConfigError: For malformed or empty ranges.
    """
    if isinstance(text, int):
        text = str(text)
    rangeRegex = re.compile(r"^\s*(-?[0-9]+)\s*(?:\.\.\s*(-?[0-9]+))?\s*$")
    rangeMatch = rangeRegex.match(text)
    if rangeMatch is None:
        raise MieRingConfigError(f"range {text!r} must look like 2 or 0..5")
    first = int(rangeMatch.group(1))
    last = int(rangeMatch.group(2)) if rangeMatch.group(2) is not None else first
    if last < first:
        raise MieRingConfigError(f"range {text!r} is empty")
    if not allowNegative and first < 0:
        raise MieRingConfigError(f"range {text!r} must not contain negative values")
    return first, last


def _processEtaInput(text: str) -> tuple[float, ...]:
    """Comma separated list of ring strengths like "0,10"."""
    values = []
    for item in str(text).split(","):
        item = item.strip()
        if item == "":
            continue
        try:
            value = float(item)
        except ValueError:
            raise MieRingConfigError(f"ring strength {item!r} is not a number")
        if not value >= 0.0:
            raise MieRingConfigError(f"ring strength {item} must not be negative")
        values.append(value)
    if len(values) == 0:
        raise MieRingConfigError("at least one ring strength is needed")
    return tuple(values)


def _processVariantInput(text: Union[str, VARIANT]) -> tuple[VARIANT, ...]:
    if isinstance(text, VARIANT):
        return (text,)
    if str(text).strip().lower() == "both":
        return (VARIANT.KRATZER_FUES, VARIANT.MODIFIED_KRATZER)
    try:
        variant = VARIANT.fromString(text)
    except MieRingDomainError:
        raise MieRingConfigError(f"unknown variant {text!r}")
    if variant is VARIANT.CUSTOM:
        raise MieRingConfigError("variant must be kratzer-fues, modified or both")
    return (variant,)


@dataclass(frozen=True)
class RunConfig:
    """Everything one run of the command line interface needs.

    :param command: The command.
    :param molecule: Name of a catalog molecule, None for all or for custom constants.
    :param De: Custom dissociation energy, given together with re and mu.
    :param re: Custom equilibrium bond length.
    :param mu: Custom reduced mass.
    :param nRange: Inclusive range of n.
    :param nTildeRange: Inclusive range of nTilde.
    :param mRange: Inclusive range of m.
    :param etas: Ring strengths.
    :param variants: Potential variants.
    :param units: Unit system.
    :param outputFormat: Record format.
    :param out: Output path, None for standard output. A directory for tables and figures.
    :param states: Subsample size for verify and tables, None for all states.
    :param jobs: Worker processes, 1 runs serially.
    :param verbosity: 0 warnings, 1 info, 2 debug.
    """

    command: COMMAND
    molecule: Optional[str] = None
    De: Optional[float] = None
    re: Optional[float] = None
    mu: Optional[float] = None
    nRange: tuple[int, int] = (0, 2)
    nTildeRange: tuple[int, int] = (0, 2)
    mRange: tuple[int, int] = (0, 2)
    etas: tuple[float, ...] = (0.0,)
    variants: tuple[VARIANT, ...] = (VARIANT.KRATZER_FUES, VARIANT.MODIFIED_KRATZER)
    units: UnitSystem = field(default_factory=lambda: UnitSystem.PHYSICAL)
    outputFormat: OUTPUT_FORMAT = OUTPUT_FORMAT.CSV
    out: Optional[str] = None
    states: Optional[int] = None
    jobs: int = 1
    verbosity: int = 0

    def __post_init__(self):
        object.__setattr__(self, "command", COMMAND.fromString(self.command))
        custom = [self.De, self.re, self.mu]
        if any(value is not None for value in custom):
            if any(value is None for value in custom):
                raise MieRingConfigError("custom molecules need --De, --re and --mu together")
            if self.molecule is not None:
                raise MieRingConfigError("--molecule and custom constants exclude each other")
            if any(not value > 0.0 for value in custom):
                raise MieRingConfigError("custom constants must be positive")
        for label, (first, last) in (
            ("n", self.nRange),
            ("nTilde", self.nTildeRange),
            ("m", self.mRange),
        ):
            if last < first:
                raise MieRingConfigError(f"range of {label} is empty")
        if self.nRange[0] < 0 or self.nTildeRange[0] < 0:
            raise MieRingConfigError("n and nTilde must not be negative")
        if len(self.etas) == 0 or any(eta < 0.0 for eta in self.etas):
            raise MieRingConfigError("ring strengths must be given and not negative")
        if len(self.variants) == 0:
            raise MieRingConfigError("at least one variant is needed")
        if self.states is not None and self.states < 1:
            raise MieRingConfigError("--states must be at least 1")
        if self.jobs < 1:
            raise MieRingConfigError("--jobs must be at least 1")

    @property
    def isCustom(self) -> bool:
        return self.De is not None

    def selectMolecules(self, catalog: list[Molecule]) -> list[Molecule]:
        """The molecules this run works on.

        :param catalog: The loaded catalog.
        :returns: The custom molecule, the named one or the whole catalog.
        """
        if self.isCustom:
            return [Molecule("custom", self.De, self.re, self.mu)]
        if self.molecule is not None:
            return [findMolecule(catalog, self.molecule)]
        return list(catalog)

    def subsample(self, items: Sequence[Item]) -> list[Item]:
        """Evenly spaced selection of --states items, all of them without the option.

        The first and the last item are always kept, the order is preserved.
        """
        items = list(items)
        if self.states is None or self.states >= len(items):
            return items
        if self.states == 1:
            return items[:1]
        step = (len(items) - 1) / (self.states - 1)
        return [items[round(i * step)] for i in range(self.states)]

    def quantumNumbers(self) -> list[QuantumNumbers]:
        """All combinations of the configured ranges, m folded and deduplicated."""
        combinations = []
        seen = set()
        for n, nTilde, m in itertools.product(
            range(self.nRange[0], self.nRange[1] + 1),
            range(self.nTildeRange[0], self.nTildeRange[1] + 1),
            range(self.mRange[0], self.mRange[1] + 1),
        ):
            qn = QuantumNumbers(n, nTilde, m)
            if qn not in seen:
                seen.add(qn)
                combinations.append(qn)
        return combinations

    @classmethod
    def fromArguments(cls, arguments: argparse.Namespace) -> "RunConfig":
        """Build the configuration from parsed command line arguments.

        :raises MieRingConfigError: For invalid combinations or malformed values.
        """
        try:
            units = UnitSystem.fromString(arguments.units)
        except MieRingDomainError:
            raise MieRingConfigError(f"unknown unit system {arguments.units!r}")
        return cls(
            command=COMMAND.fromString(arguments.command),
            molecule=arguments.molecule,
            De=arguments.De,
            re=arguments.re,
            mu=arguments.mu,
            nRange=_processRangeInput(arguments.n),
            nTildeRange=_processRangeInput(arguments.ntilde),
            mRange=_processRangeInput(arguments.m, allowNegative=True),
            etas=_processEtaInput(arguments.eta),
            variants=_processVariantInput(arguments.variant),
            units=units,
            outputFormat=OUTPUT_FORMAT.fromString(arguments.format),
            out=arguments.out,
            states=arguments.states,
            jobs=arguments.jobs,
            verbosity=arguments.verbose,
        )
