import math

import numpy as np
import pytest

from mie_ring.quantum.error import MieRingCatalogError, MieRingDomainError, MieRingSingularityError
from mie_ring.quantum.model import (
    CATALOG_ENVIRONMENT_VARIABLE,
    VARIANT,
    MiePotential,
    Molecule,
    PotentialSpec,
    UnitSystem,
    dimensionlessGroups,
    evalMie,
    evalSpec,
    findMolecule,
    fromMolecule,
    loadMolecules,
)

SCH = Molecule("ScH", 2.25, 1.776, 0.986040)


@pytest.mark.parametrize(
    "text,variant",
    [
        ("kratzer-fues", VARIANT.KRATZER_FUES),
        ("Modified", VARIANT.MODIFIED_KRATZER),
        ("modified_kratzer", VARIANT.MODIFIED_KRATZER),
        (VARIANT.CUSTOM, VARIANT.CUSTOM),
    ],
)
def test_variant_from_string(text, variant):
    assert VARIANT.fromString(text) is variant


def test_variant_unknown():
    with pytest.raises(MieRingDomainError):
        VARIANT.fromString("morse")


def test_unit_systems():
    assert UnitSystem.PHYSICAL.twoMuScale == pytest.approx(2.0 * 931.494028e6 / 1973.29**2)
    assert UnitSystem.NATURAL.twoMuScale == 2.0
    assert UnitSystem.fromString(" Natural ") is UnitSystem.NATURAL
    with pytest.raises(MieRingDomainError):
        UnitSystem.fromString("atomic")


def test_from_molecule_coefficients():
    kratzerFues = fromMolecule(SCH, "kratzer-fues")
    modified = fromMolecule(SCH, VARIANT.MODIFIED_KRATZER, eta=10.0)
    assert kratzerFues.a == pytest.approx(SCH.De * SCH.re**2)
    assert kratzerFues.b == pytest.approx(2.0 * SCH.De * SCH.re)
    assert kratzerFues.c == 0.0
    assert modified.c == SCH.De
    assert modified.eta == 10.0
    assert kratzerFues.equilibriumRadius == pytest.approx(SCH.re)
    with pytest.raises(MieRingDomainError):
        fromMolecule(SCH, VARIANT.CUSTOM)


def test_mie_potential_minimum():
    potential = MiePotential(SCH.De, SCH.re)
    assert evalMie(potential, SCH.re, math.pi / 2.0) == pytest.approx(-SCH.De)
    r = np.linspace(0.8, 5.0, 50)
    assert np.all(evalMie(potential, r, math.pi / 2.0) >= -SCH.De - 1e-12)


def test_mie_and_spec_agree_for_kratzer_exponents():
    r = np.linspace(0.5, 4.0, 9)
    theta = np.linspace(0.3, 2.8, 9)
    mie = evalMie(MiePotential(SCH.De, SCH.re, 2, 1, 3.0), r, theta)
    spec = evalSpec(fromMolecule(SCH, VARIANT.KRATZER_FUES, 3.0), r, theta)
    assert mie == pytest.approx(spec, rel=1e-12)


def test_modified_minimum_is_zero():
    modified = fromMolecule(SCH, VARIANT.MODIFIED_KRATZER, eta=10.0)
    assert evalSpec(modified, SCH.re, math.pi / 2.0) == pytest.approx(0.0, abs=1e-12)


def test_ring_term_diverges_on_axis():
    with pytest.raises(MieRingSingularityError):
        evalSpec(fromMolecule(SCH, VARIANT.KRATZER_FUES, 1.0), 1.0, 0.0)
    assert math.isfinite(evalSpec(fromMolecule(SCH, VARIANT.KRATZER_FUES, 0.0), 1.0, 0.0))
    with pytest.raises(MieRingDomainError):
        evalSpec(fromMolecule(SCH, VARIANT.KRATZER_FUES), 0.0, 1.0)


@pytest.mark.parametrize(
    "arguments",
    [
        dict(a=-1.0, b=1.0),
        dict(a=1.0, b=1.0, eta=-0.1),
        dict(a=1.0, b=1.0, c=0.3, variant=VARIANT.KRATZER_FUES),
        dict(a=1.0, b=2.0, c=0.5, variant=VARIANT.MODIFIED_KRATZER),
    ],
)
def test_invalid_potentials(arguments):
    with pytest.raises(MieRingDomainError):
        PotentialSpec(**arguments)


def test_invalid_mie_exponents():
    with pytest.raises(MieRingDomainError):
        MiePotential(1.0, 1.0, 1, 1)


def test_dimensionless_groups():
    spec = fromMolecule(SCH, VARIANT.KRATZER_FUES)
    twoMuA, twoMuB2 = dimensionlessGroups(spec, SCH.mu)
    scale = SCH.mu * UnitSystem.PHYSICAL.twoMuScale
    assert twoMuA == pytest.approx(scale * spec.a)
    assert twoMuB2 == pytest.approx(scale * spec.b**2)
    with pytest.raises(MieRingDomainError):
        dimensionlessGroups(spec, -1.0)


def test_embedded_catalog(monkeypatch):
    monkeypatch.delenv(CATALOG_ENVIRONMENT_VARIABLE, raising=False)
    molecules = loadMolecules()
    assert len(molecules) == 10
    assert molecules[0] == SCH
    assert findMolecule(molecules, "scn").name == "ScN"


def test_catalog_from_environment(monkeypatch, tmp_path):
    path = tmp_path / "molecules.csv"
    path.write_text("name,De_eV,re_angstrom,mu_amu\nHCl,4.619,1.2746,0.9801045\n")
    monkeypatch.setenv(CATALOG_ENVIRONMENT_VARIABLE, str(path))
    molecules = loadMolecules()
    assert [molecule.name for molecule in molecules] == ["HCl"]
    with pytest.raises(MieRingCatalogError) as info:
        findMolecule(molecules, "ScH")
    assert info.value.errorCode == 3


def test_molecule_constants_must_be_positive():
    with pytest.raises(MieRingCatalogError) as info:
        Molecule("broken", 1.0, 0.0, 1.0)
    assert info.value.errorCode == 2
