import math

import numpy as np
import pytest

from mie_ring.quantum.error import MieRingDomainError, MieRingSingularityError
from mie_ring.quantum.fisher import FISHER_MODE, fisherTotal, iRClosed, iThetaClosed
from mie_ring.quantum.model import VARIANT, Molecule, PotentialSpec, UnitSystem, fromMolecule
from mie_ring.quantum.spectrum import QuantumNumbers, deriveState

SCH = Molecule("ScH", 2.25, 1.776, 0.986040)
TIC = Molecule("TiC", 2.66, 1.790, 9.606079)


def _state(molecule, qn, eta, variant=VARIANT.KRATZER_FUES):
    return deriveState(fromMolecule(molecule, variant, eta), molecule.mu, qn)


def test_mode_from_string():
    assert FISHER_MODE.fromString("closed_form") is FISHER_MODE.CLOSED_FORM
    assert FISHER_MODE.fromString("Quadrature") is FISHER_MODE.QUADRATURE
    assert FISHER_MODE.QUADRATURE.toString() == "quadrature"
    with pytest.raises(MieRingDomainError):
        FISHER_MODE.fromString("exact")


def test_part_sums_on_random_states():
    rng = np.random.default_rng(7)
    for _ in range(50):
        molecule = Molecule("random", rng.uniform(0.5, 10.0), rng.uniform(0.5, 3.0), rng.uniform(0.5, 50.0))
        qn = QuantumNumbers(int(rng.integers(0, 6)), int(rng.integers(0, 6)), int(rng.integers(0, 5)))
        state = _state(molecule, qn, float(rng.uniform(0.5, 20.0)))
        thetaParts, thetaCombined = iThetaClosed(state)
        rParts, rCombined = iRClosed(state)
        assert math.fsum(thetaParts) == pytest.approx(thetaCombined, rel=1e-10)
        assert math.fsum(rParts) == pytest.approx(rCombined, rel=1e-10)


def test_angular_closed_form_is_singular_without_ring_and_m():
    state = _state(SCH, QuantumNumbers(0, 1, 0), 0.0)
    assert state.zeta == 0.0
    with pytest.raises(MieRingSingularityError):
        iThetaClosed(state)
    with pytest.raises(MieRingSingularityError):
        fisherTotal(state)


def test_radial_parts_structure():
    state = _state(SCH, QuantumNumbers(0, 0, 0), 1.0)
    parts, combined = iRClosed(state)
    assert len(parts) == 5
    assert parts[0] == 0.0 and parts[4] == 0.0
    assert parts[3] == pytest.approx(4.0 * state.varsigma**2)
    assert combined > 0.0


@pytest.mark.parametrize("qn", [QuantumNumbers(0, 0, 0), QuantumNumbers(0, 2, 1), QuantumNumbers(0, 3, 2)])
@pytest.mark.parametrize("eta", [1.0, 10.0])
def test_radial_closed_form_matches_quadrature_for_ground_radial_states(qn, eta):
    report = fisherTotal(_state(SCH, qn, eta), FISHER_MODE.CLOSED_FORM, withCounterpart=True)
    assert report.counterpart.mode is FISHER_MODE.QUADRATURE
    assert report.iR == pytest.approx(report.counterpart.iR, rel=1e-6)


def test_hydrogenic_radial_fisher():
    state = deriveState(PotentialSpec(a=0.0, b=2.0), 1.0, QuantumNumbers(0, 1, 0), UnitSystem.NATURAL)
    _, combined = iRClosed(state)
    assert fisherTotal(state, FISHER_MODE.QUADRATURE).iR == pytest.approx(combined, rel=1e-6)


def test_quadrature_is_positive_and_shift_invariant():
    qn = QuantumNumbers(3, 2, 1)
    kratzerFues = fisherTotal(_state(TIC, qn, 10.0), FISHER_MODE.QUADRATURE)
    modified = fisherTotal(_state(TIC, qn, 10.0, VARIANT.MODIFIED_KRATZER), FISHER_MODE.QUADRATURE)
    assert kratzerFues.total > 0.0
    assert kratzerFues.iTheta > 0.0 and kratzerFues.iR > 0.0
    assert modified.total == pytest.approx(kratzerFues.total, rel=1e-10)
    assert kratzerFues.total == pytest.approx(kratzerFues.iTheta + kratzerFues.iR)


def test_quadrature_without_ring_term():
    report = fisherTotal(_state(SCH, QuantumNumbers(1, 1, 0), 0.0), FISHER_MODE.QUADRATURE)
    assert report.iTheta > 0.0
    assert len(report.iThetaParts) == 1 and len(report.iRParts) == 1


def test_discrepancy_needs_counterpart():
    state = _state(SCH, QuantumNumbers(1, 1, 1), 1.0)
    report = fisherTotal(state)
    assert report.counterpart is None
    with pytest.raises(MieRingDomainError):
        report.discrepancy()
    compared = fisherTotal(state, withCounterpart=True)
    discrepancy = compared.discrepancy()
    assert set(discrepancy) == {"iTheta", "iR", "total"}
    assert discrepancy["total"] == pytest.approx(compared.total - compared.counterpart.total)
