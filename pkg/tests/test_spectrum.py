import math

import numpy as np
import pytest

from mie_ring.quantum.error import MieRingDomainError, MieRingSingularityError, MieRingUnboundStateError
from mie_ring.quantum.model import VARIANT, Molecule, PotentialSpec, UnitSystem, fromMolecule
from mie_ring.quantum.spectrum import (
    QuantumNumbers,
    angularDerivative,
    angularWavefunction,
    bindingEnergy,
    deriveState,
    ellEffective,
    energy,
    normalizationProduct,
    probabilityDensity,
    radialDerivative,
    radialWavefunction,
    sampleDensity,
    zetaOf,
)

SCH = Molecule("ScH", 2.25, 1.776, 0.986040)
SCN = Molecule("ScN", 4.56, 1.768, 10.682771)


@pytest.mark.parametrize(
    "molecule,qn,eta,kratzerFues,modified",
    [
        (SCH, QuantumNumbers(1, 1, 0), 0.0, -2.1363286701273, 0.113671329873),
        (SCH, QuantumNumbers(0, 0, 0), 10.0, -2.2028638473033, 0.047136152697),
        (SCN, QuantumNumbers(0, 0, 0), 10.0, -4.5423176696457, 0.0176823303543),
        (SCN, QuantumNumbers(5, 5, 4), 0.0, -4.3743800436129, 0.1856199563870),
    ],
)
def test_tabulated_energies(molecule, qn, eta, kratzerFues, modified):
    computedKratzerFues = energy(fromMolecule(molecule, VARIANT.KRATZER_FUES, eta), molecule.mu, qn)
    computedModified = energy(fromMolecule(molecule, VARIANT.MODIFIED_KRATZER, eta), molecule.mu, qn)
    assert computedKratzerFues == pytest.approx(kratzerFues, abs=5e-6)
    assert computedModified == pytest.approx(modified, abs=5e-6)


@pytest.mark.parametrize("qn", [QuantumNumbers(0, 0, 0), QuantumNumbers(3, 2, 1), QuantumNumbers(5, 5, 4)])
@pytest.mark.parametrize("eta", [0.0, 1.0, 10.0])
def test_constant_shift(qn, eta):
    kratzerFues = deriveState(fromMolecule(SCH, VARIANT.KRATZER_FUES, eta), SCH.mu, qn)
    modified = deriveState(fromMolecule(SCH, VARIANT.MODIFIED_KRATZER, eta), SCH.mu, qn)
    assert modified.energy - kratzerFues.energy == pytest.approx(SCH.De, rel=1e-12)
    assert modified.gamma == kratzerFues.gamma
    assert modified.varsigma == kratzerFues.varsigma
    assert modified.normProduct == kratzerFues.normProduct
    assert modified.binding == kratzerFues.binding


def test_quantum_numbers():
    qn = QuantumNumbers(1, 2, -3)
    assert qn.m == 3
    assert str(qn) == "(1, 2, 3)"
    assert QuantumNumbers(1, 2, 3) == qn
    with pytest.raises(MieRingDomainError):
        QuantumNumbers(-1, 0, 0)
    with pytest.raises(MieRingDomainError):
        QuantumNumbers(0, 1.5, 0)


def test_effective_angular_momentum():
    assert zetaOf(2, 0.0) == 1.0
    assert zetaOf(-2, 5.0) == pytest.approx(1.5)
    assert ellEffective(QuantumNumbers(0, 3, 2), 0.0) == 5.0
    assert ellEffective(QuantumNumbers(0, 1, 1), 8.0) == pytest.approx(4.0)
    with pytest.raises(MieRingDomainError):
        zetaOf(0, -1.0)


def test_binding_energy_decreases_with_n():
    spec = fromMolecule(SCH, VARIANT.KRATZER_FUES)
    bindings = [bindingEnergy(spec, SCH.mu, QuantumNumbers(n, 0, 0)) for n in range(5)]
    assert all(earlier > later > 0.0 for earlier, later in zip(bindings, bindings[1:]))


def test_no_attraction_means_no_bound_state():
    spec = PotentialSpec(a=1.0, b=0.0, c=0.7)
    qn = QuantumNumbers(0, 0, 0)
    assert energy(spec, 1.0, qn, UnitSystem.NATURAL) == 0.7
    with pytest.raises(MieRingUnboundStateError):
        deriveState(spec, 1.0, qn, UnitSystem.NATURAL)


def test_hydrogenic_limit():
    """a = 0, eta = 0, b = 1 and 2mu/hbar^2 = 1 give the Coulomb levels 1/(2 (n + ell + 1)^2)."""
    spec = PotentialSpec(a=0.0, b=1.0)
    for n, nTilde in [(0, 0), (1, 0), (0, 2), (2, 1)]:
        state = deriveState(spec, 0.5, QuantumNumbers(n, nTilde, 0), UnitSystem.NATURAL)
        assert state.gamma == pytest.approx(nTilde)
        assert state.binding == pytest.approx(0.25 / (n + nTilde + 1) ** 2)


def test_state_parameters():
    state = deriveState(fromMolecule(SCH, VARIANT.KRATZER_FUES, 10.0), SCH.mu, QuantumNumbers(1, 2, 1))
    assert state.zeta == pytest.approx(0.5 * math.sqrt(11.0))
    assert state.ellEff == pytest.approx(math.sqrt(11.0) + 2.0)
    assert state.gegenbauerParameter == pytest.approx(2.0 * state.zeta + 0.5)
    assert state.laguerreParameter == pytest.approx(2.0 * state.gamma + 1.0)
    assert state.varsigma == pytest.approx(math.sqrt(SCH.mu * UnitSystem.PHYSICAL.twoMuScale * state.binding))
    assert normalizationProduct(state) == pytest.approx(state.normProduct, rel=1e-14)
    assert math.log(state.normProduct) == pytest.approx(state.logNormProduct)


@pytest.fixture
def state():
    return deriveState(fromMolecule(SCH, VARIANT.KRATZER_FUES, 1.0), SCH.mu, QuantumNumbers(2, 1, 1))


def test_wavefunction_domains(state):
    with pytest.raises(MieRingDomainError):
        radialWavefunction(state, -0.1)
    with pytest.raises(MieRingDomainError):
        radialDerivative(state, 0.0)
    with pytest.raises(MieRingDomainError):
        angularWavefunction(state, 4.0)
    assert radialWavefunction(state, 0.0) == 0.0
    assert isinstance(angularWavefunction(state, 1.0), float)


def test_derivatives_match_central_differences(state):
    r = np.linspace(0.5, 4.0, 8)
    step = 1e-6
    difference = (radialWavefunction(state, r + step) - radialWavefunction(state, r - step)) / (2.0 * step)
    scale = np.max(np.abs(difference))
    assert np.max(np.abs(radialDerivative(state, r) - difference)) <= 1e-6 * scale

    theta = np.linspace(0.2, 2.9, 8)
    difference = (angularWavefunction(state, theta + step) - angularWavefunction(state, theta - step)) / (2.0 * step)
    scale = np.max(np.abs(difference))
    assert np.max(np.abs(angularDerivative(state, theta) - difference)) <= 1e-6 * scale


def test_angular_derivative_singular_on_axis():
    state = deriveState(fromMolecule(SCH, VARIANT.KRATZER_FUES, 0.5), SCH.mu, QuantumNumbers(0, 1, 0))
    assert 0.0 < state.zeta < 0.5
    with pytest.raises(MieRingSingularityError):
        angularDerivative(state, 0.0)


def test_density(state):
    r = np.linspace(0.0, 5.0, 11)
    theta = np.linspace(0.0, math.pi, 7)
    rho = probabilityDensity(state, r[:, np.newaxis], theta[np.newaxis, :])
    assert rho.shape == (11, 7)
    assert np.all(rho >= 0.0)
    expected = radialWavefunction(state, 1.3) ** 2 * angularWavefunction(state, 0.7) ** 2
    assert probabilityDensity(state, 1.3, 0.7) == pytest.approx(expected)


def test_sample_density_order(state):
    samples = sampleDensity(state, [1.0, 2.0], [0.5, 1.0, 1.5], [0.0, math.pi])
    assert len(samples) == 12
    assert [(sample.r, sample.theta, sample.phi) for sample in samples[:3]] == [
        (1.0, 0.5, 0.0),
        (1.0, 0.5, math.pi),
        (1.0, 1.0, 0.0),
    ]
    assert samples[0].rho == samples[1].rho
    assert samples[0].rho == pytest.approx(probabilityDensity(state, 1.0, 0.5))
