"""Tests for the spin-free orbit effects."""

from __future__ import annotations

import math

import pytest

from sommerflux.constants import PhysicalConstants, convert_energy
from sommerflux.errors import SommerfluxError
from sommerflux.models.quantum import QuantumNumbers
from sommerflux.physics.effects_simple import (
    GROUND_STATE_COS_BETA,
    ground_state_preset,
    hyperfine_interval_simplified,
    hyperfine_simplified,
    spin_orbit_simplified,
    zeeman_normal,
)
from sommerflux.registry import DataRegistry


@pytest.mark.parametrize(("n_psi", "expected"), [(2, 2.0), (1, 1.0), (0, 0.0), (-2, -2.0)])
def test_normal_zeeman(consts: PhysicalConstants, n_psi: int, expected: float) -> None:
    """Test mu_B n_psi B for a field along z."""
    qn = QuantumNumbers.sommerfeld(3, 2, n_psi=n_psi)

    shift = zeeman_normal(qn, 1, 0.5, consts)

    assert shift.value == pytest.approx(0.5 * expected * consts.mu_B, rel=1e-12, abs=1e-40)


def test_normal_zeeman_explicit_angle(consts: PhysicalConstants) -> None:
    """Test an explicit tilt overrides n_psi."""
    qn = QuantumNumbers.sommerfeld(2, 1)

    shift = zeeman_normal(qn, 1, 1.0, consts, alpha=math.pi / 3)

    assert shift.value == pytest.approx(0.5 * consts.mu_B, rel=1e-12)


def test_ground_state_preset() -> None:
    """Test n_r = n_phi = 1/2 with cos(beta) = 2/3."""
    preset = ground_state_preset()

    assert preset.state.n == 1
    assert preset.state.n_phi == preset.state.n_r
    assert preset.cos_beta == GROUND_STATE_COS_BETA


def test_hydrogen_hyperfine_interval(consts: PhysicalConstants, registry: DataRegistry) -> None:
    """Test the simplified ground-state interval is about 1421 MHz."""
    preset = ground_state_preset()
    proton = registry.species("H-1")

    interval = hyperfine_interval_simplified(preset.state, proton, preset.cos_beta, consts)

    assert convert_energy(interval, "MHz", consts) == pytest.approx(1421.15, rel=1e-4)


def test_hyperfine_shift_is_negative(consts: PhysicalConstants, registry: DataRegistry) -> None:
    """Test the interior dipole flux lowers the level for an aligned proton."""
    preset = ground_state_preset()

    shift = hyperfine_simplified(preset.state, registry.species("H-1"), preset.cos_beta, consts)

    assert shift.sign == -1
    assert shift.flux is not None and shift.flux.source == "dipole_focus"


def test_hyperfine_rejects_bad_cosine(consts: PhysicalConstants, registry: DataRegistry) -> None:
    """Test |cos(beta)| <= 1."""
    with pytest.raises(SommerfluxError):
        hyperfine_simplified(ground_state_preset().state, registry.species("H-1"), 1.5, consts)


def test_spin_orbit_simplified(consts: PhysicalConstants) -> None:
    """Test the closed form and its scaling in Z and cos(beta)."""
    qn = QuantumNumbers.sommerfeld(2, 1)

    shift = spin_orbit_simplified(qn, 1, 1.0, consts)
    expected = consts.mu0 / (4 * math.pi) * 2 * consts.mu_B**2 * 2 / (8 * consts.a0**3)

    assert shift.value == pytest.approx(expected, rel=1e-12)
    assert spin_orbit_simplified(qn, 2, 1.0, consts).value == pytest.approx(
        8 * shift.value, rel=1e-12
    )
    assert spin_orbit_simplified(qn, 1, 0.0, consts).value == 0.0
