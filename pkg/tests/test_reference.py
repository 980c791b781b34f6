"""Tests for the textbook baselines."""

from __future__ import annotations

from fractions import Fraction

import pytest

from sommerflux.constants import PhysicalConstants, convert_energy
from sommerflux.errors import QuantumNumberError
from sommerflux.models.quantum import QuantumNumbers
from sommerflux.physics.reference import (
    fine_structure_splitting,
    spin_orbit_discrepancy,
    standard_lande,
    standard_spin_orbit,
)

P_3_2 = QuantumNumbers.from_term(2, 1, "3/2")


def test_standard_lande() -> None:
    """Test the closed-form Lande factor and its input checks."""
    assert standard_lande(0, "1/2", "1/2") == 2.0
    assert standard_lande(1, "1/2", "3/2") == pytest.approx(4 / 3)
    with pytest.raises(QuantumNumberError):
        standard_lande(1, "1/2", "5/2")


def test_spin_orbit_sign_follows_j(consts: PhysicalConstants) -> None:
    """Test j = l + 1/2 is raised and j = l - 1/2 lowered, in ratio 1 : -2 for p states."""
    upper = standard_spin_orbit(P_3_2, 1, consts)
    lower = standard_spin_orbit(QuantumNumbers.from_term(2, 1, "1/2"), 1, consts)

    assert upper > 0.0 > lower
    assert lower == pytest.approx(-2 * upper, rel=1e-12)


def test_spin_orbit_scales_with_z_fourth(consts: PhysicalConstants) -> None:
    """Test the Z^4 scaling of the standard formula."""
    assert standard_spin_orbit(P_3_2, 2, consts) == pytest.approx(
        16 * standard_spin_orbit(P_3_2, 1, consts), rel=1e-12
    )


def test_spin_orbit_undefined_for_s_states(consts: PhysicalConstants) -> None:
    """Test l = 0 is rejected."""
    with pytest.raises(QuantumNumberError):
        standard_spin_orbit(QuantumNumbers.from_term(1, 0, "1/2"), 1, consts)


def test_hydrogen_2p_fine_structure(consts: PhysicalConstants) -> None:
    """Test the 2p splitting is within 1% of the measured 10969 MHz."""
    splitting = fine_structure_splitting(2, 1, 1, consts)

    assert convert_energy(splitting, "MHz", consts) == pytest.approx(10969.04, rel=1e-2)
    assert fine_structure_splitting(2, 0, 1, consts) == 0.0


@pytest.mark.parametrize(
    ("Z", "n_phi", "cos_beta", "expected"),
    [
        (1, 1, 1.0, 1 / 12),
        (2, 1, 1.0, 2 / 12),
        (1, Fraction(3, 2), 1.0, 9 / 48),
        (1, 2, 0.5, 4 / 6),
    ],
)
def test_spin_orbit_discrepancy(
    consts: PhysicalConstants, Z: int, n_phi: Fraction, cos_beta: float, expected: float
) -> None:
    """Test standard / model = Z n_phi^2 / (12 cos(beta)) for 2p3/2."""
    assert spin_orbit_discrepancy(P_3_2, Z, n_phi, cos_beta, consts) == pytest.approx(
        expected, rel=1e-12
    )


def test_spin_orbit_discrepancy_undefined(consts: PhysicalConstants) -> None:
    """Test cos(beta) = 0 leaves the ratio undefined."""
    assert spin_orbit_discrepancy(P_3_2, 1, 1, 0.0, consts) is None
