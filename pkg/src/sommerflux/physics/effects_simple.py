"""Shifts of the spin-free orbit model: normal Zeeman, simplified hyperfine and spin-orbit.

Every shift is computed twice, as a closed form and by chaining a flux calculator into
:func:`~sommerflux.physics.energy.energy_shift_linear`; the two must agree to 1e-12 relative.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import NamedTuple

from sommerflux.constants import PhysicalConstants
from sommerflux.errors import SommerfluxError
from sommerflux.logging import get_logger
from sommerflux.models.energy import EnergyShift
from sommerflux.models.quantum import QuantumNumbers
from sommerflux.models.species import NuclearSpecies
from sommerflux.physics.checks import assert_factorization
from sommerflux.physics.energy import energy_shift_linear
from sommerflux.physics.flux import clean_cos, dipole_focus_flux, uniform_field_flux
from sommerflux.physics.orbits import geometry, orientation_angle

logger = get_logger(__name__)

GROUND_STATE_COS_BETA = 2.0 / 3.0


class GroundStatePreset(NamedTuple):
    state: QuantumNumbers
    cos_beta: float


def ground_state_preset() -> GroundStatePreset:
    """Ground state with ``n_r = n_phi = 1/2`` and the assumed ``cos(beta) = 2/3``."""

    state = QuantumNumbers(n_r=Fraction(1, 2), n_phi=Fraction(1, 2))
    return GroundStatePreset(state=state, cos_beta=GROUND_STATE_COS_BETA)


def _check_cos(cos_beta: float) -> None:
    if not math.isfinite(cos_beta) or abs(cos_beta) > 1.0:
        raise SommerfluxError(f"cos_beta must lie in [-1, 1], got {cos_beta!r}")


def zeeman_normal(
    qn: QuantumNumbers,
    Z: int,
    B: float,
    consts: PhysicalConstants,
    alpha: float | None = None,
) -> EnergyShift:
    """Normal Zeeman shift ``mu_B n_psi B`` with ``n_psi = n_phi cos(alpha)``.

    Args:
        qn: Orbit quantum numbers; ``n_psi`` fixes ``alpha`` when it is not given.
        Z: Nuclear charge (cancels in the result).
        B: Field strength in T.
        consts: Physical constants.
        alpha: Tilt of the orbit normal against the field in rad.

    Returns:
        EnergyShift: The chained first-order shift.
    """

    if alpha is None:
        alpha = orientation_angle(qn)
    flux = uniform_field_flux(geometry(qn, Z, consts), B, alpha)
    shift = energy_shift_linear(qn, Z, flux, consts, label="zeeman_normal")
    closed = consts.mu_B * float(qn.n_phi) * clean_cos(alpha) * B
    assert_factorization("zeeman_normal", closed, shift.value)
    return shift


def hyperfine_simplified(
    qn: QuantumNumbers,
    species: NuclearSpecies,
    cos_beta: float,
    consts: PhysicalConstants,
) -> EnergyShift:
    """Shift from the nuclear dipole at the focus, tilted by ``beta``.

    Closed form ``-alpha^2 Z^3 h R_inf c (mu_c/mu_B) cos(beta) / (n^3 n_phi^2)``; the chain uses
    the interior dipole flux, so both carry the minus sign.
    """

    _check_cos(cos_beta)
    Z = species.Z
    mu_c = species.mu_nuc
    flux = dipole_focus_flux(geometry(qn, Z, consts), mu_c * cos_beta, consts)
    shift = energy_shift_linear(qn, Z, flux, consts, label="hyperfine_simplified")
    n_phi = float(qn.n_phi)
    closed = -(
        consts.alpha**2
        * Z**3
        * consts.rydberg_energy
        * (mu_c / consts.mu_B)
        * cos_beta
        / (qn.n**3 * n_phi**2)
    )
    assert_factorization("hyperfine_simplified", closed, shift.value)
    return shift


def hyperfine_interval_simplified(
    qn: QuantumNumbers,
    species: NuclearSpecies,
    cos_beta: float,
    consts: PhysicalConstants,
) -> float:
    """Splitting between the two opposite dipole orientations, ``2 |shift|`` in joules."""

    return 2.0 * hyperfine_simplified(qn, species, cos_beta, consts).magnitude


def spin_orbit_simplified(
    qn: QuantumNumbers,
    Z: int,
    cos_beta: float,
    consts: PhysicalConstants,
) -> EnergyShift:
    """Electron's own moment ``g_s mu_B`` placed at the focus.

    Returns the positive closed form ``Z^3 (mu0/4pi) g_s mu_B^2 2 cos(beta) / (n^3 a0^3 n_phi^2)``
    with the chained flux attached; the chain carries the interior (negative) flux and is
    compared in magnitude.
    """

    _check_cos(cos_beta)
    moment = consts.g_s * consts.mu_B
    flux = dipole_focus_flux(geometry(qn, Z, consts), moment * cos_beta, consts)
    chained = energy_shift_linear(qn, Z, flux, consts)
    n_phi = float(qn.n_phi)
    closed = (
        Z**3
        * consts.mu0
        / (4.0 * math.pi)
        * consts.g_s
        * consts.mu_B**2
        * 2.0
        * cos_beta
        / (qn.n**3 * consts.a0**3 * n_phi**2)
    )
    assert_factorization("spin_orbit_simplified", closed, -chained.value)
    return EnergyShift(
        value=closed, order="first_order", state=qn, flux=flux, label="spin_orbit_simplified"
    )
