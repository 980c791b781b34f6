"""Gross-structure energies and their flux perturbation.

Sign convention: a positive initial flux deepens the level. ``energy_shift_linear`` returns the
first-order change of the binding energy, so ``W(Phi) = W(0) - dW(Phi) + O(Phi^2)``.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from sommerflux.constants import PhysicalConstants
from sommerflux.errors import SommerfluxError
from sommerflux.logging import get_logger
from sommerflux.models.energy import EnergyShift
from sommerflux.models.flux import FluxValue
from sommerflux.models.quantum import QuantumNumbers

logger = get_logger(__name__)

# |e Phi / n h| above which the first-order shift is flagged
LINEAR_REGIME_LIMIT = 0.01


class PerturbationError(SommerfluxError):
    pass


class CoefficientForms(NamedTuple):
    """Both forms of the first-order coefficient (J/Wb)."""

    fundamental: float
    rydberg: float


def _flux_total(flux: float | FluxValue) -> float:
    return flux.total if isinstance(flux, FluxValue) else float(flux)


def bohr_energy(n: int, Z: int, consts: PhysicalConstants) -> float:
    """``-Z^2 R_inf h c / n^2`` in joules."""

    if n < 1:
        raise PerturbationError(f"principal quantum number must be >= 1, got {n}")
    return -(Z**2) * consts.rydberg_energy / n**2


def energy_exact(
    qn: QuantumNumbers, Z: int, flux: float | FluxValue, consts: PhysicalConstants
) -> float:
    """Closed-form energy of a flux-perturbed orbit.

    Args:
        qn: Quantum numbers; only ``n`` enters.
        Z: Nuclear charge.
        flux: Initial flux ``Phi = Phi_phi + Phi_r`` (Wb).
        consts: Physical constants.

    Returns:
        ``W = -m_e Z^2 e^4 / (8 eps0^2 (n h - e Phi)^2)`` in joules.

    Raises:
        PerturbationError: ``|e Phi| >= n h``.
    """

    phi = _flux_total(flux)
    action = qn.n * consts.h
    reduced = action - consts.e * phi
    if abs(consts.e * phi) >= action or reduced <= 0.0:
        raise PerturbationError(
            f"flux {phi!r} Wb outside the perturbative regime |e Phi| < n h (n={qn.n})"
        )
    return -consts.m_e * Z**2 * consts.e**4 / (8.0 * consts.eps0**2 * reduced**2)


def coefficient_forms(n: int, Z: int, consts: PhysicalConstants) -> CoefficientForms:
    """``m_e Z^2 e^5/(4 eps0^2 n^3 h^3)`` and ``2 R_inf c e Z^2/n^3``."""

    fundamental = consts.m_e * Z**2 * consts.e**5 / (4.0 * consts.eps0**2 * n**3 * consts.h**3)
    rydberg = 2.0 * consts.R_inf * consts.c * consts.e * Z**2 / n**3
    return CoefficientForms(fundamental=fundamental, rydberg=rydberg)


def energy_shift_linear(
    qn: QuantumNumbers,
    Z: int,
    flux: float | FluxValue,
    consts: PhysicalConstants,
    *,
    label: str = "",
) -> EnergyShift:
    """First-order shift ``2 R_inf c e Z^2 Phi / n^3`` of the level ``n``.

    Args:
        qn: Quantum numbers of the perturbed orbit.
        Z: Nuclear charge.
        flux: Initial flux in Wb, or a :class:`FluxValue`.
        consts: Physical constants.
        label: Optional label carried on the result.

    Returns:
        EnergyShift: First-order shift carrying the state and flux.
    """

    flux_value = flux if isinstance(flux, FluxValue) else FluxValue.azimuthal(
        float(flux), "composite"
    )
    ratio = consts.e * flux_value.total / (qn.n * consts.h)
    if abs(ratio) > LINEAR_REGIME_LIMIT:
        logger.warning(
            "First-order shift outside linear regime: |e Phi/n h| = %.3g > %g",
            abs(ratio),
            LINEAR_REGIME_LIMIT,
        )
    coefficient = coefficient_forms(qn.n, Z, consts).rydberg
    return EnergyShift(
        value=coefficient * flux_value.total,
        order="first_order",
        state=qn,
        flux=flux_value,
        label=label,
    )


def linearization_residual(
    qn: QuantumNumbers, Z: int, flux: float, consts: PhysicalConstants
) -> float:
    """Second-order remainder ``|W(0) - W(Phi) - dW(Phi)|`` in joules."""

    unperturbed = energy_exact(qn, Z, 0.0, consts)
    perturbed = energy_exact(qn, Z, flux, consts)
    linear = energy_shift_linear(qn, Z, flux, consts).value
    residual = abs(unperturbed - perturbed - linear)
    if not math.isfinite(residual):
        raise PerturbationError(f"non-finite linearization residual at flux {flux!r}")
    return residual
