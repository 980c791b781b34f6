"""Magnetic flux through Sommerfeld orbits.

Two sources are modelled: a uniform external field crossing the tilted orbit, and a point dipole
at the focus occupied by the nucleus. For the dipole the model field ``(mu0/4pi) mu_f / r^3`` is
used in the orbital plane; flux lines close, so the flux through the orbit is the negative of the
exterior flux ``Phi_out = (mu0/4pi) mu_f \\oint dphi / r(phi) = mu0 mu_f / (2p)``.

Closed forms and the quadrature oracles live side by side so each can check the other.
"""

from __future__ import annotations

import math

from sommerflux.constants import PhysicalConstants
from sommerflux.errors import SommerfluxError
from sommerflux.logging import get_logger
from sommerflux.models.flux import FluxValue
from sommerflux.models.geometry import OrbitGeometry
from sommerflux.physics.quadrature import integrate, integrate_2d

logger = get_logger(__name__)

# fraction of the requested tolerance left to the truncated tail of the 2D cubature
CUBATURE_TAIL_FRACTION = 0.1

_COS_FLOOR = 1e-15


class FluxError(SommerfluxError):
    pass


def clean_cos(angle: float) -> float:
    """``cos(angle)`` with round-off below 1e-15 snapped to zero (cos(pi/2) == 0)."""

    value = math.cos(angle)
    return 0.0 if abs(value) < _COS_FLOOR else value


def _check_finite(name: str, value: float) -> None:
    if not math.isfinite(value):
        raise FluxError(f"{name} must be finite, got {value!r}")


def uniform_field_flux(geom: OrbitGeometry, B: float, alpha: float) -> FluxValue:
    """Flux ``pi a b B cos(alpha)`` of a uniform field through the orbit.

    Args:
        geom: Orbit geometry (classical area ``pi a b``).
        B: Field strength in T.
        alpha: Angle between field and orbit normal in rad.

    Returns:
        FluxValue: Azimuthal flux tagged ``uniform``.
    """

    _check_finite("B", B)
    _check_finite("alpha", alpha)
    return FluxValue.azimuthal(geom.area * B * clean_cos(alpha), "uniform")


def dipole_exterior_flux(
    geom: OrbitGeometry, mu_perp: float, consts: PhysicalConstants
) -> float:
    """Exterior flux ``mu0 mu_f / (2p)`` of a focal dipole (Wb)."""

    _check_finite("mu_perp", mu_perp)
    if geom.p <= 0.0:
        raise FluxError("focal parameter must be positive")
    return consts.mu0 * mu_perp / (2.0 * geom.p)


def dipole_focus_flux(
    geom: OrbitGeometry, mu_perp: float, consts: PhysicalConstants
) -> FluxValue:
    """Interior flux ``-mu0 mu_f / (2p)`` of a dipole at the focus.

    Args:
        geom: Orbit geometry; only the focal parameter enters.
        mu_perp: Dipole component along the orbit normal (J/T).
        consts: Physical constants.

    Returns:
        FluxValue: Azimuthal flux tagged ``dipole_focus``.

    Raises:
        FluxError: Non-finite moment or vanishing focal parameter.
    """

    exterior = dipole_exterior_flux(geom, mu_perp, consts)
    return FluxValue.azimuthal(-exterior if exterior else 0.0, "dipole_focus")


def dipole_flux_oracle(
    geom: OrbitGeometry, mu_perp: float, consts: PhysicalConstants, tol: float = 1e-10
) -> float:
    """Interior dipole flux by adaptive quadrature.

    The radial integral ``\\int_{r(phi)}^\\infty r^{-2} dr = 1/r(phi)`` is done analytically, the
    angular integral of ``1/r(phi) = (1 - eps cos phi)/p`` numerically.

    Returns:
        ``-Phi_out`` in Wb.

    Raises:
        QuadratureError: The quadrature did not converge.
    """

    _check_finite("mu_perp", mu_perp)
    if mu_perp == 0.0:
        return 0.0

    def inverse_radius(phi: float) -> float:
        return (1.0 - geom.eps * math.cos(phi)) / geom.p

    angular = integrate(inverse_radius, 0.0, 2.0 * math.pi, tol=tol)
    return -consts.mu0 / (4.0 * math.pi) * mu_perp * angular


def dipole_flux_cubature(
    geom: OrbitGeometry, mu_perp: float, consts: PhysicalConstants, tol: float = 1e-6
) -> float:
    """Interior dipole flux by 2D cubature over a truncated exterior annulus.

    The region ``r(phi) < r < R`` with ``R = 10 p / tol`` is integrated in ``(phi, ln r)``; the
    neglected tail is at most ``tol/10`` of the total. Slow; a secondary check only.
    """

    _check_finite("mu_perp", mu_perp)
    if mu_perp == 0.0:
        return 0.0
    if not tol > 0.0:
        raise FluxError(f"tolerance must be positive, got {tol!r}")
    log_outer = math.log(geom.p / (CUBATURE_TAIL_FRACTION * tol))

    def log_inner(phi: float) -> float:
        return math.log(geom.p / (1.0 - geom.eps * math.cos(phi)))

    def integrand(log_r: float, _phi: float) -> float:
        # B r dr with B ~ r^-3 and dr = r d(ln r)
        return math.exp(-log_r)

    total = integrate_2d(
        integrand, 0.0, 2.0 * math.pi, log_inner, lambda _phi: log_outer, tol=tol / 10.0
    )
    return -consts.mu0 / (4.0 * math.pi) * mu_perp * total


def tilted_dipole_flux(
    geom: OrbitGeometry, mu: float, beta: float, consts: PhysicalConstants
) -> FluxValue:
    """Interior flux of a focal dipole tilted by ``beta`` from the orbit normal."""

    _check_finite("beta", beta)
    return dipole_focus_flux(geom, mu * clean_cos(beta), consts)


def flux_in_quanta(flux: FluxValue | float, consts: PhysicalConstants) -> float:
    """Flux expressed in units of ``Phi0 = h/e``."""

    total = flux.total if isinstance(flux, FluxValue) else float(flux)
    return total / consts.flux_quantum
