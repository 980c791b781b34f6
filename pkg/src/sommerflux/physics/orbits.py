"""Sommerfeld orbit geometry and the quantized action.

Semi-axes follow the Bohr-Sommerfeld assignment ``a = n^2 a0/Z`` and ``b = n n_phi a0/Z``. An
initial magnetic flux replaces ``n -> n - e Phi/h`` and ``n_phi -> n_phi - e Phi_phi/h``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import NamedTuple

from sommerflux.constants import PhysicalConstants
from sommerflux.errors import GeometryError, QuantumNumberError
from sommerflux.logging import get_logger
from sommerflux.models.flux import FluxValue
from sommerflux.models.geometry import OrbitGeometry
from sommerflux.models.quantum import QuantumNumbers
from sommerflux.physics.energy import bohr_energy
from sommerflux.physics.quadrature import integrate

logger = get_logger(__name__)


class PerturbedActions(NamedTuple):
    """Generalized momenta ``n h - e Phi`` after an initial flux (J s)."""

    phi: float
    r: float
    total: float


def _check_Z(Z: int) -> None:
    if isinstance(Z, bool) or not isinstance(Z, int) or Z < 1:
        raise GeometryError(f"nuclear charge Z must be a positive integer, got {Z!r}")


def geometry(qn: QuantumNumbers, Z: int, consts: PhysicalConstants) -> OrbitGeometry:
    """Unperturbed orbit of ``qn`` around a nucleus of charge ``Z``.

    Args:
        qn: Quantum numbers; ``n`` and ``n_phi`` fix the semi-axes.
        Z: Nuclear charge.
        consts: Physical constants.

    Returns:
        OrbitGeometry: ``a = n^2 a0/Z``, ``b = n n_phi a0/Z``.

    Raises:
        GeometryError: ``n_phi > n`` or ``Z < 1``.
    """

    _check_Z(Z)
    if qn.n_phi > qn.n:
        raise GeometryError(f"n_phi={qn.n_phi} exceeds n={qn.n} (b > a)")
    scale = consts.a0 / Z
    return OrbitGeometry.from_axes(qn.n**2 * scale, qn.n * float(qn.n_phi) * scale)


def geometry_with_flux(
    qn: QuantumNumbers,
    Z: int,
    flux_total: float,
    flux_phi: float,
    consts: PhysicalConstants,
) -> OrbitGeometry:
    """Orbit deformed by an initial flux (first-order replacement rules).

    Args:
        qn: Quantum numbers.
        Z: Nuclear charge.
        flux_total: Total initial flux ``Phi = Phi_phi + Phi_r`` in Wb.
        flux_phi: Azimuthal part ``Phi_phi`` in Wb.
        consts: Physical constants.

    Returns:
        OrbitGeometry: ``a = (n - e Phi/h)^2 a0/Z`` and
        ``b = (n - e Phi/h)(n_phi - e Phi_phi/h) a0/Z``.

    Raises:
        GeometryError: The flux is outside the perturbative regime or degenerates the orbit.
    """

    _check_Z(Z)
    n_eff = qn.n - consts.e * flux_total / consts.h
    n_phi_eff = float(qn.n_phi) - consts.e * flux_phi / consts.h
    if n_eff <= 0.0:
        raise GeometryError(
            f"flux {flux_total!r} Wb exceeds the perturbative regime |e Phi/h| < n={qn.n}"
        )
    scale = consts.a0 / Z
    a = n_eff**2 * scale
    b = n_eff * n_phi_eff * scale
    if b <= 0.0 or b > a:
        raise GeometryError(f"flux-deformed orbit is degenerate (a={a!r}, b={b!r})")
    return OrbitGeometry.from_axes(a, b)


def quantum_area(
    n: int, n_phi: Fraction | float, Z: int, consts: PhysicalConstants
) -> float:
    """Vector-area magnitude ``pi n^3 sqrt(n_phi (n_phi + 1)) a0^2 / Z^2`` for any n_phi."""

    _check_Z(Z)
    x = float(n_phi)
    if x < 0.0:
        raise QuantumNumberError(f"governing n_phi must be >= 0, got {n_phi}")
    return math.pi * n**3 * math.sqrt(x * (x + 1.0)) * consts.a0**2 / Z**2


def vector_area_magnitude(qn: QuantumNumbers, Z: int, consts: PhysicalConstants) -> float:
    """Quantum vector-area size of the orbit.

    The classical area ``pi n^3 n_phi a0^2/Z^2`` is ``geometry(...).area``.
    """

    return quantum_area(qn.n, qn.n_phi, Z, consts)


def final_flux(qn: QuantumNumbers, consts: PhysicalConstants) -> float:
    """Flux enclosed by a quantized orbit started without initial flux: ``n h/e``."""

    return qn.n * consts.h / consts.e


def perturbed_actions(
    qn: QuantumNumbers, flux: FluxValue, consts: PhysicalConstants
) -> PerturbedActions:
    """Replace each action ``n_x h`` by ``n_x h - e Phi_x``."""

    phi = float(qn.n_phi) * consts.h - consts.e * flux.phi_component
    r = float(qn.n_r) * consts.h - consts.e * flux.r_component
    return PerturbedActions(phi=phi, r=r, total=qn.n * consts.h - consts.e * flux.total)


def orientation_angle(qn: QuantumNumbers) -> float:
    """Angle between orbit normal and field axis, ``cos(alpha) = n_psi / n_phi``."""

    qn.require("n_psi")
    return math.acos(float(qn.n_psi / qn.n_phi))


def action_integral(
    qn: QuantumNumbers, Z: int, consts: PhysicalConstants, quadrature_tol: float = 1e-10
) -> float:
    """Closed-orbit action of the unperturbed Kepler motion, evaluated numerically.

    The orbit is parametrized by the eccentric anomaly ``E`` so the integrand stays regular at
    perihelion: ``r = a (1 - eps cos E)`` and ``|ds/dE| = sqrt(a^2 sin^2 E + b^2 cos^2 E)``. The
    Kepler momentum at radius ``r`` is ``sqrt(2 m_e (W + k/r))`` with ``k = Z e^2/(4 pi eps0)`` and
    ``W`` the gross-structure energy of ``n``.

    Args:
        qn: Quantum numbers (``n``, ``n_phi``).
        Z: Nuclear charge.
        consts: Physical constants.
        quadrature_tol: Relative tolerance of the quadrature.

    Returns:
        The action in J s; equals ``n h`` up to quadrature error.

    Raises:
        QuadratureError: The quadrature did not converge.
    """

    geom = geometry(qn, Z, consts)
    energy = bohr_energy(qn.n, Z, consts)
    k = Z * consts.e**2 / (4.0 * math.pi * consts.eps0)
    two_m = 2.0 * consts.m_e

    def integrand(anomaly: float) -> float:
        sin_e, cos_e = math.sin(anomaly), math.cos(anomaly)
        r = geom.a * (1.0 - geom.eps * cos_e)
        kinetic = max(energy + k / r, 0.0)
        momentum = math.sqrt(two_m * kinetic)
        return momentum * math.hypot(geom.a * sin_e, geom.b * cos_e) / consts.h

    # the integrand peaks at perihelion (E = 0) for eccentric orbits
    in_quanta = integrate(integrand, -math.pi, math.pi, tol=quadrature_tol, points=[0.0])
    logger.debug("action n=%d n_phi=%s Z=%d -> %.15g h", qn.n, qn.n_phi, Z, in_quanta)
    return in_quanta * consts.h
