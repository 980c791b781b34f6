"""Textbook baselines the orbit model is compared against."""

from __future__ import annotations

import math
from fractions import Fraction

from sommerflux.constants import PhysicalConstants
from sommerflux.errors import QuantumNumberError, SommerfluxError
from sommerflux.models.quantum import HALF, QuantumNumbers
from sommerflux.models.species import NuclearSpecies
from sommerflux.physics.effects_simple import spin_orbit_simplified

SPIN = HALF


class HyperfineError(SommerfluxError):
    pass


def standard_lande(
    l: int,  # noqa: E741
    s: Fraction | str | float,
    j: Fraction | str | float,
) -> float:
    """``g_j = 1 + [j(j+1) + s(s+1) - l(l+1)] / (2 j(j+1))``."""

    s, j = Fraction(s), Fraction(j)
    if l < 0 or s < 0 or j <= 0 or j not in (l - s, l + s):
        raise QuantumNumberError(f"invalid (l, s, j) = ({l}, {s}, {j})")
    jj = j * (j + 1)
    return float(1 + (jj + s * (s + 1) - l * (l + 1)) / (2 * jj))


def standard_hyperfine_A(
    qn: QuantumNumbers, species: NuclearSpecies, consts: PhysicalConstants
) -> float:
    """Magnetic-dipole constant with the usual ``(2l + 1)`` denominator (J)."""

    qn.require("l", "j")
    if species.I == 0:
        raise HyperfineError(f"{species.name}: no hyperfine structure (I=0)")
    l, j = qn.l, qn.j  # noqa: E741
    assert l is not None and j is not None
    return (
        2.0
        * consts.alpha**2
        * species.Z**3
        * consts.rydberg_energy
        * consts.mu_e
        * species.mu_nuc
        / (consts.mu_B**2 * qn.n**3 * float(j * (j + 1)) * (2 * l + 1) * float(species.I))
    )


def standard_spin_orbit(qn: QuantumNumbers, Z: int, consts: PhysicalConstants) -> float:
    """First-order hydrogenic spin-orbit shift (J).

    ``(mu0/4pi) g_s mu_B^2 Z^4 [j(j+1) - l(l+1) - s(s+1)] / (2 a0^3 n^3 l(l+1/2)(l+1))``: the
    expectation ``<1/r^3> = Z^3/(a0^3 n^3 l(l+1/2)(l+1))`` times the nuclear charge ``Z``.
    """

    qn.require("l", "j")
    l, j = qn.l, qn.j  # noqa: E741
    assert l is not None and j is not None
    if l == 0:
        raise QuantumNumberError("spin-orbit shift is undefined for l = 0")
    bracket = j * (j + 1) - l * (l + 1) - SPIN * (SPIN + 1)
    radial = l * (l + SPIN) * (l + 1)
    return (
        consts.mu0
        / (4.0 * math.pi)
        * consts.g_s
        * consts.mu_B**2
        * Z**4
        * float(bracket)
        / (2.0 * consts.a0**3 * qn.n**3 * float(radial))
    )


def fine_structure_splitting(
    n: int, l: int, Z: int, consts: PhysicalConstants  # noqa: E741
) -> float:
    """Spin-orbit shift of ``j = l + 1/2`` minus that of ``j = l - 1/2``; zero for ``l = 0``."""

    if l == 0:
        return 0.0
    upper = QuantumNumbers.from_term(n, l, l + SPIN)
    lower = QuantumNumbers.from_term(n, l, l - SPIN)
    return standard_spin_orbit(upper, Z, consts) - standard_spin_orbit(lower, Z, consts)


def spin_orbit_discrepancy(
    qn: QuantumNumbers,
    Z: int,
    n_phi: Fraction | str | float,
    cos_beta: float,
    consts: PhysicalConstants,
) -> float | None:
    """Ratio standard / model of the spin-orbit shift; ``None`` when the model shift vanishes.

    The model shift uses an undecomposed orbit of the same ``n`` with azimuthal number ``n_phi``.
    """

    model_shift = spin_orbit_simplified(QuantumNumbers.sommerfeld(qn.n, n_phi), Z, cos_beta, consts)
    if model_shift.value == 0.0:
        return None
    return standard_spin_orbit(qn, Z, consts) / model_shift.value
