"""Vector-area coupling rules: Landé factor, anomalous Zeeman, Paschen-Back and hyperfine.

Orbital (``l``) and spin (``s``) contributions each own a vector area. Quantum magnitudes
``pi n^3 sqrt(x (x + 1)) a0^2 / Z^2`` (governing numbers ``n_phi^l = l``, ``n_phi^s = 1/2``,
``n_phi^j = j``) enter the projections; the classical ``n_phi`` area enters the field
projection. The spin contribution obeys the spin rule ``Phi_phi^s = Phi_r^s`` and therefore
responds twice as strongly to a flux.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Literal

from pydantic import BaseModel, ConfigDict, NonNegativeFloat, PositiveFloat

from sommerflux.constants import PhysicalConstants
from sommerflux.errors import QuantumNumberError, SommerfluxError
from sommerflux.logging import get_logger
from sommerflux.models.energy import EnergyShift
from sommerflux.models.flux import FluxValue
from sommerflux.models.quantum import HALF, HalfInt, QuantumNumbers, f_values
from sommerflux.models.species import NuclearSpecies
from sommerflux.physics.checks import assert_factorization
from sommerflux.physics.energy import energy_shift_linear
from sommerflux.physics.flux import clean_cos
from sommerflux.physics.orbits import quantum_area
from sommerflux.physics.reference import HyperfineError, fine_structure_splitting

logger = get_logger(__name__)

Branch = Literal["+", "-"]
Regime = Literal["weak", "strong", "intermediate", "any"]
AreaPart = Literal["l", "s"]

SPIN = HALF

# weak below WEAK_FACTOR * dE_fs, strong above STRONG_FACTOR * dE_fs
WEAK_FACTOR = 0.1
STRONG_FACTOR = 10.0


class RegimeError(SommerfluxError):
    pass


class VectorAreaTriple(BaseModel):
    """Quantum magnitudes of the orbital, spin and total vector areas (m^2)."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    A_l: NonNegativeFloat
    A_s: PositiveFloat
    A_j: PositiveFloat
    n_phi_l: HalfInt
    n_phi_s: HalfInt = HALF
    n_phi_j: HalfInt


def _check_l_j(l: int, j: Fraction) -> None:  # noqa: E741
    if l < 0:
        raise QuantumNumberError(f"l must be >= 0, got {l}")
    if j not in (l - SPIN, l + SPIN) or j < HALF:
        raise QuantumNumberError(f"invalid (l, j) pair: l={l}, j={j}")


def branch_for(l: int, j: Fraction) -> Branch:  # noqa: E741
    """``+`` for ``j = l + 1/2``, ``-`` for ``j = l - 1/2``."""

    _check_l_j(l, j)
    return "+" if j > l else "-"


def vector_area_triple(
    n: int, l: int, j: Fraction | str | float, Z: int, consts: PhysicalConstants  # noqa: E741
) -> VectorAreaTriple:
    """Vector areas of an ``n l_j`` term."""

    j = Fraction(j)
    _check_l_j(l, j)
    return VectorAreaTriple(
        A_l=quantum_area(n, l, Z, consts),
        A_s=quantum_area(n, SPIN, Z, consts),
        A_j=quantum_area(n, j, Z, consts),
        n_phi_l=l,
        n_phi_j=j,
    )


def _unit_triple(l: int, j: Fraction) -> VectorAreaTriple:  # noqa: E741
    """Triple in units of ``pi n^3 a0^2 / Z^2``."""

    def size(x: Fraction) -> float:
        return math.sqrt(float(x * (x + 1)))

    return VectorAreaTriple(
        A_l=size(Fraction(l)), A_s=size(SPIN), A_j=size(j), n_phi_l=l, n_phi_j=j
    )


def project_area(x: AreaPart, triple: VectorAreaTriple) -> float:
    """Projection of ``A_l`` or ``A_s`` onto the direction of ``A_j``.

    ``A_l . A_j/|A_j| = (|A_j|^2 - |A_s|^2 + |A_l|^2) / (2 |A_j|)``; the ``s`` case swaps the
    roles of ``A_l`` and ``A_s``. The two projections sum to ``|A_j|``.
    """

    if triple.A_j == 0.0:
        raise QuantumNumberError("total vector area vanishes")
    j2, s2, l2 = triple.A_j**2, triple.A_s**2, triple.A_l**2
    if x == "l":
        return 0.5 * (j2 - s2 + l2) / triple.A_j
    if x == "s":
        return 0.5 * (j2 + s2 - l2) / triple.A_j
    raise ValueError(f"unknown area part {x!r}")


def effective_zeeman_area(triple: VectorAreaTriple) -> float:
    """``(2 A_s + A_l) . A_j / |A_j|``; the factor 2 is the spin rule."""

    return 2.0 * project_area("s", triple) + project_area("l", triple)


def lande_closed_form(l: int, j: Fraction, s: Fraction = SPIN) -> Fraction:  # noqa: E741
    """``1 + [j(j+1) + s(s+1) - l(l+1)] / (2 j(j+1))`` as an exact fraction."""

    jj = j * (j + 1)
    return 1 + (jj + s * (s + 1) - l * (l + 1)) / (2 * jj)


def lande_g(l: int, s: Fraction | str | float, j: Fraction | str | float) -> float:  # noqa: E741
    """Landé factor via the vector-area route.

    Args:
        l: Orbital quantum number.
        s: Spin, fixed at 1/2.
        j: Total angular momentum ``l +- 1/2``.

    Returns:
        ``(2 A_s + A_l) . A_j / |A_j|^2``, checked against the closed form to 1e-12.

    Raises:
        QuantumNumberError: Invalid ``(l, s, j)``.
    """

    if Fraction(s) != SPIN:
        raise QuantumNumberError(f"only s = 1/2 is supported, got {s}")
    j = Fraction(j)
    _check_l_j(l, j)
    triple = _unit_triple(l, j)
    g = effective_zeeman_area(triple) / triple.A_j
    assert_factorization(f"lande_g(l={l}, j={j})", float(lande_closed_form(l, j)), g)
    return g


def field_projection(j: Fraction, m_j: Fraction, B: float) -> float:
    """Field component along ``A_j``: ``m_j B / sqrt(j (j + 1))``."""

    return float(m_j) * B / math.sqrt(float(j * (j + 1)))


def _decomposed(qn: QuantumNumbers, *names: str) -> int:
    qn.require("l", *names)
    assert qn.l is not None
    return qn.l


def zeeman_flux(
    qn: QuantumNumbers, Z: int, B: float, consts: PhysicalConstants
) -> FluxValue:
    """Weak-field flux ``(pi n^3 a0^2 / Z^2) g_j m_j B``.

    Built as (projected area) x (projected field); the spin share follows the spin rule.
    """

    l = _decomposed(qn, "j", "m_j")  # noqa: E741
    triple = vector_area_triple(qn.n, l, qn.j, Z, consts)  # type: ignore[arg-type]
    field = field_projection(qn.j, qn.m_j, B)  # type: ignore[arg-type]
    spin = FluxValue.spin_rule(2.0 * project_area("s", triple) * field, "uniform")
    orbital = FluxValue.azimuthal(project_area("l", triple) * field, "uniform")
    return spin + orbital


def field_regime(
    qn: QuantumNumbers, Z: int, B: float, consts: PhysicalConstants
) -> Regime:
    """Classify ``mu_B B`` against the fine-structure splitting of the ``(n, l)`` term.

    ``l = 0`` terms have no splitting and are admissible in both limits (``any``).
    """

    l = _decomposed(qn)  # noqa: E741
    if l == 0:
        return "any"
    splitting = abs(fine_structure_splitting(qn.n, l, Z, consts))
    zeeman = consts.mu_B * abs(B)
    if zeeman < WEAK_FACTOR * splitting:
        return "weak"
    if zeeman > STRONG_FACTOR * splitting:
        return "strong"
    return "intermediate"


def require_regime(
    qn: QuantumNumbers,
    Z: int,
    B: float,
    consts: PhysicalConstants,
    expected: Literal["weak", "strong"],
) -> None:
    """Raise :class:`RegimeError` unless the field lies in the ``expected`` limit."""

    regime = field_regime(qn, Z, B, consts)
    if regime not in (expected, "any"):
        raise RegimeError(
            f"B={B!r} T is in the {regime} regime for n={qn.n}, l={qn.l}; "
            f"{expected}-field formulas do not apply"
        )


def zeeman_anomalous(
    qn: QuantumNumbers,
    Z: int,
    B: float,
    consts: PhysicalConstants,
    *,
    check_regime: bool = True,
) -> EnergyShift:
    """Weak-field shift ``mu_B g_j m_j B``.

    Args:
        qn: Decomposed state with ``l``, ``j`` and ``m_j``.
        Z: Nuclear charge (cancels).
        B: Field strength in T.
        consts: Physical constants.
        check_regime: Refuse fields outside the weak regime; intermediate fields always are.

    Returns:
        EnergyShift: The chained shift.
    """

    if check_regime:
        require_regime(qn, Z, B, consts, "weak")
    flux = zeeman_flux(qn, Z, B, consts)
    shift = energy_shift_linear(qn, Z, flux, consts, label="zeeman_anomalous")
    g = lande_g(qn.l, SPIN, qn.j)  # type: ignore[arg-type]
    closed = consts.mu_B * g * float(qn.m_j) * B  # type: ignore[arg-type]
    assert_factorization("zeeman_anomalous", closed, shift.value)
    return shift


def paschen_back_flux(
    qn: QuantumNumbers, Z: int, B: float, consts: PhysicalConstants
) -> FluxValue:
    """Strong-field flux ``(2 m_s + m_l) n^3 pi a0^2 B / Z^2``."""

    _decomposed(qn, "m_l", "m_s")
    unit = math.pi * qn.n**3 * consts.a0**2 * B / Z**2
    spin = FluxValue.spin_rule(2.0 * float(qn.m_s) * unit, "uniform")  # type: ignore[arg-type]
    orbital = FluxValue.azimuthal(float(qn.m_l) * unit, "uniform")  # type: ignore[arg-type]
    return spin + orbital


def paschen_back_flux_angles(
    qn: QuantumNumbers,
    Z: int,
    B: float,
    alpha_s: float,
    alpha_l: float,
    consts: PhysicalConstants,
) -> float:
    """Pre-quantized form ``(2 n_phi^s cos a_s + n_phi^l cos a_l) n^3 pi a0^2 B / Z^2`` (Wb)."""

    l = _decomposed(qn)  # noqa: E741
    unit = math.pi * qn.n**3 * consts.a0**2 * B / Z**2
    return (2.0 * float(SPIN) * clean_cos(alpha_s) + l * clean_cos(alpha_l)) * unit


def paschen_back(
    qn: QuantumNumbers,
    B: float,
    consts: PhysicalConstants,
    *,
    Z: int = 1,
    check_regime: bool = True,
) -> EnergyShift:
    """Strong-field shift ``mu_B (2 m_s + m_l) B`` relative to the undisturbed orbit.

    Raises:
        RegimeError: ``check_regime`` is set and ``B`` is not in the strong regime.
    """

    if check_regime:
        require_regime(qn, Z, B, consts, "strong")
    flux = paschen_back_flux(qn, Z, B, consts)
    shift = energy_shift_linear(qn, Z, flux, consts, label="paschen_back")
    closed = consts.mu_B * float(2 * qn.m_s + qn.m_l) * B  # type: ignore[operator]
    assert_factorization("paschen_back", closed, shift.value)
    return shift


class HyperfineResult(BaseModel):
    """Hyperfine constant and the shift of one ``F`` level."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    A: float
    F: HalfInt
    bracket: HalfInt
    branch: Branch
    flux: FluxValue
    shift: EnergyShift


def _hyperfine_inputs(
    qn: QuantumNumbers, species: NuclearSpecies, branch: Branch | None
) -> tuple[int, Fraction, Fraction, Branch]:
    l = _decomposed(qn, "j")  # noqa: E741
    j = qn.j
    assert j is not None
    spin = species.I
    if spin == 0:
        raise HyperfineError(f"{species.name}: no hyperfine structure (I=0)")
    if qn.I is not None and qn.I != spin:
        raise HyperfineError(
            f"state nuclear spin I={qn.I} disagrees with {species.name} (I={spin})"
        )
    derived = branch_for(l, j)
    if branch is not None and branch != derived:
        raise HyperfineError(
            f"branch {branch!r} contradicts j - l = {j - l} (expected {derived!r})"
        )
    return l, j, spin, derived


def hyperfine_A(
    qn: QuantumNumbers,
    species: NuclearSpecies,
    consts: PhysicalConstants,
    *,
    branch: Branch | None = None,
) -> float:
    """``A = 2 alpha^2 Z^3 R_inf h c mu_e mu_nuc / (mu_B^2 n^3 j(j+1) (2l +- 1) I)`` in joules."""

    l, j, spin, chosen = _hyperfine_inputs(qn, species, branch)  # noqa: E741
    two_l_pm = 2 * l + 1 if chosen == "+" else 2 * l - 1
    return (
        2.0
        * consts.alpha**2
        * species.Z**3
        * consts.rydberg_energy
        * consts.mu_e
        * species.mu_nuc
        / (consts.mu_B**2 * qn.n**3 * float(j * (j + 1)) * two_l_pm * float(spin))
    )


def hyperfine_flux_simple(
    qn: QuantumNumbers,
    species: NuclearSpecies,
    cos_theta: float,
    consts: PhysicalConstants,
) -> FluxValue:
    """Nuclear-dipole flux before the angular-momentum projection.

    ``(mu0/2) (Z/a0) mu_nuc cos(theta) / (n_phi^j)^2`` with ``theta`` the angle between the
    nuclear moment and the orbit normal; the model fixes no value for it.
    """

    _decomposed(qn, "j")
    if not -1.0 <= cos_theta <= 1.0:
        raise HyperfineError(f"cos_theta must lie in [-1, 1], got {cos_theta!r}")
    n_phi_j = float(qn.j)  # type: ignore[arg-type]
    value = consts.mu0 / 2.0 * species.Z / consts.a0 * species.mu_nuc * cos_theta / n_phi_j**2
    return FluxValue.azimuthal(value, "dipole_focus")


def hyperfine_full(
    qn: QuantumNumbers,
    species: NuclearSpecies,
    consts: PhysicalConstants,
    *,
    F: Fraction | str | float | None = None,
    branch: Branch | None = None,
) -> HyperfineResult:
    """Hyperfine constant and level shift ``(A/2) [F(F+1) - I(I+1) - j(j+1)]``.

    The flux chain: the angular momentum projected onto ``A_j`` is ``n_phi^j hbar``, which gives
    ``1/j`` per ``hbar``; with ``I . j = (hbar^2/2) [...]`` the flux is
    ``(mu0/2)(Z/a0) (1/j) (g_s/2) g_I mu_K [...] / (2 j(j+1))``.

    Args:
        qn: Decomposed state with ``l`` and ``j``; ``F`` may be set on it.
        species: Nuclear species (``I``, ``g_I``).
        consts: Physical constants.
        F: Total angular momentum; defaults to ``qn.F``.
        branch: ``+`` / ``-`` of ``(2l +- 1)``; derived from ``j - l`` when omitted.

    Returns:
        HyperfineResult: ``A``, the shift, the flux intermediate and the branch used.

    Raises:
        HyperfineError: ``I = 0``, invalid ``F`` or a branch contradicting ``j - l``.
    """

    l, j, spin, chosen = _hyperfine_inputs(qn, species, branch)  # noqa: E741
    level = F if F is not None else qn.F
    if level is None:
        raise HyperfineError("F is required")
    level = Fraction(level)
    if level not in f_values(spin, j):
        raise HyperfineError(f"F={level} not in |I-j|..I+j for I={spin}, j={j}")

    bracket = level * (level + 1) - spin * (spin + 1) - j * (j + 1)
    A = hyperfine_A(qn, species, consts, branch=chosen)

    projection = 1 / j
    flux_total = (
        consts.mu0
        / 2.0
        * species.Z
        / consts.a0
        * float(projection)
        * consts.g_s
        / 2.0
        * species.g_I
        * consts.mu_K
        * float(bracket)
        / (2.0 * float(j * (j + 1)))
    )
    flux = FluxValue.azimuthal(flux_total, "dipole_focus")
    shift = energy_shift_linear(qn, species.Z, flux, consts, label=f"hyperfine F={level}")
    closed = A / 2.0 * float(bracket)
    assert_factorization(f"hyperfine_full(l={l}, j={j}, F={level})", closed, shift.value)
    return HyperfineResult(A=A, F=level, bracket=bracket, branch=chosen, flux=flux, shift=shift)


def hyperfine_levels(
    qn: QuantumNumbers, species: NuclearSpecies, consts: PhysicalConstants
) -> list[HyperfineResult]:
    """All ``F`` levels of the term, lowest ``F`` first."""

    _, j, spin, _ = _hyperfine_inputs(qn, species, None)
    return [hyperfine_full(qn, species, consts, F=level) for level in f_values(spin, j)]
