"""Command implementations.

Each command returns a :class:`~sommerflux.models.report.Report`; the CLI only parses options,
renders and maps the exit code.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from fractions import Fraction
from typing import Literal

from sommerflux.constants import CODATA_2018, PhysicalConstants, convert_energy
from sommerflux.errors import QuantumNumberError, SommerfluxError
from sommerflux.logging import get_logger, run_context
from sommerflux.models.quantum import (
    QuantumNumbers,
    admissible_n_phi,
    f_values,
    magnetic_values,
)
from sommerflux.models.report import Comparison, Report, ReportRow
from sommerflux.models.species import NuclearSpecies
from sommerflux.physics.coupling import (
    hyperfine_levels,
    lande_g,
    paschen_back,
    zeeman_anomalous,
)
from sommerflux.physics.effects_simple import (
    GROUND_STATE_COS_BETA,
    hyperfine_interval_simplified,
    hyperfine_simplified,
    spin_orbit_simplified,
)
from sommerflux.physics.energy import energy_exact
from sommerflux.physics.orbits import final_flux, geometry, vector_area_magnitude
from sommerflux.physics.reference import (
    HyperfineError,
    standard_hyperfine_A,
    standard_lande,
    standard_spin_orbit,
)
from sommerflux.registry import DataRegistry
from sommerflux.utils.states import ORBITAL_LETTERS, parse_state, state_from_spec
from sommerflux.verification import VerificationRunner
from sommerflux.verification.suites import SuiteName

logger = get_logger(__name__)

Regime = Literal["weak", "strong"]
HyperfineModel = Literal["simple", "full", "standard"]

# experimental-key prefixes that differ from the species name without its dash
_HFS_KEY_PREFIX = {"H-1": "H", "H-2": "D"}


class CommandError(SommerfluxError):
    pass


def _check_Z(Z: int) -> None:
    if Z < 1:
        raise CommandError(f"Z must be >= 1, got {Z}")


def _check_finite(name: str, value: float) -> None:
    if not math.isfinite(value):
        raise CommandError(f"{name} must be a finite number, got {value!r}")


def cmd_levels(Z: int, n_max: int, consts: PhysicalConstants) -> Report:
    """Gross-structure levels ``W(n)`` for ``n = 1..n_max``."""

    _check_Z(Z)
    if n_max < 1:
        raise CommandError(f"n_max must be >= 1, got {n_max}")
    with run_context(command="levels"):
        rows = []
        for n in range(1, n_max + 1):
            energy = energy_exact(QuantumNumbers.circular(n), Z, 0.0, consts)
            value = convert_energy(energy, "eV", consts)
            rows.append(ReportRow(label=f"n={n}", quantity="W", value=value, unit="eV"))
    return Report(command="levels", inputs={"Z": Z, "n_max": n_max}, rows=rows)


def cmd_orbits(
    Z: int, n: int, consts: PhysicalConstants, convention: Literal["integer", "half"] = "integer"
) -> Report:
    """Orbit geometry for every admissible ``n_phi`` of shell ``n``."""

    _check_Z(Z)
    with run_context(command="orbits"):
        rows: list[ReportRow] = []
        for n_phi in admissible_n_phi(n, convention):
            qn = QuantumNumbers.sommerfeld(n, n_phi)
            geom = geometry(qn, Z, consts)
            label = f"n={n} n_phi={n_phi}"
            rows.extend(
                [
                    ReportRow(label=label, quantity="a", value=geom.a, unit="m"),
                    ReportRow(label=label, quantity="b", value=geom.b, unit="m"),
                    ReportRow(label=label, quantity="p", value=geom.p, unit="m"),
                    ReportRow(label=label, quantity="eps", value=geom.eps, unit="1"),
                    ReportRow(label=label, quantity="area", value=geom.area, unit="m^2"),
                    ReportRow(
                        label=label,
                        quantity="vector_area",
                        value=vector_area_magnitude(qn, Z, consts),
                        unit="m^2",
                    ),
                ]
            )
        rows.append(
            ReportRow(
                label=f"n={n}",
                quantity="final_flux",
                value=final_flux(QuantumNumbers.circular(n), consts),
                unit="Wb",
            )
        )
    return Report(
        command="orbits", inputs={"Z": Z, "n": n, "convention": convention}, rows=rows
    )


def cmd_zeeman(
    state: str,
    B: float,
    regime: Regime | None,
    consts: PhysicalConstants,
    *,
    Z: int = 1,
    strict_regime: bool = True,
) -> Report:
    """Zeeman (weak) or Paschen-Back (strong) sublevels of ``state``.

    Raises:
        CommandError: ``regime`` missing.
        RegimeError: ``strict_regime`` is set and ``B`` lies outside ``regime``.
        StateSpecError: Unparsable state spec.
    """

    if regime is None:
        raise CommandError("--regime is required (weak or strong)")
    _check_Z(Z)
    _check_finite("B", B)
    spec = parse_state(state)
    inputs = {"state": state, "B": B, "regime": regime, "Z": Z, "strict_regime": strict_regime}
    rows: list[ReportRow] = []
    comparisons: list[Comparison] = []

    with run_context(command="zeeman", stage=regime):
        if regime == "weak":
            for m_j in magnetic_values(spec.j):
                qn = state_from_spec(state, m_j=m_j)
                shift = zeeman_anomalous(qn, Z, B, consts, check_regime=strict_regime)
                rows.append(
                    ReportRow(
                        label=f"m_j={m_j}",
                        quantity="dW",
                        value=shift.to("eV", consts),
                        unit="eV",
                    )
                )
            comparisons.append(
                Comparison(
                    label=f"g_j({state})",
                    model=lande_g(spec.l, Fraction(1, 2), spec.j),
                    reference=standard_lande(spec.l, Fraction(1, 2), spec.j),
                    unit="1",
                )
            )
        else:
            for m_l in range(-spec.l, spec.l + 1):
                for m_s in (Fraction(-1, 2), Fraction(1, 2)):
                    qn = state_from_spec(state, m_l=m_l, m_s=m_s)
                    shift = paschen_back(qn, B, consts, Z=Z, check_regime=strict_regime)
                    rows.append(
                        ReportRow(
                            label=f"m_l={m_l} m_s={m_s}",
                            quantity="dW",
                            value=shift.to("eV", consts),
                            unit="eV",
                        )
                    )
    return Report(command="zeeman", inputs=inputs, rows=rows, comparisons=comparisons)


def experimental_hfs_key(species: NuclearSpecies, n: int, l: int) -> str:  # noqa: E741
    """Default experimental key, e.g. ``H_1s_hfs_interval_MHz``."""

    prefix = _HFS_KEY_PREFIX.get(species.name, species.name.replace("-", ""))
    return f"{prefix}_{n}{ORBITAL_LETTERS[l]}_hfs_interval_MHz"


def _experimental_comparison(
    registry: DataRegistry, key: str, label: str, model_mhz: float
) -> list[Comparison]:
    value = registry.find_experimental(key)
    if value is None:
        logger.info("No experimental value %s; comparison skipped", key)
        return []
    reference = value.value
    if value.unit != "MHz":
        raise CommandError(f"experimental value {key!r} must be in MHz, got {value.unit}")
    return [Comparison(label=label, model=model_mhz, reference=reference, unit="MHz")]


def cmd_hyperfine(
    state: str,
    species_name: str,
    model: HyperfineModel,
    consts: PhysicalConstants,
    registry: DataRegistry,
    *,
    cos_beta: float = GROUND_STATE_COS_BETA,
    experimental_key: str | None = None,
) -> Report:
    """Hyperfine constant, F-level diagram and comparison with experiment."""

    _check_finite("cos_beta", cos_beta)
    species = registry.species(species_name)
    spec = parse_state(state)
    key = experimental_key or experimental_hfs_key(species, spec.n, spec.l)
    inputs = {
        "state": state,
        "species": species.name,
        "model": model,
        "Z": species.Z,
        "I": str(species.I),
        "g_I": species.g_I,
        "experimental_key": key,
    }
    if model == "simple":
        inputs["cos_beta"] = cos_beta
    rows: list[ReportRow] = []
    comparisons: list[Comparison] = []

    if not species.has_hyperfine_structure:
        rows.append(
            ReportRow(
                label=species.name,
                quantity="A",
                unit="MHz",
                error=f"no hyperfine structure (I={species.I})",
            )
        )
        return Report(command="hyperfine", inputs=inputs, rows=rows)

    qn = state_from_spec(state, I=species.I)
    interval: float | None = None
    with run_context(command="hyperfine", stage=model):
        if model == "simple":
            shift = hyperfine_simplified(qn, species, cos_beta, consts)
            interval = convert_energy(
                hyperfine_interval_simplified(qn, species, cos_beta, consts), "MHz", consts
            )
            rows.append(
                ReportRow(label=state, quantity="dW", value=shift.to("MHz", consts), unit="MHz")
            )
        elif model == "full":
            try:
                levels = hyperfine_levels(qn, species, consts)
            except HyperfineError as exc:
                rows.append(ReportRow(label=state, quantity="A", unit="MHz", error=str(exc)))
                return Report(command="hyperfine", inputs=inputs, rows=rows)
            A = convert_energy(levels[0].A, "MHz", consts)
            inputs["branch"] = levels[0].branch
            rows.append(ReportRow(label=state, quantity="A", value=A, unit="MHz"))
            shifts = [level.shift.to("MHz", consts) for level in levels]
            rows.extend(
                ReportRow(label=f"F={level.F}", quantity="dW", value=value, unit="MHz")
                for level, value in zip(levels, shifts, strict=True)
            )
            standard = convert_energy(standard_hyperfine_A(qn, species, consts), "MHz", consts)
            comparisons.append(
                Comparison(label=f"A({state})", model=A, reference=standard, unit="MHz")
            )
            interval = _top_interval(shifts)
        else:
            A = convert_energy(standard_hyperfine_A(qn, species, consts), "MHz", consts)
            rows.append(ReportRow(label=state, quantity="A", value=A, unit="MHz"))
            spin, j = species.I, qn.j
            assert j is not None
            shifts = []
            for F in f_values(spin, j):
                value = A / 2.0 * float(F * (F + 1) - spin * (spin + 1) - j * (j + 1))
                shifts.append(value)
                rows.append(ReportRow(label=f"F={F}", quantity="dW", value=value, unit="MHz"))
            interval = _top_interval(shifts)

        if interval is not None:
            rows.append(ReportRow(label=state, quantity="interval", value=interval, unit="MHz"))
            comparisons.extend(
                _experimental_comparison(registry, key, f"interval({state})", abs(interval))
            )
    return Report(command="hyperfine", inputs=inputs, rows=rows, comparisons=comparisons)


def _top_interval(shifts: Sequence[float]) -> float | None:
    """Splitting between the two highest ``F`` levels."""

    if len(shifts) < 2:
        return None
    return shifts[-1] - shifts[-2]


def cmd_spin_orbit(
    state: str,
    Z: int,
    consts: PhysicalConstants,
    *,
    cos_beta: float = 1.0,
    n_phi: Fraction | str | None = None,
) -> Report:
    """Flux-model spin-orbit shift against the standard Z^4 formula.

    The model shift uses an undecomposed orbit of the same ``n`` with azimuthal number ``n_phi``
    (the state's ``l + 1/2`` by default).
    """

    _check_Z(Z)
    _check_finite("cos_beta", cos_beta)
    qn = state_from_spec(state)
    try:
        orbit = QuantumNumbers.sommerfeld(qn.n, n_phi if n_phi is not None else qn.n_phi)
    except QuantumNumberError as exc:
        raise CommandError(f"--n-phi {n_phi!r}: {exc}") from exc
    inputs = {"state": state, "Z": Z, "cos_beta": cos_beta, "n_phi": str(orbit.n_phi)}
    with run_context(command="spin-orbit"):
        model = spin_orbit_simplified(orbit, Z, cos_beta, consts).to("MHz", consts)
        standard = convert_energy(standard_spin_orbit(qn, Z, consts), "MHz", consts)
        rows = [
            ReportRow(label=state, quantity="dW_model", value=model, unit="MHz"),
            ReportRow(label=state, quantity="dW_standard", value=standard, unit="MHz"),
        ]
        comparisons = [
            Comparison(
                label=f"spin-orbit({state})",
                model=model,
                reference=standard,
                unit="MHz",
                ratio_kind="reference/model",
            )
        ]
    return Report(command="spin-orbit", inputs=inputs, rows=rows, comparisons=comparisons)


def cmd_verify(
    runner: VerificationRunner, suites: Sequence[SuiteName], tol: float | None = None
) -> Report:
    """Run the named oracle suites."""

    diagnostics = []
    with run_context(command="verify"):
        for suite in suites:
            diagnostics.extend(runner.run(suite, tol))
    inputs = {"suites": ",".join(suites), "tol": tol}
    return Report(command="verify", inputs=inputs, diagnostics=diagnostics)


def cmd_constants(consts: PhysicalConstants) -> Report:
    """Active constant set with the provenance of each value."""

    provenance = consts.provenance()
    rows = []
    for name, source in provenance.items():
        spec = CODATA_2018.get(name)
        unit = spec.unit if spec is not None else "1"
        rows.append(
            ReportRow(label=name, quantity=source, value=float(getattr(consts, name)), unit=unit)
        )
    return Report(command="constants", inputs={"g_s": consts.g_s}, rows=rows)
