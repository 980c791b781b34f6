"""Physical constants and energy unit conversions.

CODATA-2018 values are fixed in source (:data:`CODATA_2018`, value + unit + provenance). Only the
base constants ``h, e, m_e, m_p, eps0, c`` are independent inputs; every derived constant is
recomputed from them at load time, so closed-form expressions and chained flux pipelines agree to
rounding. With no overrides the recomputed values are also checked against the tabulated ones.

Overrides come from a plain ``key=value`` file (``#`` comments allowed) or a mapping.
"""

from __future__ import annotations

import math
from collections.abc import Mapping
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Literal

from dotenv import dotenv_values
from pydantic import BaseModel, ConfigDict, PositiveFloat

from sommerflux.errors import SommerfluxError
from sommerflux.logging import get_logger

logger = get_logger(__name__)

EnergyUnit = Literal["J", "eV", "MHz", "1/cm"]
ENERGY_UNITS: tuple[EnergyUnit, ...] = ("J", "eV", "MHz", "1/cm")

CONSISTENCY_RTOL = 1e-9

G_S_MODEL = 2.0
G_S_CODATA = 2.00231930436


class ConstantsError(SommerfluxError):
    pass


@dataclass(frozen=True)
class ConstantSpec:
    """A tabulated constant."""

    value: float
    unit: str
    provenance: str


BASE_CONSTANTS: tuple[str, ...] = ("h", "e", "m_e", "m_p", "eps0", "c")
DERIVED_CONSTANTS: tuple[str, ...] = (
    "hbar",
    "mu0",
    "a0",
    "R_inf",
    "mu_B",
    "mu_K",
    "alpha",
    "flux_quantum",
)

CODATA_2018: dict[str, ConstantSpec] = {
    "h": ConstantSpec(6.62607015e-34, "J s", "CODATA 2018, exact (SI 2019)"),
    "e": ConstantSpec(1.602176634e-19, "C", "CODATA 2018, exact (SI 2019)"),
    "c": ConstantSpec(299792458.0, "m/s", "CODATA 2018, exact"),
    "m_e": ConstantSpec(9.1093837015e-31, "kg", "CODATA 2018, rel. unc. 3.0e-10"),
    "m_p": ConstantSpec(1.67262192369e-27, "kg", "CODATA 2018, rel. unc. 3.1e-10"),
    "eps0": ConstantSpec(8.8541878128e-12, "F/m", "CODATA 2018, rel. unc. 1.5e-10"),
    "hbar": ConstantSpec(1.054571817e-34, "J s", "CODATA 2018, h/2pi"),
    "mu0": ConstantSpec(1.25663706212e-6, "H/m", "CODATA 2018, 1/(eps0 c^2)"),
    "a0": ConstantSpec(5.29177210903e-11, "m", "CODATA 2018, eps0 h^2/(pi m_e e^2)"),
    "R_inf": ConstantSpec(10973731.568160, "1/m", "CODATA 2018, m_e e^4/(8 eps0^2 h^3 c)"),
    "mu_B": ConstantSpec(9.2740100783e-24, "J/T", "CODATA 2018, e hbar/(2 m_e)"),
    "mu_K": ConstantSpec(5.0507837461e-27, "J/T", "CODATA 2018, e hbar/(2 m_p)"),
    "alpha": ConstantSpec(7.2973525693e-3, "1", "CODATA 2018, e^2/(2 eps0 h c)"),
    "flux_quantum": ConstantSpec(4.135667696e-15, "Wb", "h/e (flux quantum of a single charge)"),
}


class PhysicalConstants(BaseModel):
    """Immutable set of SI constants used by every formula."""

    model_config = ConfigDict(frozen=True)

    h: PositiveFloat
    hbar: PositiveFloat
    e: PositiveFloat
    m_e: PositiveFloat
    m_p: PositiveFloat
    eps0: PositiveFloat
    mu0: PositiveFloat
    c: PositiveFloat
    a0: PositiveFloat
    R_inf: PositiveFloat
    mu_B: PositiveFloat
    mu_K: PositiveFloat
    alpha: PositiveFloat
    g_s: PositiveFloat
    flux_quantum: PositiveFloat

    overrides: tuple[str, ...] = ()

    @property
    def mu_e(self) -> float:
        """Electron moment (g_s/2) e hbar/(2 m_e)."""

        return self.g_s / 2.0 * self.mu_B

    @property
    def rydberg_energy(self) -> float:
        """R_inf h c in joules."""

        return self.R_inf * self.h * self.c

    def provenance(self) -> dict[str, str]:
        """Provenance note per constant, marking overridden entries."""

        notes: dict[str, str] = {}
        for key, spec in CODATA_2018.items():
            notes[key] = "override" if key in self.overrides else spec.provenance
        notes["g_s"] = "override" if "g_s" in self.overrides else "model value (exactly 2)"
        if self.g_s == G_S_CODATA:
            notes["g_s"] = "CODATA 2018 electron g-factor magnitude"
        return notes


def derive_constants(base: Mapping[str, float]) -> dict[str, float]:
    """Recompute all derived constants from the base set.

    Args:
        base: Mapping with the keys of :data:`BASE_CONSTANTS`.

    Returns:
        Derived constants keyed like :data:`DERIVED_CONSTANTS`.
    """

    h, e, m_e, m_p, eps0, c = (base[k] for k in BASE_CONSTANTS)
    hbar = h / (2.0 * math.pi)
    return {
        "hbar": hbar,
        "mu0": 1.0 / (eps0 * c**2),
        "a0": eps0 * h**2 / (math.pi * m_e * e**2),
        "R_inf": m_e * e**4 / (8.0 * eps0**2 * h**3 * c),
        "mu_B": e * hbar / (2.0 * m_e),
        "mu_K": e * hbar / (2.0 * m_p),
        "alpha": e**2 / (2.0 * eps0 * h * c),
        "flux_quantum": h / e,
    }


def _positive(key: str, raw: object) -> float:
    try:
        value = float(raw)  # type: ignore[arg-type]
    except (TypeError, ValueError) as exc:
        raise ConstantsError(f"constant {key!r} is not a number: {raw!r}") from exc
    if not math.isfinite(value):
        raise ConstantsError(f"non-finite value for {key!r}: {raw!r}")
    if value <= 0.0:
        raise ConstantsError(f"non-positive value for {key!r}: {raw!r}")
    return value


def parse_g_s(raw: str | float) -> float:
    """Resolve the `g_s` option.

    Args:
        raw: ``"model"`` (exactly 2), ``"codata"`` or a positive number.

    Returns:
        The electron g-factor magnitude.
    """

    if isinstance(raw, str):
        choice = raw.strip().lower()
        if choice == "model":
            return G_S_MODEL
        if choice == "codata":
            return G_S_CODATA
    return _positive("g_s", raw)


def _read_config(config: Mapping[str, object] | Path | str | None) -> dict[str, object]:
    if config is None:
        return {}
    if isinstance(config, Mapping):
        return dict(config)

    path = Path(config)
    if not path.is_file():
        raise ConstantsError(f"constants file not found: {path}")
    values = dotenv_values(path, encoding="utf-8")
    missing = [k for k, v in values.items() if v is None or v == ""]
    if missing:
        raise ConstantsError(f"{path}: missing value for key(s) {', '.join(missing)}")
    logger.debug("Read %d constant override(s) from %s", len(values), path)
    return dict(values)


def load_constants(
    config: Mapping[str, object] | Path | str | None = None,
    *,
    g_s: str | float | None = None,
) -> PhysicalConstants:
    """Load CODATA-2018 constants with optional overrides.

    Args:
        config: Override source: a ``key=value`` file path or a mapping. Keys are field names of
            :class:`PhysicalConstants`.
        g_s: Explicit g-factor option; takes precedence over a ``g_s`` key in ``config``.

    Returns:
        PhysicalConstants: Validated, internally consistent constants.

    Raises:
        ConstantsError: Unknown key, non-positive value, or a derived override that disagrees
            with the value recomputed from the base constants.
    """

    raw = _read_config(config)
    known = set(CODATA_2018) | {"g_s"}
    unknown = sorted(set(raw) - known)
    if unknown:
        raise ConstantsError(f"unknown constant key(s): {', '.join(unknown)}")

    g_s_raw = raw.pop("g_s", None)
    if g_s is not None:
        g_s_raw = g_s
    g_s_value = parse_g_s(g_s_raw if g_s_raw is not None else "model")  # type: ignore[arg-type]

    overrides = {key: _positive(key, value) for key, value in raw.items()}
    base = {key: overrides.get(key, CODATA_2018[key].value) for key in BASE_CONSTANTS}
    derived = derive_constants(base)

    for key in DERIVED_CONSTANTS:
        if key in overrides and not math.isclose(
            overrides[key], derived[key], rel_tol=CONSISTENCY_RTOL
        ):
            raise ConstantsError(
                f"inconsistent override of {key!r}: {overrides[key]!r} disagrees with "
                f"{derived[key]!r} recomputed from the base constants"
            )

    if not any(key in overrides for key in BASE_CONSTANTS):
        for key in DERIVED_CONSTANTS:
            tabulated = CODATA_2018[key].value
            if not math.isclose(derived[key], tabulated, rel_tol=CONSISTENCY_RTOL):
                raise ConstantsError(
                    f"tabulated {key!r}={tabulated!r} inconsistent with recomputed "
                    f"{derived[key]!r}"
                )

    labels = list(overrides)
    if g_s_raw is not None and g_s_value != G_S_MODEL:
        labels.append("g_s")

    consts = PhysicalConstants(**base, **derived, g_s=g_s_value, overrides=tuple(sorted(labels)))
    logger.debug("Loaded constants (overrides=%s, g_s=%r)", consts.overrides, consts.g_s)
    return consts


@lru_cache(maxsize=1)
def default_constants() -> PhysicalConstants:
    """CODATA-2018 constants without overrides (cached)."""

    return load_constants()


def _joules_per_unit(unit: EnergyUnit, consts: PhysicalConstants) -> float:
    if unit == "J":
        return 1.0
    if unit == "eV":
        return consts.e
    if unit == "MHz":
        return consts.h * 1e6
    if unit == "1/cm":
        return consts.h * consts.c * 100.0
    raise ConstantsError(f"unsupported energy unit {unit!r}; expected one of {ENERGY_UNITS}")


def convert_energy(
    value: float, target: EnergyUnit, consts: PhysicalConstants | None = None
) -> float:
    """Convert an energy in joules to ``target`` (E = h nu for MHz).

    Args:
        value: Energy in J.
        target: One of ``J``, ``eV``, ``MHz``, ``1/cm``.
        consts: Constants to convert with; CODATA defaults when omitted.

    Returns:
        The energy expressed in ``target``.
    """

    if not math.isfinite(value):
        raise ConstantsError(f"cannot convert non-finite energy {value!r}")
    return value / _joules_per_unit(target, consts or default_constants())


def to_joules(value: float, unit: EnergyUnit, consts: PhysicalConstants | None = None) -> float:
    """Inverse of :func:`convert_energy`."""

    if not math.isfinite(value):
        raise ConstantsError(f"cannot convert non-finite energy {value!r}")
    return value * _joules_per_unit(unit, consts or default_constants())
