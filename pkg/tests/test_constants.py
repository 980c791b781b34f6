"""Tests for physical constants."""

from __future__ import annotations

import math

import pytest

from sommerflux.constants import (
    G_S_CODATA,
    G_S_MODEL,
    ConstantsError,
    PhysicalConstants,
    convert_energy,
    load_constants,
    parse_g_s,
    to_joules,
)


def test_derived_identities_hold(consts: PhysicalConstants) -> None:
    """Test the identities the energy and flux formulas rely on."""
    assert consts.R_inf * consts.c * consts.e == pytest.approx(
        consts.mu_B / (2.0 * math.pi * consts.a0**2), rel=1e-12
    )
    assert consts.e * consts.mu0 / consts.a0 == pytest.approx(
        consts.alpha**2 * consts.h / consts.mu_B, rel=1e-12
    )
    assert consts.flux_quantum == pytest.approx(consts.h / consts.e, rel=1e-15)


def test_defaults_use_model_g_factor(consts: PhysicalConstants) -> None:
    """Test the default g_s is exactly 2 and nothing is overridden."""
    assert consts.g_s == G_S_MODEL == 2.0
    assert consts.mu_e == consts.mu_B
    assert consts.overrides == ()


def test_base_override_propagates_to_derived() -> None:
    """Test overriding a base constant recomputes the derived ones."""
    doubled = load_constants({"m_e": 2 * 9.1093837015e-31})
    reference = load_constants()

    assert doubled.overrides == ("m_e",)
    assert doubled.a0 == pytest.approx(reference.a0 / 2.0, rel=1e-12)
    assert doubled.mu_B == pytest.approx(reference.mu_B / 2.0, rel=1e-12)


def test_consistent_derived_override_is_accepted() -> None:
    """Test a derived override matching the recomputed value is accepted."""
    consts = load_constants({"a0": 5.29177210903e-11})
    assert "a0" in consts.overrides


@pytest.mark.parametrize(
    "config",
    [
        {"a0": 5.3e-11},
        {"planck": 1.0},
        {"h": -1.0},
        {"h": "abc"},
        {"c": float("inf")},
    ],
)
def test_invalid_overrides_are_rejected(config: dict[str, object]) -> None:
    """Test inconsistent, unknown, non-positive and non-numeric overrides."""
    with pytest.raises(ConstantsError):
        load_constants(config)


def test_constants_file(tmp_path) -> None:
    """Test loading overrides from a key=value file."""
    path = tmp_path / "constants.env"
    path.write_text("# high-precision g-factor\ng_s=codata\n", encoding="utf-8")

    consts = load_constants(path)

    assert consts.g_s == G_S_CODATA
    assert consts.overrides == ("g_s",)
    assert "CODATA" in consts.provenance()["g_s"]


def test_missing_constants_file(tmp_path) -> None:
    """Test a missing file is a ConstantsError."""
    with pytest.raises(ConstantsError, match="not found"):
        load_constants(tmp_path / "absent.env")


def test_explicit_g_s_wins_over_file(tmp_path) -> None:
    """Test the g_s option takes precedence over the file key."""
    path = tmp_path / "constants.env"
    path.write_text("g_s=2.5\n", encoding="utf-8")

    assert load_constants(path, g_s="model").g_s == 2.0


@pytest.mark.parametrize(
    ("raw", "expected"),
    [("model", 2.0), ("CODATA", G_S_CODATA), ("2.5", 2.5), (2.1, 2.1)],
)
def test_parse_g_s(raw: str | float, expected: float) -> None:
    """Test the accepted g_s spellings."""
    assert parse_g_s(raw) == expected


@pytest.mark.parametrize("raw", ["-1", "0", "two"])
def test_parse_g_s_rejects(raw: str) -> None:
    """Test invalid g_s values."""
    with pytest.raises(ConstantsError):
        parse_g_s(raw)


def test_energy_conversion(consts: PhysicalConstants) -> None:
    """Test unit conversion of the Rydberg energy."""
    ry = consts.rydberg_energy

    assert convert_energy(ry, "eV", consts) == pytest.approx(13.605693, rel=1e-7)
    assert convert_energy(ry, "1/cm", consts) == pytest.approx(109737.31568, rel=1e-9)
    assert to_joules(convert_energy(ry, "MHz", consts), "MHz", consts) == pytest.approx(
        ry, rel=1e-15
    )


def test_energy_conversion_rejects_unknown_unit(consts: PhysicalConstants) -> None:
    """Test an unsupported unit."""
    with pytest.raises(ConstantsError):
        convert_energy(1.0, "kcal", consts)  # type: ignore[arg-type]


def test_table_agrees_with_scipy_constants(consts: PhysicalConstants) -> None:
    """Test the fixed table against SciPy's CODATA values (which may be a newer adjustment)."""
    from scipy import constants as sc

    expected = {
        "h": sc.h,
        "e": sc.e,
        "c": sc.c,
        "m_e": sc.m_e,
        "m_p": sc.m_p,
        "eps0": sc.epsilon_0,
        "mu0": sc.mu_0,
        "alpha": sc.alpha,
        "R_inf": sc.Rydberg,
        "a0": sc.physical_constants["Bohr radius"][0],
        "mu_B": sc.physical_constants["Bohr magneton"][0],
        "mu_K": sc.physical_constants["nuclear magneton"][0],
    }
    for key, value in expected.items():
        assert getattr(consts, key) == pytest.approx(value, rel=1e-8), key
