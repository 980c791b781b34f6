"""Tests for command implementations."""

from __future__ import annotations

import pytest

from sommerflux.commands import (
    CommandError,
    cmd_constants,
    cmd_hyperfine,
    cmd_levels,
    cmd_orbits,
    cmd_spin_orbit,
    cmd_verify,
    cmd_zeeman,
    experimental_hfs_key,
)
from sommerflux.config import Settings
from sommerflux.constants import PhysicalConstants
from sommerflux.physics.coupling import RegimeError
from sommerflux.registry import DataRegistry
from sommerflux.utils.states import StateSpecError
from sommerflux.verification import VerificationRunner


def test_levels(consts: PhysicalConstants) -> None:
    """Test the hydrogen level table."""
    report = cmd_levels(1, 3, consts)

    values = [row.value for row in report.rows]
    assert values == pytest.approx([-13.6057, -3.4014, -1.5117], abs=1e-4)
    assert {row.unit for row in report.rows} == {"eV"}
    assert report.inputs == {"Z": 1, "n_max": 3}
    assert report.exit_code == 0


def test_levels_scale_with_z(consts: PhysicalConstants) -> None:
    """Test Z = 2 quadruples the ground level."""
    hydrogen = cmd_levels(1, 1, consts).rows[0].value
    helium_ion = cmd_levels(2, 1, consts).rows[0].value

    assert helium_ion == pytest.approx(4 * hydrogen, rel=1e-12)


@pytest.mark.parametrize(("Z", "n_max"), [(1, 0), (0, 3)])
def test_levels_bad_range(consts: PhysicalConstants, Z: int, n_max: int) -> None:
    """Test invalid inputs."""
    with pytest.raises(CommandError):
        cmd_levels(Z, n_max, consts)


def test_orbits(consts: PhysicalConstants) -> None:
    """Test one geometry block per admissible n_phi."""
    report = cmd_orbits(1, 3, consts)

    labels = {row.label for row in report.rows}
    assert {"n=3 n_phi=1", "n=3 n_phi=2", "n=3 n_phi=3"} <= labels
    eccentricities = [row.value for row in report.rows if row.quantity == "eps"]
    assert eccentricities[-1] == 0.0
    assert report.rows[-1].quantity == "final_flux"
    assert report.rows[-1].value == pytest.approx(3 * consts.flux_quantum, rel=1e-15)


def test_orbits_half_convention(consts: PhysicalConstants) -> None:
    """Test the half-integer convention lists n_phi = 1/2 .. n - 1/2."""
    report = cmd_orbits(1, 2, consts, "half")

    assert {row.label for row in report.rows if row.quantity == "a"} == {
        "n=2 n_phi=1/2",
        "n=2 n_phi=3/2",
    }


def test_zeeman_weak_field(consts: PhysicalConstants) -> None:
    """Test four equally spaced 2p3/2 sublevels with g = 4/3."""
    report = cmd_zeeman("2p3/2", 0.01, "weak", consts)

    values = [row.value for row in report.rows]
    step = consts.mu_B * 4 / 3 * 0.01 / consts.e
    assert [row.label for row in report.rows] == ["m_j=-3/2", "m_j=-1/2", "m_j=1/2", "m_j=3/2"]
    assert values == pytest.approx([-1.5 * step, -0.5 * step, 0.5 * step, 1.5 * step], rel=1e-12)
    assert report.comparisons[0].ratio == pytest.approx(1.0, rel=1e-12)


def test_zeeman_ground_state(consts: PhysicalConstants) -> None:
    """Test 1s1/2 splits by +- mu_B B."""
    report = cmd_zeeman("1s1/2", 1.0, "weak", consts)

    mu_b_ev = consts.mu_B / consts.e
    assert [row.value for row in report.rows] == pytest.approx([-mu_b_ev, mu_b_ev], rel=1e-12)


def test_zeeman_zero_field(consts: PhysicalConstants) -> None:
    """Test B = 0 leaves every sublevel unshifted."""
    report = cmd_zeeman("2p3/2", 0.0, "weak", consts)

    assert all(row.value == 0.0 for row in report.rows)


def test_zeeman_strong_field(consts: PhysicalConstants) -> None:
    """Test one row per (m_l, m_s) in the Paschen-Back limit."""
    report = cmd_zeeman("2p3/2", 100.0, "strong", consts)

    assert len(report.rows) == 6
    assert report.rows[0].label == "m_l=-1 m_s=-1/2"
    assert max(row.value for row in report.rows) == pytest.approx(
        2 * 100.0 * consts.mu_B / consts.e, rel=1e-12
    )


def test_zeeman_intermediate_field_is_refused(consts: PhysicalConstants) -> None:
    """Test a 1 T field on 2p3/2 fits neither limit unless checking is off."""
    with pytest.raises(RegimeError, match="intermediate"):
        cmd_zeeman("2p3/2", 1.0, "weak", consts)
    with pytest.raises(RegimeError, match="intermediate"):
        cmd_zeeman("2p3/2", 1.0, "strong", consts)

    report = cmd_zeeman("2p3/2", 1.0, "weak", consts, strict_regime=False)

    assert len(report.rows) == 4
    assert report.inputs["strict_regime"] is False


def test_zeeman_errors(consts: PhysicalConstants) -> None:
    """Test a missing regime and an unparsable state."""
    with pytest.raises(CommandError, match="regime"):
        cmd_zeeman("2p3/2", 1.0, None, consts)
    with pytest.raises(StateSpecError):
        cmd_zeeman("2q3/2", 1.0, "weak", consts)


def test_experimental_key(registry: DataRegistry) -> None:
    """Test default keys of the packaged experimental table."""
    assert experimental_hfs_key(registry.species("H-1"), 1, 0) == "H_1s_hfs_interval_MHz"
    assert experimental_hfs_key(registry.species("H-2"), 1, 0) == "D_1s_hfs_interval_MHz"
    assert experimental_hfs_key(registry.species("He-3"), 1, 0) == "He3_1s_hfs_interval_MHz"


def test_hyperfine_full_hydrogen(consts: PhysicalConstants, registry: DataRegistry) -> None:
    """Test the ground-state interval and its comparisons."""
    report = cmd_hyperfine("1s1/2", "H-1", "full", consts, registry)

    by_quantity = {(row.label, row.quantity): row.value for row in report.rows}
    assert by_quantity[("1s1/2", "interval")] == pytest.approx(1421.16, rel=1e-4)
    assert by_quantity[("F=1", "dW")] == pytest.approx(1421.16 / 4, rel=1e-4)
    standard, experiment = report.comparisons
    assert standard.ratio == pytest.approx(1.0, rel=1e-12)
    assert experiment.reference == pytest.approx(1420.405751, rel=1e-9)
    assert experiment.ratio == pytest.approx(1.00053, abs=1e-4)
    assert report.inputs["branch"] == "+"
    assert report.exit_code == 0


def test_hyperfine_models_agree_for_ground_state(
    consts: PhysicalConstants, registry: DataRegistry
) -> None:
    """Test simple and full models give the same hydrogen interval."""
    intervals = {}
    for model in ("simple", "full", "standard"):
        report = cmd_hyperfine("1s1/2", "H-1", model, consts, registry)
        intervals[model] = next(row.value for row in report.rows if row.quantity == "interval")

    assert intervals["simple"] == pytest.approx(intervals["full"], rel=1e-10)
    assert intervals["standard"] == pytest.approx(intervals["full"], rel=1e-10)


def test_hyperfine_p_half_ratio(consts: PhysicalConstants, registry: DataRegistry) -> None:
    """Test the flux model A is three times the standard A for 2p1/2."""
    report = cmd_hyperfine("2p1/2", "H-1", "full", consts, registry)

    assert len(report.comparisons) == 1
    assert report.comparisons[0].ratio == pytest.approx(3.0, rel=1e-12)
    assert report.inputs["branch"] == "-"


def test_hyperfine_negative_moment(consts: PhysicalConstants, registry: DataRegistry) -> None:
    """Test the experiment comparison uses the interval magnitude."""
    report = cmd_hyperfine("1s1/2", "He-3", "full", consts, registry)

    experiment = report.comparisons[-1]
    assert experiment.model is not None and experiment.model > 0.0
    assert experiment.ratio == pytest.approx(1.0, abs=0.01)


def test_hyperfine_without_nuclear_spin(consts: PhysicalConstants, registry: DataRegistry) -> None:
    """Test a spinless nucleus yields an error row and exit code 1."""
    report = cmd_hyperfine("1s1/2", "C-12", "full", consts, registry)

    assert report.rows[0].error is not None
    assert "no hyperfine structure" in report.rows[0].error
    assert report.exit_code == 1


def test_hyperfine_explicit_experimental_key(
    consts: PhysicalConstants, registry: DataRegistry
) -> None:
    """Test an absent experimental key skips the comparison."""
    report = cmd_hyperfine(
        "1s1/2", "H-1", "simple", consts, registry, experimental_key="nothing"
    )

    assert report.comparisons == []
    assert report.inputs["cos_beta"] == pytest.approx(2 / 3)


@pytest.mark.parametrize(
    ("Z", "n_phi", "cos_beta", "expected"),
    [(1, "1", 1.0, 1 / 12), (2, "1", 1.0, 2 / 12), (1, None, 1.0, 9 / 48)],
)
def test_spin_orbit(
    consts: PhysicalConstants, Z: int, n_phi: str | None, cos_beta: float, expected: float
) -> None:
    """Test standard / model = Z n_phi^2 / (12 cos(beta))."""
    report = cmd_spin_orbit("2p3/2", Z, consts, cos_beta=cos_beta, n_phi=n_phi)

    assert report.comparisons[0].ratio_kind == "reference/model"
    assert report.comparisons[0].ratio == pytest.approx(expected, rel=1e-12)


def test_spin_orbit_undefined_ratio(consts: PhysicalConstants) -> None:
    """Test cos(beta) = 0 leaves the ratio undefined."""
    report = cmd_spin_orbit("2p3/2", 1, consts, cos_beta=0.0)

    assert report.rows[0].value == 0.0
    assert report.comparisons[0].ratio is None


def test_verify(consts: PhysicalConstants, settings: Settings) -> None:
    """Test the verify report and its exit codes."""
    runner = VerificationRunner(consts, settings)

    passing = cmd_verify(runner, ["lande"])
    failing = cmd_verify(runner, ["linearization"], tol=1e-300)

    assert passing.exit_code == 0
    assert passing.inputs["suites"] == "lande"
    assert failing.exit_code == 2


def test_constants(consts: PhysicalConstants) -> None:
    """Test every constant is listed with a unit and provenance."""
    report = cmd_constants(consts)

    rows = {row.label: row for row in report.rows}
    assert rows["h"].value == consts.h
    assert rows["h"].unit == "J s"
    assert rows["g_s"].value == 2.0
    assert "CODATA" in rows["alpha"].quantity


def test_invalid_numeric_inputs(consts: PhysicalConstants, registry: DataRegistry) -> None:
    """Test unusable numbers surface as command errors."""
    with pytest.raises(CommandError, match="n-phi"):
        cmd_spin_orbit("2p3/2", 1, consts, n_phi="abc")
    with pytest.raises(CommandError, match="n-phi"):
        cmd_spin_orbit("2p3/2", 1, consts, n_phi="7/2")
    with pytest.raises(CommandError, match="finite"):
        cmd_spin_orbit("2p3/2", 1, consts, cos_beta=float("inf"))
    with pytest.raises(CommandError, match="finite"):
        cmd_zeeman("2p3/2", float("nan"), "weak", consts)
    with pytest.raises(CommandError, match="finite"):
        cmd_hyperfine("1s1/2", "H-1", "simple", consts, registry, cos_beta=float("nan"))
