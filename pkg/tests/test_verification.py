"""Tests for the oracle suites."""

from __future__ import annotations

import pytest
from pytest_mock import MockerFixture

from sommerflux.commands import cmd_verify
from sommerflux.config import Settings
from sommerflux.constants import PhysicalConstants
from sommerflux.errors import FactorizationError, QuadratureError
from sommerflux.verification import SUITES, VerificationRunner


@pytest.fixture
def runner(consts: PhysicalConstants, settings: Settings) -> VerificationRunner:
    return VerificationRunner(consts, settings)


def test_suite_names() -> None:
    """Test the available suites."""
    assert SUITES == ("action", "dipole-flux", "linearization", "lande")


@pytest.mark.parametrize("suite", SUITES)
def test_suites_pass_at_default_tolerance(runner: VerificationRunner, suite: str) -> None:
    """Test every suite passes with its default tolerance."""
    diagnostics = runner.run(suite)  # type: ignore[arg-type]

    assert diagnostics
    failed = [d for d in diagnostics if not d.passed]
    assert failed == []


def test_action_suite_covers_both_conventions(runner: VerificationRunner) -> None:
    """Test integer and half-integer n_phi cases are checked for Z = 1, 2."""
    cases = [d.case for d in runner.run("action")]

    assert "Z=1 n=2 n_phi=1" in cases
    assert "Z=2 n=3 n_phi=5/2" in cases
    assert len(cases) == 2 * sum(2 * n for n in range(1, 7))


def test_impossible_tolerance_fails(runner: VerificationRunner) -> None:
    """Test an unreachable tolerance yields failed diagnostics."""
    diagnostics = runner.run("linearization", tol=1e-300)

    assert any(not d.passed for d in diagnostics)


def test_dipole_samples_are_reproducible(consts: PhysicalConstants, settings: Settings) -> None:
    """Test the random geometries depend only on the seed."""
    first = [d.case for d in VerificationRunner(consts, settings).run("dipole-flux")]
    second = [d.case for d in VerificationRunner(consts, settings).run("dipole-flux")]

    assert first == second
    # 5 fixed eccentricities with quadrature and cubature, plus the random samples
    assert len(first) == 2 * 5 + settings.dipole_samples


def test_unknown_suite(runner: VerificationRunner) -> None:
    """Test unknown suite names are rejected."""
    with pytest.raises(ValueError, match="unknown verification suite"):
        runner.run("everything")  # type: ignore[arg-type]


def test_quadrature_failure_becomes_failed_diagnostic(
    runner: VerificationRunner, mocker: MockerFixture
) -> None:
    """Test a quadrature that does not converge is reported, not raised, and exits 2."""
    mocker.patch(
        "sommerflux.verification.suites.action_integral",
        side_effect=QuadratureError("integrand did not converge"),
    )

    report = cmd_verify(runner, ["action"])

    assert report.diagnostics
    assert all(not d.passed for d in report.diagnostics)
    assert all(d.residual is None for d in report.diagnostics)
    assert report.diagnostics[0].note == "integrand did not converge"
    assert report.exit_code == 2


def test_factorization_failure_becomes_failed_diagnostic(
    runner: VerificationRunner, mocker: MockerFixture
) -> None:
    """Test a closed form disagreeing with its pipeline fails only the affected cases."""
    mocker.patch(
        "sommerflux.verification.suites.dipole_focus_flux",
        side_effect=FactorizationError("closed form drifted"),
    )

    diagnostics = runner.run("dipole-flux")

    failed = [d for d in diagnostics if not d.passed]
    assert failed
    assert {d.note for d in failed} == {"closed form drifted"}
