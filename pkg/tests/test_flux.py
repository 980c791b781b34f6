"""Tests for flux through Sommerfeld orbits."""

from __future__ import annotations

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sommerflux.constants import PhysicalConstants, default_constants
from sommerflux.models.flux import FluxValue
from sommerflux.models.geometry import OrbitGeometry
from sommerflux.physics.flux import (
    FluxError,
    clean_cos,
    dipole_exterior_flux,
    dipole_flux_cubature,
    dipole_flux_oracle,
    dipole_focus_flux,
    flux_in_quanta,
    tilted_dipole_flux,
    uniform_field_flux,
)

PROTON_MOMENT = 1.41060679736e-26


def test_uniform_field_flux(consts: PhysicalConstants) -> None:
    """Test pi a b B cos(alpha), exactly zero edge-on."""
    geom = OrbitGeometry.from_axes(4 * consts.a0, 2 * consts.a0)

    assert uniform_field_flux(geom, 1.5, 0.0).total == pytest.approx(geom.area * 1.5)
    assert uniform_field_flux(geom, 1.5, math.pi / 2).total == 0.0
    assert uniform_field_flux(geom, 1.5, math.pi).total == pytest.approx(-geom.area * 1.5)
    with pytest.raises(FluxError):
        uniform_field_flux(geom, math.nan, 0.0)


def test_clean_cos() -> None:
    """Test round-off snapping."""
    assert clean_cos(math.pi / 2) == 0.0
    assert clean_cos(0.0) == 1.0


def test_dipole_focus_flux_sign(consts: PhysicalConstants) -> None:
    """Test the interior flux opposes the exterior flux."""
    geom = OrbitGeometry.from_focal(consts.a0, 0.5)

    interior = dipole_focus_flux(geom, PROTON_MOMENT, consts)

    assert interior.source == "dipole_focus"
    assert interior.total == pytest.approx(-consts.mu0 * PROTON_MOMENT / (2 * consts.a0))
    assert interior.total == -dipole_exterior_flux(geom, PROTON_MOMENT, consts)


def test_zero_moment_gives_positive_zero(consts: PhysicalConstants) -> None:
    """Test a vanishing moment does not produce -0.0."""
    geom = OrbitGeometry.from_focal(consts.a0, 0.5)

    flux = dipole_focus_flux(geom, 0.0, consts)

    assert flux.total == 0.0
    assert math.copysign(1.0, flux.total) == 1.0
    assert dipole_flux_oracle(geom, 0.0, consts) == 0.0


@pytest.mark.parametrize("eps", [0.0, 0.3, 0.6, 0.9, 0.95])
def test_quadrature_oracle_matches_closed_form(consts: PhysicalConstants, eps: float) -> None:
    """Test the flux depends only on the focal parameter."""
    geom = OrbitGeometry.from_focal(consts.a0, eps)

    closed = dipole_focus_flux(geom, PROTON_MOMENT, consts).total

    assert dipole_flux_oracle(geom, PROTON_MOMENT, consts) == pytest.approx(closed, rel=1e-9)


def test_cubature_oracle_matches_closed_form(consts: PhysicalConstants) -> None:
    """Test the 2D exterior cubature against the closed form."""
    geom = OrbitGeometry.from_focal(2 * consts.a0, 0.6)

    closed = dipole_focus_flux(geom, -PROTON_MOMENT, consts).total

    assert dipole_flux_cubature(geom, -PROTON_MOMENT, consts, tol=1e-5) == pytest.approx(
        closed, rel=1e-4
    )


def test_tilted_dipole(consts: PhysicalConstants) -> None:
    """Test only the normal component of the moment contributes."""
    geom = OrbitGeometry.from_focal(consts.a0, 0.2)

    assert tilted_dipole_flux(geom, PROTON_MOMENT, math.pi / 2, consts).total == 0.0
    assert tilted_dipole_flux(geom, PROTON_MOMENT, math.pi / 3, consts).total == pytest.approx(
        0.5 * dipole_focus_flux(geom, PROTON_MOMENT, consts).total, rel=1e-12
    )


def test_flux_in_quanta(consts: PhysicalConstants) -> None:
    """Test flux measured in h/e."""
    assert flux_in_quanta(consts.h / consts.e, consts) == pytest.approx(1.0, rel=1e-15)
    assert flux_in_quanta(FluxValue.azimuthal(consts.flux_quantum * 3, "uniform"), consts) == (
        pytest.approx(3.0, rel=1e-15)
    )


def test_flux_value_arithmetic() -> None:
    """Test composite fluxes keep the component split."""
    spin = FluxValue.spin_rule(2.0, "uniform")
    orbital = FluxValue.azimuthal(1.0, "uniform")

    total = spin + orbital

    assert total.source == "composite"
    assert (total.total, total.phi_component, total.r_component) == (3.0, 2.0, 1.0)
    assert (-total).total == -3.0
    assert (2 * spin).r_component == 2.0
    assert FluxValue.zero().total == 0.0


def test_flux_value_rejects_bad_split() -> None:
    """Test total = phi + r is enforced."""
    with pytest.raises(ValueError):
        FluxValue(total=1.0, phi_component=0.2, r_component=0.2, source="uniform")


@settings(max_examples=40, deadline=None)
@given(
    st.floats(min_value=-1.0, max_value=2.0),
    st.floats(min_value=0.0, max_value=0.99),
    st.floats(min_value=1e-27, max_value=1e-23),
)
def test_oracle_agrees_for_random_orbits(log_p: float, eps: float, mu: float) -> None:
    """Test closed form and quadrature agree over a range of geometries."""
    consts = default_constants()
    geom = OrbitGeometry.from_focal(consts.a0 * 10.0**log_p, eps)

    closed = dipole_focus_flux(geom, mu, consts).total

    assert dipole_flux_oracle(geom, mu, consts) == pytest.approx(closed, rel=1e-9)
