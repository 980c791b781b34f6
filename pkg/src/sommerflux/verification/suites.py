"""Verification suites.

Each suite compares a closed form with an independent numerical evaluation and returns one
:class:`~sommerflux.models.report.Diagnostic` per case. Oracle failures (non-convergence, a broken
factorization) become failed diagnostics rather than exceptions.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Iterator
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, get_args

import numpy as np

from sommerflux.config import Settings
from sommerflux.constants import PhysicalConstants
from sommerflux.errors import FactorizationError, QuadratureError
from sommerflux.logging import get_logger, set_stage
from sommerflux.models.geometry import OrbitGeometry
from sommerflux.models.quantum import QuantumNumbers, admissible_n_phi
from sommerflux.models.report import Diagnostic
from sommerflux.physics.coupling import lande_g
from sommerflux.physics.energy import coefficient_forms, linearization_residual
from sommerflux.physics.flux import (
    dipole_flux_cubature,
    dipole_flux_oracle,
    dipole_focus_flux,
)
from sommerflux.physics.orbits import action_integral
from sommerflux.physics.reference import standard_lande

logger = get_logger(__name__)

SuiteName = Literal["action", "dipole-flux", "linearization", "lande"]
SUITES: tuple[SuiteName, ...] = get_args(SuiteName)

ACTION_Z = (1, 2)
ACTION_N_MAX = 6
DIPOLE_ECCENTRICITIES = (0.0, 0.3, 0.6, 0.9, 0.95)
# proton magnetic moment, J/T
DIPOLE_REFERENCE_MOMENT = 1.41060679736e-26
LINEARIZATION_CASES = ((1, 1), (2, 1), (3, 2))
LINEARIZATION_QUANTA = (1e-6, 1e-3)
LINEARIZATION_POINTS = 13
COEFFICIENT_RTOL = 1e-9
LANDE_L_MAX = 10
LANDE_RTOL = 1e-12

_OracleFailure = (QuadratureError, FactorizationError)


def _relative(value: float, reference: float) -> float:
    return abs(value / reference - 1.0)


@dataclass(frozen=True)
class VerificationRunner:
    """Runs oracle suites against one constant set."""

    consts: PhysicalConstants
    settings: Settings

    def default_tolerance(self, suite: SuiteName) -> float:
        if suite == "action":
            return self.settings.action_tol
        if suite == "dipole-flux":
            return self.settings.dipole_tol
        if suite == "linearization":
            return self.settings.linearization_tol
        return LANDE_RTOL

    def run(self, suite: SuiteName, tol: float | None = None) -> list[Diagnostic]:
        """Run one suite.

        Args:
            suite: Suite name, one of :data:`SUITES`.
            tol: Residual tolerance; the suite default when omitted.

        Returns:
            Diagnostics in a deterministic case order.
        """

        handlers: dict[SuiteName, Callable[[float], Iterator[Diagnostic]]] = {
            "action": self._action,
            "dipole-flux": self._dipole_flux,
            "linearization": self._linearization,
            "lande": self._lande,
        }
        if suite not in handlers:
            raise ValueError(f"unknown verification suite {suite!r}; expected one of {SUITES}")
        tolerance = tol if tol is not None else self.default_tolerance(suite)
        set_stage(suite)
        diagnostics = list(handlers[suite](tolerance))
        failed = sum(1 for d in diagnostics if not d.passed)
        logger.info("Suite %s: %d case(s), %d failed", suite, len(diagnostics), failed)
        return diagnostics

    def _guarded(
        self, suite: str, case: str, tol: float, residual: Callable[[], float]
    ) -> Diagnostic:
        try:
            value = residual()
        except _OracleFailure as exc:
            logger.warning("Oracle failed for %s/%s: %s", suite, case, exc)
            return Diagnostic(suite=suite, case=case, residual=None, tolerance=tol, note=str(exc))
        return Diagnostic(suite=suite, case=case, residual=value, tolerance=tol)

    def _action(self, tol: float) -> Iterator[Diagnostic]:
        quad_tol = min(self.settings.quad_tol, tol)
        for Z in ACTION_Z:
            for n in range(1, ACTION_N_MAX + 1):
                for convention in ("integer", "half"):
                    for n_phi in admissible_n_phi(n, convention):
                        qn = QuantumNumbers.sommerfeld(n, n_phi)

                        def residual(qn: QuantumNumbers = qn, Z: int = Z) -> float:
                            action = action_integral(qn, Z, self.consts, quad_tol)
                            return _relative(action, qn.n * self.consts.h)

                        yield self._guarded(
                            "action", f"Z={Z} n={n} n_phi={n_phi}", tol, residual
                        )

    def _dipole_geometries(self) -> Iterator[tuple[str, OrbitGeometry, float, bool]]:
        for eps in DIPOLE_ECCENTRICITIES:
            geom = OrbitGeometry.from_focal(self.consts.a0, eps)
            yield f"eps={eps}", geom, DIPOLE_REFERENCE_MOMENT, True
        rng = np.random.default_rng(self.settings.random_seed)
        for index in range(self.settings.dipole_samples):
            p = self.consts.a0 * 10.0 ** rng.uniform(-1.0, 2.0)
            eps = float(rng.uniform(0.0, 0.99))
            mu = float(rng.uniform(1e-27, 1e-23)) * float(rng.choice([-1.0, 1.0]))
            geom = OrbitGeometry.from_focal(float(p), eps)
            yield f"random[{index}] p={p:.4e} eps={eps:.4f}", geom, mu, False

    def _dipole_flux(self, tol: float) -> Iterator[Diagnostic]:
        quad_tol = min(self.settings.quad_tol, tol)
        for case, geom, mu, with_cubature in self._dipole_geometries():

            def oracle(geom: OrbitGeometry = geom, mu: float = mu) -> float:
                closed = dipole_focus_flux(geom, mu, self.consts).total
                return _relative(dipole_flux_oracle(geom, mu, self.consts, quad_tol), closed)

            yield self._guarded("dipole-flux", f"{case} quadrature", tol, oracle)
            if with_cubature:

                def cubature(geom: OrbitGeometry = geom, mu: float = mu) -> float:
                    closed = dipole_focus_flux(geom, mu, self.consts).total
                    return _relative(dipole_flux_cubature(geom, mu, self.consts, tol), closed)

                yield self._guarded("dipole-flux", f"{case} cubature", tol, cubature)

    def _linearization(self, tol: float) -> Iterator[Diagnostic]:
        lo, hi = LINEARIZATION_QUANTA
        quanta = np.logspace(math.log10(lo), math.log10(hi), LINEARIZATION_POINTS)
        for n, Z in LINEARIZATION_CASES:
            qn = QuantumNumbers.circular(n)
            fluxes = quanta * self.consts.flux_quantum
            residuals = np.array(
                [linearization_residual(qn, Z, float(phi), self.consts) for phi in fluxes]
            )
            slope, log_c = np.polyfit(np.log(fluxes), np.log(residuals), 1)
            logger.debug("n=%d Z=%d remainder ~ %.4g Phi^%.6f", n, Z, math.exp(log_c), slope)
            yield Diagnostic(
                suite="linearization",
                case=f"n={n} Z={Z} remainder exponent={slope:.6f}",
                residual=abs(float(slope) - 2.0),
                tolerance=tol,
            )
            forms = coefficient_forms(n, Z, self.consts)
            yield Diagnostic(
                suite="linearization",
                case=f"n={n} Z={Z} coefficient forms",
                residual=_relative(forms.fundamental, forms.rydberg),
                tolerance=COEFFICIENT_RTOL,
            )

    def _lande(self, tol: float) -> Iterator[Diagnostic]:
        half = Fraction(1, 2)
        for l in range(LANDE_L_MAX + 1):  # noqa: E741
            for j in (l - half, l + half):
                if j < half:
                    continue

                def residual(l: int = l, j: Fraction = j) -> float:  # noqa: E741
                    return _relative(lande_g(l, half, j), standard_lande(l, half, j))

                yield self._guarded("lande", f"l={l} j={j}", tol, residual)
