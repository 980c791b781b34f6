"""Adaptive quadrature wrappers that fail loudly.

SciPy signals non-convergence with a warning and still returns a number; here any such signal
becomes a :class:`~sommerflux.errors.QuadratureError`.
"""

from __future__ import annotations

import math
import warnings
from collections.abc import Callable

from scipy import integrate as sp_integrate

from sommerflux.errors import QuadratureError
from sommerflux.logging import get_logger

logger = get_logger(__name__)

# SciPy rejects epsrel below 50 machine epsilons when epsabs is zero
MIN_RELATIVE_TOL = 1e-13
DEFAULT_LIMIT = 200


def effective_tol(tol: float) -> float:
    """Relative tolerance actually handed to SciPy."""

    if not tol > 0.0:
        raise QuadratureError(f"quadrature tolerance must be positive, got {tol!r}")
    return max(tol, MIN_RELATIVE_TOL)


def integrate(
    func: Callable[[float], float],
    lo: float,
    hi: float,
    *,
    tol: float,
    limit: int = DEFAULT_LIMIT,
    points: list[float] | None = None,
) -> float:
    """Integrate ``func`` over ``[lo, hi]`` with adaptive Gauss-Kronrod.

    Args:
        func: Scalar integrand.
        lo: Lower limit.
        hi: Upper limit.
        tol: Requested relative tolerance (clamped to :data:`MIN_RELATIVE_TOL`).
        limit: Maximum number of subintervals.
        points: Optional interior break points.

    Returns:
        The integral value.

    Raises:
        QuadratureError: SciPy reported non-convergence or the result is not finite.
    """

    epsrel = effective_tol(tol)
    result = sp_integrate.quad(
        func, lo, hi, epsabs=0.0, epsrel=epsrel, limit=limit, points=points, full_output=1
    )
    value, abserr, info = result[0], result[1], result[2]
    if len(result) > 3:
        raise QuadratureError(f"quadrature did not converge: {result[3]}")
    if not math.isfinite(value):
        raise QuadratureError(f"quadrature returned a non-finite value {value!r}")
    logger.debug(
        "quad [%g, %g] -> %.17g (abserr=%.3g, neval=%d)", lo, hi, value, abserr, info["neval"]
    )
    return float(value)


def integrate_2d(
    func: Callable[[float, float], float],
    x_lo: float,
    x_hi: float,
    y_lo: Callable[[float], float],
    y_hi: Callable[[float], float],
    *,
    tol: float,
) -> float:
    """Iterated adaptive cubature of ``func(y, x)`` (SciPy ``dblquad`` argument order)."""

    epsrel = effective_tol(tol)
    with warnings.catch_warnings():
        warnings.simplefilter("error", sp_integrate.IntegrationWarning)
        try:
            value, abserr = sp_integrate.dblquad(
                func, x_lo, x_hi, y_lo, y_hi, epsabs=0.0, epsrel=epsrel
            )
        except sp_integrate.IntegrationWarning as exc:
            raise QuadratureError(f"cubature did not converge: {exc}") from exc
    if not math.isfinite(value):
        raise QuadratureError(f"cubature returned a non-finite value {value!r}")
    logger.debug("dblquad -> %.17g (abserr=%.3g)", value, abserr)
    return float(value)
