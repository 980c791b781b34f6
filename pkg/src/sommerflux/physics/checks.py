"""Closed form versus chained pipeline assertions."""

from __future__ import annotations

import math

from sommerflux.errors import FactorizationError
from sommerflux.logging import get_logger

logger = get_logger(__name__)

FACTORIZATION_RTOL = 1e-12


def assert_factorization(
    label: str, closed: float, chained: float, *, rel_tol: float = FACTORIZATION_RTOL
) -> None:
    """Raise :class:`FactorizationError` unless ``closed`` equals ``chained`` to ``rel_tol``."""

    if closed == chained or math.isclose(closed, chained, rel_tol=rel_tol, abs_tol=0.0):
        return
    logger.error("%s: closed form %.17g != chained %.17g", label, closed, chained)
    raise FactorizationError(f"{label}: closed form {closed!r} != chained pipeline {chained!r}")
