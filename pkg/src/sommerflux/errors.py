"""Exception hierarchy shared by all sommerflux modules.

Concrete errors are declared next to the code that raises them; they all derive from
:class:`SommerfluxError` so the CLI can map any domain failure to a single exit code.
"""

from __future__ import annotations


class SommerfluxError(ValueError):
    """Base class for domain errors."""


class QuantumNumberError(SommerfluxError):
    pass


class GeometryError(SommerfluxError):
    pass


class QuadratureError(SommerfluxError):
    pass


class FactorizationError(RuntimeError):
    """A closed-form shift disagrees with its chained flux pipeline."""
