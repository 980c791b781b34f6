"""Spectroscopic state-spec parsing (``2p3/2`` style)."""

from __future__ import annotations

import re
from fractions import Fraction
from typing import NamedTuple

from sommerflux.errors import QuantumNumberError, SommerfluxError
from sommerflux.models.quantum import QuantumNumbers

ORBITAL_LETTERS = "spdfg"

_STATE_RE = re.compile(r"^(?P<n>\d+)(?P<letter>[spdfg])(?P<j>\d+/2)$", re.IGNORECASE)


class StateSpecError(SommerfluxError):
    pass


class StateSpec(NamedTuple):
    n: int
    l: int  # noqa: E741
    j: Fraction


def parse_state(spec: str) -> StateSpec:
    """Parse ``<n><letter><j>`` such as ``1s1/2`` or ``2p3/2``.

    Args:
        spec: State spec; letters ``s, p, d, f, g`` map to ``l = 0..4``.

    Returns:
        StateSpec: ``(n, l, j)``.

    Raises:
        StateSpecError: Unparsable text or inconsistent quantum numbers.
    """

    m = _STATE_RE.match(spec.strip())
    if m is None:
        raise StateSpecError(f"cannot parse state spec {spec!r}; expected e.g. '2p3/2'")
    n = int(m.group("n"))
    l = ORBITAL_LETTERS.index(m.group("letter").lower())  # noqa: E741
    j = Fraction(m.group("j"))
    if n < 1 or l >= n:
        raise StateSpecError(f"{spec!r}: l={l} requires n > l, got n={n}")
    if j not in (l - Fraction(1, 2), l + Fraction(1, 2)) or j < Fraction(1, 2):
        raise StateSpecError(f"{spec!r}: j={j} is not l +- 1/2 for l={l}")
    return StateSpec(n=n, l=l, j=j)


def state_from_spec(spec: str, **extra: object) -> QuantumNumbers:
    """Quantum numbers of a parsed spec, with optional magnetic/nuclear numbers."""

    parsed = parse_state(spec)
    try:
        return QuantumNumbers.from_term(
            parsed.n, parsed.l, parsed.j, **extra  # type: ignore[arg-type]
        )
    except QuantumNumberError as exc:
        raise StateSpecError(f"{spec!r}: {exc}") from exc


def format_state(n: int, l: int, j: Fraction | None = None) -> str:  # noqa: E741
    """Inverse of :func:`parse_state`."""

    label = f"{n}{ORBITAL_LETTERS[l]}"
    return label if j is None else f"{label}{j}"
