"""Quantum-number bookkeeping for Sommerfeld orbits.

Half-integer quantum numbers are held as :class:`fractions.Fraction` so 1/2-steps compare exactly.

Two conventions coexist:

* ``integer`` (Sommerfeld): ``n_phi = 1..n``, ``n_r = n - n_phi``;
* ``half``: ``n_r, n_phi`` start at 1/2 with unit steps. States decomposed into orbital and spin
  parts (``l`` set) always use it, with ``n_phi = l + s``.

In both, ``n = n_r + n_phi`` is a positive integer.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Annotated, Any, ClassVar, Literal

from pydantic import (
    BaseModel,
    BeforeValidator,
    ConfigDict,
    Field,
    PlainSerializer,
    ValidationError,
    model_validator,
)

from sommerflux.errors import QuantumNumberError

Convention = Literal["integer", "half"]

HALF = Fraction(1, 2)


def as_half_integer(value: Any) -> Fraction:
    """Coerce ints, exact floats and ``"3/2"``-style strings to a half-integer Fraction."""

    if isinstance(value, bool):
        raise ValueError("booleans are not quantum numbers")
    if isinstance(value, Fraction):
        frac = value
    elif isinstance(value, int | float | str):
        try:
            frac = Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a number: {value!r}") from exc
    else:
        raise ValueError(f"unsupported quantum number type: {type(value).__name__}")
    if (2 * frac).denominator != 1:
        raise ValueError(f"{value!r} is not an integer or half-integer")
    return frac


def _fraction_to_str(value: Fraction) -> str:
    return str(value)


HalfInt = Annotated[
    Fraction,
    BeforeValidator(as_half_integer),
    PlainSerializer(_fraction_to_str, return_type=str, when_used="json"),
]


def _is_integer(value: Fraction) -> bool:
    return value.denominator == 1


class QuantumNumbers(BaseModel):
    """The (n_r, n_phi, n_psi) triple plus the orbital/spin/nuclear decomposition."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    s: ClassVar[Fraction] = HALF

    n_r: HalfInt
    n_phi: HalfInt
    n_psi: HalfInt | None = None

    l: int | None = Field(default=None, ge=0)  # noqa: E741
    j: HalfInt | None = None
    m_j: HalfInt | None = None
    m_l: int | None = None
    m_s: HalfInt | None = None
    I: HalfInt | None = None  # noqa: E741
    F: HalfInt | None = None

    @property
    def n(self) -> int:
        """Principal quantum number n = n_r + n_phi."""

        return int(self.n_r + self.n_phi)

    @property
    def convention(self) -> Convention:
        return "integer" if _is_integer(self.n_phi) else "half"

    @model_validator(mode="after")
    def _check_invariants(self) -> QuantumNumbers:
        total = self.n_r + self.n_phi
        if self.n_phi <= 0:
            raise ValueError(f"n_phi must be positive, got {self.n_phi}")
        if self.n_r < 0:
            raise ValueError(f"n_r must be non-negative, got {self.n_r}")
        if not _is_integer(total) or total < 1:
            raise ValueError(f"n = n_r + n_phi must be a positive integer, got {total}")
        if self.convention == "half" and self.n_r < HALF:
            raise ValueError("half convention requires n_r >= 1/2")

        if self.n_psi is not None and (
            abs(self.n_psi) > self.n_phi or not _is_integer(self.n_phi - self.n_psi)
        ):
            raise ValueError(f"n_psi={self.n_psi} not in -n_phi..n_phi (unit steps)")

        if self.l is not None:
            if self.n_phi != self.l + self.s:
                raise ValueError(f"n_phi={self.n_phi} must equal l + s = {self.l + self.s}")
            if self.j is not None and self.j not in (self.l - self.s, self.l + self.s):
                raise ValueError(f"j={self.j} must be l +- 1/2 for l={self.l}")
        if self.j is not None and (self.j < HALF or _is_integer(self.j)):
            raise ValueError(f"j must be a half-integer >= 1/2, got {self.j}")

        if self.m_j is not None:
            if self.j is None:
                raise ValueError("m_j requires j")
            if abs(self.m_j) > self.j or not _is_integer(self.j - self.m_j):
                raise ValueError(f"|m_j| <= j violated: m_j={self.m_j}, j={self.j}")
        if self.m_l is not None:
            if self.l is None:
                raise ValueError("m_l requires l")
            if abs(self.m_l) > self.l:
                raise ValueError(f"|m_l| <= l violated: m_l={self.m_l}, l={self.l}")
        if self.m_s is not None and abs(self.m_s) != self.s:
            raise ValueError(f"m_s must be +-1/2, got {self.m_s}")

        if self.I is not None and self.I < 0:
            raise ValueError(f"nuclear spin I must be >= 0, got {self.I}")
        if self.F is not None:
            if self.I is None or self.j is None:
                raise ValueError("F requires both I and j")
            if self.F not in f_values(self.I, self.j):
                raise ValueError(f"F={self.F} not in |I-j|..I+j for I={self.I}, j={self.j}")
        return self

    @classmethod
    def _build(cls, **fields: Any) -> QuantumNumbers:
        try:
            return cls(**fields)
        except ValidationError as exc:
            messages = "; ".join(err["msg"] for err in exc.errors())
            raise QuantumNumberError(messages) from exc

    @classmethod
    def sommerfeld(
        cls, n: int, n_phi: Fraction | int | float | str, *, n_psi: Any = None
    ) -> QuantumNumbers:
        """Undecomposed Sommerfeld orbit with principal ``n`` and azimuthal ``n_phi``."""

        try:
            phi = as_half_integer(n_phi)
        except ValueError as exc:
            raise QuantumNumberError(str(exc)) from exc
        if phi > n:
            raise QuantumNumberError(f"n_phi={phi} exceeds n={n} (b > a)")
        return cls._build(n_r=Fraction(n) - phi, n_phi=phi, n_psi=n_psi)

    @classmethod
    def circular(cls, n: int, *, n_psi: Any = None) -> QuantumNumbers:
        """Circular orbit in the integer convention (n_phi = n, n_r = 0)."""

        return cls.sommerfeld(n, n, n_psi=n_psi)

    @classmethod
    def from_term(
        cls,
        n: int,
        l: int,  # noqa: E741
        j: Any = None,
        *,
        m_j: Any = None,
        m_l: int | None = None,
        m_s: Any = None,
        n_psi: Any = None,
        I: Any = None,  # noqa: E741
        F: Any = None,
    ) -> QuantumNumbers:
        """Spectroscopic term ``n l_j`` in the half convention (n_phi = l + 1/2)."""

        if l < 0 or l >= n:
            raise QuantumNumberError(f"l={l} must satisfy 0 <= l < n={n}")
        n_phi = l + HALF
        return cls._build(
            n_r=Fraction(n) - n_phi,
            n_phi=n_phi,
            n_psi=n_psi,
            l=l,
            j=j,
            m_j=m_j,
            m_l=m_l,
            m_s=m_s,
            I=I,
            F=F,
        )

    def require(self, *names: str) -> None:
        """Raise unless every named quantum number is set."""

        missing = [name for name in names if getattr(self, name) is None]
        if missing:
            raise QuantumNumberError(f"state is missing quantum number(s): {', '.join(missing)}")


def f_values(I: Fraction, j: Fraction) -> list[Fraction]:  # noqa: E741
    """Total angular momentum values F = |I - j| .. I + j."""

    lowest = abs(I - j)
    count = int(I + j - lowest) + 1
    return [lowest + k for k in range(count)]


def magnetic_values(x: Fraction | int) -> list[Fraction]:
    """Projections -x, -x + 1, ..., x."""

    x = Fraction(x)
    return [-x + k for k in range(int(2 * x) + 1)]


def admissible_n_phi(n: int, convention: Convention = "integer") -> list[Fraction]:
    """All admissible azimuthal quantum numbers for principal ``n``."""

    if n < 1:
        raise QuantumNumberError(f"principal quantum number must be >= 1, got {n}")
    if convention == "integer":
        return [Fraction(k) for k in range(1, n + 1)]
    return [Fraction(2 * k + 1, 2) for k in range(n)]
