"""Nuclear species and experimental reference values."""

from __future__ import annotations

from fractions import Fraction
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, PositiveFloat, computed_field, field_validator

from sommerflux.models.quantum import HalfInt

ExperimentalUnit = Literal["J", "eV", "MHz", "1/cm", "1"]


class NuclearSpecies(BaseModel):
    """An isotope with its nuclear spin and g-factor.

    ``mu_K`` is captured from the constants the species was loaded with, so ``mu_nuc`` stays
    consistent with that constant set.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    name: str = Field(min_length=1)
    Z: int = Field(ge=1)
    A_mass: int = Field(ge=1)
    I: HalfInt  # noqa: E741
    g_I: float
    mu_K: PositiveFloat

    @field_validator("I")
    @classmethod
    def _non_negative_spin(cls, value: Fraction) -> Fraction:
        if value < 0:
            raise ValueError(f"nuclear spin must be >= 0, got {value}")
        return value

    @computed_field  # type: ignore[prop-decorator]
    @property
    def mu_nuc(self) -> float:
        """Nuclear magnetic moment g_I mu_K I in J/T."""

        return self.g_I * self.mu_K * float(self.I)

    @property
    def has_hyperfine_structure(self) -> bool:
        """True for I > 0, including a vanishing moment (every F shift is then 0)."""

        return self.I > 0


class ExperimentalValue(BaseModel):
    """A measured reference value with its source note."""

    model_config = ConfigDict(frozen=True)

    observable: str = Field(min_length=1)
    value: float
    unit: ExperimentalUnit
    source: str = ""
