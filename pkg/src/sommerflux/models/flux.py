"""Signed magnetic flux values."""

from __future__ import annotations

import math
from typing import Literal

from pydantic import BaseModel, ConfigDict, model_validator

FluxSource = Literal["uniform", "dipole_focus", "composite"]

_SPLIT_RTOL = 1e-12


class FluxValue(BaseModel):
    """Magnetic flux in webers split over the azimuthal and radial quantum numbers.

    ``total = phi_component + r_component`` always holds. Orientation convention: the orbit
    normal points along the orbital angular momentum and flux is positive when the field
    component is parallel to it.
    """

    model_config = ConfigDict(frozen=True)

    total: float
    phi_component: float
    r_component: float = 0.0
    source: FluxSource

    @model_validator(mode="after")
    def _check_split(self) -> FluxValue:
        for name in ("total", "phi_component", "r_component"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")
        parts = self.phi_component + self.r_component
        scale = max(abs(self.total), abs(self.phi_component), abs(self.r_component))
        if abs(self.total - parts) > _SPLIT_RTOL * scale:
            raise ValueError(
                f"total={self.total!r} differs from phi + r components ({parts!r})"
            )
        return self

    @classmethod
    def azimuthal(cls, total: float, source: FluxSource) -> FluxValue:
        """All flux threads the azimuthal action; Phi_r = 0."""

        return cls(total=total, phi_component=total, r_component=0.0, source=source)

    @classmethod
    def spin_rule(cls, total: float, source: FluxSource) -> FluxValue:
        """Spin contribution: Phi_phi = Phi_r = total / 2."""

        half = total / 2.0
        return cls(total=total, phi_component=half, r_component=total - half, source=source)

    @classmethod
    def zero(cls, source: FluxSource = "composite") -> FluxValue:
        return cls(total=0.0, phi_component=0.0, r_component=0.0, source=source)

    def __add__(self, other: object) -> FluxValue:
        if not isinstance(other, FluxValue):
            return NotImplemented
        return FluxValue(
            total=self.total + other.total,
            phi_component=self.phi_component + other.phi_component,
            r_component=self.r_component + other.r_component,
            source="composite",
        )

    def __mul__(self, factor: object) -> FluxValue:
        if isinstance(factor, bool) or not isinstance(factor, int | float):
            return NotImplemented
        return FluxValue(
            total=self.total * factor,
            phi_component=self.phi_component * factor,
            r_component=self.r_component * factor,
            source=self.source,
        )

    __rmul__ = __mul__

    def __neg__(self) -> FluxValue:
        return self * -1.0
