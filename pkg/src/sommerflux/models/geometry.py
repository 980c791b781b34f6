"""Elliptic orbit geometry."""

from __future__ import annotations

import math

from pydantic import BaseModel, ConfigDict, PositiveFloat, model_validator

from sommerflux.errors import GeometryError

_GEOMETRY_RTOL = 1e-12


class OrbitGeometry(BaseModel):
    """Semi-axes, focal parameter, eccentricity and area of a Kepler ellipse.

    The nucleus (and any focal dipole) sits at one focus, so the orbit reads
    ``r(phi) = p / (1 - eps cos phi)``.
    """

    model_config = ConfigDict(frozen=True)

    a: PositiveFloat
    b: PositiveFloat
    p: PositiveFloat
    eps: float
    area: PositiveFloat

    @model_validator(mode="after")
    def _check_consistency(self) -> OrbitGeometry:
        if self.b > self.a * (1.0 + _GEOMETRY_RTOL):
            raise ValueError(f"b={self.b!r} exceeds a={self.a!r}")
        if not 0.0 <= self.eps < 1.0:
            raise ValueError(f"eccentricity must lie in [0, 1), got {self.eps!r}")
        if not math.isclose(self.p, self.b**2 / self.a, rel_tol=_GEOMETRY_RTOL):
            raise ValueError("focal parameter must equal b^2/a")
        if not math.isclose(self.area, math.pi * self.a * self.b, rel_tol=_GEOMETRY_RTOL):
            raise ValueError("area must equal pi a b")
        return self

    @classmethod
    def from_axes(cls, a: float, b: float) -> OrbitGeometry:
        """Build from semi-major axis ``a`` and semi-minor axis ``b`` (metres)."""

        if not (math.isfinite(a) and math.isfinite(b)) or a <= 0.0 or b <= 0.0:
            raise GeometryError(f"semi-axes must be positive and finite, got a={a!r}, b={b!r}")
        if b > a:
            raise GeometryError(f"unphysical orbit: b={b!r} > a={a!r}")
        ratio = b / a
        return cls(
            a=a,
            b=b,
            p=b * ratio,
            eps=math.sqrt(max(0.0, 1.0 - ratio * ratio)),
            area=math.pi * a * b,
        )

    @classmethod
    def from_focal(cls, p: float, eps: float) -> OrbitGeometry:
        """Build from focal parameter ``p`` (metres) and eccentricity ``eps``."""

        if not math.isfinite(p) or p <= 0.0:
            raise GeometryError(f"focal parameter must be positive, got {p!r}")
        if not 0.0 <= eps < 1.0:
            raise GeometryError(f"eccentricity must lie in [0, 1), got {eps!r}")
        one_minus = 1.0 - eps * eps
        a = p / one_minus
        b = p / math.sqrt(one_minus)
        return cls(a=a, b=b, p=p, eps=eps, area=math.pi * a * b)
