"""Energy shift model."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, ConfigDict

from sommerflux.constants import EnergyUnit, PhysicalConstants, convert_energy
from sommerflux.models.flux import FluxValue
from sommerflux.models.quantum import QuantumNumbers

ShiftOrder = Literal["exact", "first_order"]


class EnergyShift(BaseModel):
    """A signed energy perturbation in joules.

    ``magnitude`` and ``sign`` are exposed separately: comparisons against unsigned textbook
    expressions use the magnitude, the sign records the orientation.
    """

    model_config = ConfigDict(frozen=True)

    value: float
    order: ShiftOrder = "first_order"
    state: QuantumNumbers | None = None
    flux: FluxValue | None = None
    label: str = ""

    @property
    def magnitude(self) -> float:
        return abs(self.value)

    @property
    def sign(self) -> int:
        if self.value > 0.0:
            return 1
        if self.value < 0.0:
            return -1
        return 0

    def to(self, unit: EnergyUnit, consts: PhysicalConstants | None = None) -> float:
        """Value converted to ``unit``."""

        return convert_energy(self.value, unit, consts)
