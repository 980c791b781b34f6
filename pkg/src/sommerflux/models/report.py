"""Report model produced by every CLI command.

A report is plain data: rows of labelled numbers with units, model-vs-reference comparisons and
oracle diagnostics. Derived columns (ratios, pass flags, exit code) are computed fields, so a
report parsed back from JSON reproduces them exactly.
"""

from __future__ import annotations

import math
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, computed_field

InputValue = str | int | float | bool | None
RatioKind = Literal["model/reference", "reference/model"]


class ReportRow(BaseModel):
    """A labelled numeric result."""

    model_config = ConfigDict(frozen=True)

    label: str
    quantity: str
    value: float | None = None
    unit: str = Field(min_length=1)
    error: str | None = None


class Comparison(BaseModel):
    """Model value next to its reference baseline."""

    model_config = ConfigDict(frozen=True)

    label: str
    model: float | None = None
    reference: float | None = None
    unit: str = Field(min_length=1)
    ratio_kind: RatioKind = "model/reference"

    @computed_field  # type: ignore[prop-decorator]
    @property
    def ratio(self) -> float | None:
        """Ratio of the two sides; absent unless both are computed and the divisor is nonzero."""

        if self.model is None or self.reference is None:
            return None
        num, den = (
            (self.model, self.reference)
            if self.ratio_kind == "model/reference"
            else (self.reference, self.model)
        )
        if den == 0.0:
            return None
        value = num / den
        return value if math.isfinite(value) else None


class Diagnostic(BaseModel):
    """Residual of a numerical oracle against its tolerance."""

    model_config = ConfigDict(frozen=True)

    suite: str
    case: str
    residual: float | None = None
    tolerance: float
    note: str | None = None

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return self.residual is not None and self.residual <= self.tolerance


class Report(BaseModel):
    """Output of one command."""

    model_config = ConfigDict(frozen=True)

    command: str
    inputs: dict[str, InputValue] = Field(default_factory=dict)
    rows: list[ReportRow] = Field(default_factory=list)
    comparisons: list[Comparison] = Field(default_factory=list)
    diagnostics: list[Diagnostic] = Field(default_factory=list)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def exit_code(self) -> int:
        """2 on any failed diagnostic, 1 on any error row, else 0."""

        if any(not diag.passed for diag in self.diagnostics):
            return 2
        if any(row.error is not None for row in self.rows):
            return 1
        return 0
