"""Pydantic models used across the project."""

from __future__ import annotations

from sommerflux.models.energy import EnergyShift
from sommerflux.models.flux import FluxValue
from sommerflux.models.geometry import OrbitGeometry
from sommerflux.models.quantum import QuantumNumbers
from sommerflux.models.report import Comparison, Diagnostic, Report, ReportRow
from sommerflux.models.species import ExperimentalValue, NuclearSpecies

__all__ = [
    "Comparison",
    "Diagnostic",
    "EnergyShift",
    "ExperimentalValue",
    "FluxValue",
    "NuclearSpecies",
    "OrbitGeometry",
    "QuantumNumbers",
    "Report",
    "ReportRow",
]
