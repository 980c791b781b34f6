"""Numerical oracles that witness the model's closed forms."""

from __future__ import annotations

from sommerflux.verification.suites import SUITES, VerificationRunner

__all__ = ["SUITES", "VerificationRunner"]
