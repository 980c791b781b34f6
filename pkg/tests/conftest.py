"""Shared fixtures."""

from __future__ import annotations

import pytest

from sommerflux.config import Settings
from sommerflux.constants import PhysicalConstants, default_constants
from sommerflux.registry import DataRegistry


@pytest.fixture
def consts() -> PhysicalConstants:
    return default_constants()


@pytest.fixture
def registry(consts: PhysicalConstants) -> DataRegistry:
    return DataRegistry.default(consts)


@pytest.fixture
def settings(monkeypatch: pytest.MonkeyPatch, tmp_path) -> Settings:
    # isolate from a developer .env or SOMMERFLUX_* variables
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv("SOMMERFLUX_ENV_FILE", raising=False)
    return Settings(dipole_samples=5)
