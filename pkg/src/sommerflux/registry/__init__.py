"""Reference data registry."""

from __future__ import annotations

from sommerflux.registry.data_registry import (
    DataRegistry,
    RegistryLookupError,
    RegistryParseError,
)

__all__ = ["DataRegistry", "RegistryLookupError", "RegistryParseError"]
