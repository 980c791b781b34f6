"""Nuclear species and experimental reference values.

Data files are UTF-8 comma-separated records with ``#`` comments:

* species: ``name,Z,A_mass,I,g_I``
* experimental values: ``key,value,unit,source``

Packaged defaults live in :mod:`sommerflux.data`; user files extend or replace entries by name.
"""

from __future__ import annotations

import csv
from collections.abc import Iterator
from importlib import resources
from pathlib import Path

from pydantic import ValidationError

from sommerflux.constants import PhysicalConstants
from sommerflux.errors import SommerfluxError
from sommerflux.logging import get_logger
from sommerflux.models.species import ExperimentalValue, NuclearSpecies

logger = get_logger(__name__)

SPECIES_FIELDS = ("name", "Z", "A_mass", "I", "g_I")
EXPERIMENTAL_FIELDS = ("key", "value", "unit", "source")

_DATA_PACKAGE = "sommerflux.data"


class RegistryParseError(SommerfluxError):
    pass


class RegistryLookupError(SommerfluxError, LookupError):
    pass


def _records(
    text: str, origin: str, fields: tuple[str, ...]
) -> Iterator[tuple[int, dict[str, str]]]:
    """Yield ``(line_number, record)`` for every data line of ``text``."""

    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        row = next(csv.reader([stripped], skipinitialspace=True))
        values = [value.strip() for value in row]
        if len(values) != len(fields):
            raise RegistryParseError(
                f"{origin}:{lineno}: expected {len(fields)} fields ({','.join(fields)}), "
                f"got {len(values)}"
            )
        missing = [name for name, value in zip(fields, values, strict=True) if not value]
        # the free-text source note may be empty
        missing = [name for name in missing if name != "source"]
        if missing:
            raise RegistryParseError(
                f"{origin}:{lineno}: missing required field(s) {', '.join(missing)}"
            )
        yield lineno, dict(zip(fields, values, strict=True))


def _validation_message(exc: ValidationError) -> str:
    return "; ".join(f"{'.'.join(map(str, e['loc']))}: {e['msg']}" for e in exc.errors())


def parse_species(text: str, origin: str, consts: PhysicalConstants) -> list[NuclearSpecies]:
    """Parse a species file body.

    Raises:
        RegistryParseError: Malformed row, invalid value or duplicate name (with location).
    """

    out: list[NuclearSpecies] = []
    seen: dict[str, int] = {}
    for lineno, record in _records(text, origin, SPECIES_FIELDS):
        name = record["name"]
        if name in seen:
            raise RegistryParseError(
                f"{origin}:{lineno}: duplicate species name {name!r} (first on line {seen[name]})"
            )
        try:
            species = NuclearSpecies(
                name=name,
                Z=record["Z"],
                A_mass=record["A_mass"],
                I=record["I"],
                g_I=record["g_I"],
                mu_K=consts.mu_K,
            )
        except ValidationError as exc:
            raise RegistryParseError(f"{origin}:{lineno}: {_validation_message(exc)}") from exc
        seen[name] = lineno
        out.append(species)
    return out


def parse_experimental(text: str, origin: str) -> list[ExperimentalValue]:
    """Parse an experimental-values file body."""

    out: list[ExperimentalValue] = []
    seen: dict[str, int] = {}
    for lineno, record in _records(text, origin, EXPERIMENTAL_FIELDS):
        key = record["key"]
        if key in seen:
            raise RegistryParseError(
                f"{origin}:{lineno}: duplicate key {key!r} (first on line {seen[key]})"
            )
        try:
            value = ExperimentalValue(
                observable=key, value=record["value"], unit=record["unit"], source=record["source"]
            )
        except ValidationError as exc:
            raise RegistryParseError(f"{origin}:{lineno}: {_validation_message(exc)}") from exc
        seen[key] = lineno
        out.append(value)
    return out


def _read(path: Path) -> str:
    if not path.is_file():
        raise RegistryParseError(f"data file not found: {path}")
    return path.read_text(encoding="utf-8")


class DataRegistry:
    """In-memory registry of nuclear species and experimental values.

    Treated as immutable once the CLI has finished loading files.
    """

    def __init__(self, consts: PhysicalConstants) -> None:
        self._consts = consts
        self._species: dict[str, NuclearSpecies] = {}
        self._experimental: dict[str, ExperimentalValue] = {}

    @classmethod
    def default(cls, consts: PhysicalConstants) -> DataRegistry:
        """Registry populated from the packaged data files."""

        registry = cls(consts)
        data = resources.files(_DATA_PACKAGE)
        for item in parse_species(
            data.joinpath("species.csv").read_text(encoding="utf-8"), "species.csv", consts
        ):
            registry._species[item.name] = item
        for value in parse_experimental(
            data.joinpath("experimental.csv").read_text(encoding="utf-8"), "experimental.csv"
        ):
            registry._experimental[value.observable] = value
        logger.debug(
            "Loaded %d packaged species and %d experimental values",
            len(registry._species),
            len(registry._experimental),
        )
        return registry

    def load_species(self, path: Path) -> list[NuclearSpecies]:
        """Load a species file, replacing entries with the same name.

        Args:
            path: Species file.

        Returns:
            The species read from ``path``, in file order.
        """

        loaded = parse_species(_read(path), str(path), self._consts)
        for item in loaded:
            if item.name in self._species:
                logger.info("Species %s from %s replaces the previous entry", item.name, path)
            self._species[item.name] = item
        logger.info("Loaded %d species from %s", len(loaded), path)
        return loaded

    def load_experimental(self, path: Path) -> list[ExperimentalValue]:
        """Load an experimental-values file, replacing entries with the same key."""

        loaded = parse_experimental(_read(path), str(path))
        for value in loaded:
            self._experimental[value.observable] = value
        logger.info("Loaded %d experimental values from %s", len(loaded), path)
        return loaded

    def species(self, name: str) -> NuclearSpecies:
        """Get a species by name."""

        try:
            return self._species[name]
        except KeyError:
            known = ", ".join(sorted(self._species))
            raise RegistryLookupError(f"unknown species {name!r} (known: {known})") from None

    def lookup_experimental(self, key: str) -> ExperimentalValue:
        """Get an experimental value by key."""

        try:
            return self._experimental[key]
        except KeyError:
            raise RegistryLookupError(f"unknown experimental value {key!r}") from None

    def find_experimental(self, key: str) -> ExperimentalValue | None:
        """Like :meth:`lookup_experimental` but ``None`` when absent."""

        return self._experimental.get(key)
