"""Electricity generation mix: primary energy, weighted factors and emissions.

Energies are MWh/y, emission factors tCO2 per MWh produced. Everything is
kept in double precision; rounding is left to the emitters.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .errors import ValidationError


@dataclass(frozen=True)
class EnergySource:
    name: str
    energy: float
    primary_factor: float
    emission_factor: float

    def __post_init__(self) -> None:
        if not self.name:
            raise ValidationError("source name must be non-empty")
        if not self.energy >= 0:
            raise ValidationError(f"source {self.name!r}: energy must be >= 0, got {self.energy}")
        if not self.primary_factor > 0:
            raise ValidationError(
                f"source {self.name!r}: primary_factor must be > 0, got {self.primary_factor}"
            )
        if not self.emission_factor >= 0:
            raise ValidationError(
                f"source {self.name!r}: emission_factor must be >= 0, got {self.emission_factor}"
            )

    @property
    def primary_energy(self) -> float:
        return self.energy * self.primary_factor

    @property
    def emissions(self) -> float:
        return self.energy * self.emission_factor


@dataclass(frozen=True)
class GenerationMix:
    year: int | str
    sources: tuple[EnergySource, ...]

    def __init__(self, year: int | str, sources: Iterable[EnergySource]) -> None:
        object.__setattr__(self, "year", year)
        object.__setattr__(self, "sources", tuple(sources))
        if not self.sources:
            raise ValidationError(f"generation mix {year!r} has no sources")
        seen: set[str] = set()
        for s in self.sources:
            if s.name in seen:
                raise ValidationError(f"generation mix {year!r}: duplicate source name {s.name!r}")
            seen.add(s.name)

    @property
    def total_energy(self) -> float:
        return math.fsum(s.energy for s in self.sources)

    def concat(self, other: GenerationMix) -> GenerationMix:
        return GenerationMix(self.year, self.sources + other.sources)

    def scaled(self, k: float) -> GenerationMix:
        return GenerationMix(
            self.year,
            (EnergySource(s.name, s.energy * k, s.primary_factor, s.emission_factor) for s in self.sources),
        )


@dataclass(frozen=True)
class SourceRow:
    name: str
    energy: float
    share_pct: float
    primary_factor: float
    primary_energy: float
    emission_factor: float
    emissions: float


@dataclass(frozen=True)
class MixReport:
    year: int | str
    rows: tuple[SourceRow, ...]
    total_energy: float
    total_primary: float
    weighted_primary_factor: float
    total_emissions: float
    grid_emission_factor: float


def _positive_total(mix: GenerationMix) -> float:
    total = mix.total_energy
    if total <= 0:
        raise ValidationError(f"generation mix {mix.year!r} has zero total energy")
    return total


def primary_energy(mix: GenerationMix) -> tuple[float, dict[str, float]]:
    """Return total primary energy (MWh) and the per-source breakdown.

    Each source contributes ``energy * primary_factor``.
    """
    rows = {s.name: s.primary_energy for s in mix.sources}
    return math.fsum(rows.values()), rows


def weighted_primary_factor(mix: GenerationMix) -> float:
    total = _positive_total(mix)
    return primary_energy(mix)[0] / total


def mix_emissions(mix: GenerationMix) -> tuple[float, dict[str, float]]:
    rows = {s.name: s.emissions for s in mix.sources}
    return math.fsum(rows.values()), rows


def grid_emission_factor(mix: GenerationMix) -> float:
    """Generation-weighted mean emission factor, tCO2/MWh."""
    total = _positive_total(mix)
    return mix_emissions(mix)[0] / total


def mix_report(mix: GenerationMix) -> MixReport:
    total = _positive_total(mix)
    pe, _ = primary_energy(mix)
    co2, _ = mix_emissions(mix)
    rows = tuple(
        SourceRow(
            name=s.name,
            energy=s.energy,
            share_pct=100.0 * s.energy / total,
            primary_factor=s.primary_factor,
            primary_energy=s.primary_energy,
            emission_factor=s.emission_factor,
            emissions=s.emissions,
        )
        for s in mix.sources
    )
    return MixReport(
        year=mix.year,
        rows=rows,
        total_energy=total,
        total_primary=pe,
        weighted_primary_factor=pe / total,
        total_emissions=co2,
        grid_emission_factor=co2 / total,
    )
