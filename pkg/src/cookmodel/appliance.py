"""Per-household cooking technology: final/primary energy, CO2, fuel cylinders."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import ValidationError

ELECTRICITY = "electricity"
FUEL_PREFIX = "fuel:"

KWH_PER_MWH = 1000.0


@dataclass(frozen=True)
class ApplianceProfile:
    """One cooking technology and the number of households that use it.

    ``carrier`` is either ``"electricity"`` or ``"fuel:<fuel name>"``.
    ``monthly_final_energy`` is kWh/month per household.
    """
    name: str
    carrier: str
    monthly_final_energy: float
    count: int

    def __post_init__(self) -> None:
        if not self.name:
            raise ValidationError("appliance name must be non-empty")
        if self.carrier != ELECTRICITY and not (
            self.carrier.startswith(FUEL_PREFIX) and len(self.carrier) > len(FUEL_PREFIX)
        ):
            raise ValidationError(
                f"appliance {self.name!r}: carrier must be 'electricity' or 'fuel:<name>', "
                f"got {self.carrier!r}"
            )
        if not self.monthly_final_energy >= 0:
            raise ValidationError(
                f"appliance {self.name!r}: monthly_final_energy must be >= 0, "
                f"got {self.monthly_final_energy}"
            )
        if isinstance(self.count, bool) or not isinstance(self.count, int) or self.count < 0:
            raise ValidationError(
                f"appliance {self.name!r}: count must be a non-negative integer, got {self.count!r}"
            )

    @property
    def is_electric(self) -> bool:
        return self.carrier == ELECTRICITY

    @property
    def fuel_name(self) -> str | None:
        if self.is_electric:
            return None
        return self.carrier[len(FUEL_PREFIX):]


@dataclass(frozen=True)
class FuelSpec:
    """A bottled cooking fuel.

    ``emission_factor_final`` is tCO2 per MWh of *final* energy.
    ``monthly_mass_per_household`` is the kg/month a household burns when it
    consumes ``energy_basis_kwh`` of final energy per month. Without a basis the
    mass is taken as fixed per household regardless of appliance consumption.
    """
    name: str
    primary_factor: float
    emission_factor_final: float
    cylinder_mass: float
    monthly_mass_per_household: float
    energy_basis_kwh: float | None = None

    def __post_init__(self) -> None:
        for field_name in ("primary_factor", "emission_factor_final", "cylinder_mass",
                           "monthly_mass_per_household"):
            value = getattr(self, field_name)
            if not value > 0:
                raise ValidationError(f"fuel {self.name!r}: {field_name} must be > 0, got {value}")
        if self.energy_basis_kwh is not None and not self.energy_basis_kwh > 0:
            raise ValidationError(
                f"fuel {self.name!r}: energy_basis_kwh must be > 0, got {self.energy_basis_kwh}"
            )


def annual_final_energy(profile: ApplianceProfile) -> float:
    """kWh/y per household."""
    return profile.monthly_final_energy * 12


def household_primary_energy(profile: ApplianceProfile, carrier_factor: float) -> tuple[float, float]:
    """Return (monthly, annual) primary energy in kWh for one household."""
    if not carrier_factor > 0:
        raise ValidationError(f"carrier factor must be > 0, got {carrier_factor}")
    monthly = profile.monthly_final_energy * carrier_factor
    return monthly, monthly * 12


def household_emissions(profile: ApplianceProfile, ef: float) -> float:
    """tCO2/y for one household; ``ef`` applies to final energy in MWh."""
    if not ef >= 0:
        raise ValidationError(f"emission factor must be >= 0, got {ef}")
    return annual_final_energy(profile) / KWH_PER_MWH * ef


def cylinders_per_year(fuel: FuelSpec) -> float:
    if fuel.cylinder_mass <= 0:
        raise ValidationError(f"fuel {fuel.name!r}: cylinder mass must be > 0")
    return fuel.monthly_mass_per_household / fuel.cylinder_mass * 12


def appliance_cylinders_per_year(profile: ApplianceProfile, fuel: FuelSpec) -> float:
    """Cylinders/y for a household running ``profile`` on ``fuel``."""
    base = cylinders_per_year(fuel)
    if fuel.energy_basis_kwh is None:
        return base
    return base * (profile.monthly_final_energy / fuel.energy_basis_kwh)
