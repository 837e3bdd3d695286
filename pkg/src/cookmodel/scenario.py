"""Scenario assembly and evaluation: national totals, household costs, comparisons."""
from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from typing import Iterable, Mapping

from . import appliance as ap
from .appliance import ApplianceProfile, FuelSpec
from .errors import ValidationError
from .mix import GenerationMix, grid_emission_factor, weighted_primary_factor
from .tariff import (
    CostBreakdown,
    FuelPricing,
    TariffSchedule,
    electricity_breakdown,
    fuel_breakdown,
)

KWH_PER_GWH = 1e6
USD_PER_MUSD = 1e6


@dataclass(frozen=True)
class Demographics:
    population: float
    households: int
    avg_household_size: float | None = None
    minimum_wage: float | None = None  # US$/y
    basic_basket: float | None = None  # US$/y

    def __post_init__(self) -> None:
        if not self.population > 0:
            raise ValidationError(f"population must be > 0, got {self.population}")
        if not self.households > 0:
            raise ValidationError(f"households must be > 0, got {self.households}")
        if self.avg_household_size is not None and not self.avg_household_size > 0:
            raise ValidationError(f"avg_household_size must be > 0, got {self.avg_household_size}")


def scenario_problems(
    fuels: Iterable[FuelSpec],
    fuel_pricing: Mapping[str, FuelPricing],
    appliances: Iterable[ApplianceProfile],
    demographics: Demographics,
) -> list[str]:
    """Cross-object consistency problems; empty when the scenario is coherent."""
    problems = []
    fuel_names = [f.name for f in fuels]
    for name in sorted({n for n in fuel_names if fuel_names.count(n) > 1}):
        problems.append(f"fuel {name!r} is defined more than once")
    names = [a.name for a in appliances]
    for name in sorted({n for n in names if names.count(n) > 1}):
        problems.append(f"appliance {name!r} is defined more than once")
    for a in appliances:
        fuel = a.fuel_name
        if fuel is None:
            continue
        if fuel not in fuel_names:
            problems.append(f"appliance {a.name!r} references unknown fuel {fuel!r}")
        elif fuel not in fuel_pricing:
            problems.append(f"fuel {fuel!r} used by appliance {a.name!r} has no pricing")
    count_sum = sum(a.count for a in appliances)
    if count_sum != demographics.households:
        problems.append(
            f"appliance counts sum to {count_sum} but households = {demographics.households}"
        )
    return problems


@dataclass(frozen=True)
class Scenario:
    name: str
    year: int | str
    mix: GenerationMix
    fuels: tuple[FuelSpec, ...]
    fuel_pricing: Mapping[str, FuelPricing]
    tariff: TariffSchedule
    appliances: tuple[ApplianceProfile, ...]
    demographics: Demographics

    def __post_init__(self) -> None:
        object.__setattr__(self, "fuels", tuple(self.fuels))
        object.__setattr__(self, "appliances", tuple(self.appliances))
        object.__setattr__(self, "fuel_pricing", dict(self.fuel_pricing))
        problems = scenario_problems(self.fuels, self.fuel_pricing, self.appliances, self.demographics)
        if problems:
            raise ValidationError(f"scenario {self.name!r}: " + "; ".join(problems))

    def fuel(self, name: str) -> FuelSpec:
        for f in self.fuels:
            if f.name == name:
                return f
        raise ValidationError(f"scenario {self.name!r} has no fuel {name!r}")

    def appliance(self, name: str) -> ApplianceProfile:
        for a in self.appliances:
            if a.name == name:
                return a
        known = ", ".join(a.name for a in self.appliances)
        raise ValidationError(f"scenario {self.name!r} has no appliance {name!r} (known: {known})")


@dataclass(frozen=True)
class HouseholdReport:
    """One household's year with one technology."""
    appliance: str
    monthly_final_kwh: float
    annual_final_kwh: float
    monthly_primary_kwh: float
    annual_primary_kwh: float
    emissions_tco2: float
    cost: CostBreakdown
    cylinders_per_year: float | None = None


@dataclass(frozen=True)
class NationalRow:
    name: str
    count: int
    monthly_final_gwh: float
    annual_final_gwh: float
    primary_gwh: float
    total_cost_musd: float
    user_cost_musd: float
    subsidy_musd: float
    emissions_tco2: float


@dataclass(frozen=True)
class NationalReport:
    scenario: str
    year: int | str
    rows: tuple[NationalRow, ...]
    totals: NationalRow

    def row(self, name: str) -> NationalRow:
        for r in self.rows:
            if r.name == name:
                return r
        raise KeyError(name)


def _carrier_factors(scenario: Scenario, profile: ApplianceProfile) -> tuple[float, float]:
    """(primary factor, emission factor on final energy) for the profile's carrier."""
    if profile.is_electric:
        return weighted_primary_factor(scenario.mix), grid_emission_factor(scenario.mix)
    fuel = scenario.fuel(profile.fuel_name)
    return fuel.primary_factor, fuel.emission_factor_final


def _household(scenario: Scenario, profile: ApplianceProfile) -> HouseholdReport:
    primary_factor, ef = _carrier_factors(scenario, profile)
    monthly_pe, annual_pe = ap.household_primary_energy(profile, primary_factor)
    cylinders = None
    if profile.is_electric:
        cost = electricity_breakdown(profile.monthly_final_energy, scenario.tariff)
    else:
        fuel = scenario.fuel(profile.fuel_name)
        cylinders = ap.appliance_cylinders_per_year(profile, fuel)
        cost = fuel_breakdown(cylinders, scenario.fuel_pricing[fuel.name])
    return HouseholdReport(
        appliance=profile.name,
        monthly_final_kwh=profile.monthly_final_energy,
        annual_final_kwh=ap.annual_final_energy(profile),
        monthly_primary_kwh=monthly_pe,
        annual_primary_kwh=annual_pe,
        emissions_tco2=ap.household_emissions(profile, ef),
        cost=cost,
        cylinders_per_year=cylinders,
    )


def household_report(scenario: Scenario, appliance_name: str) -> HouseholdReport:
    return _household(scenario, scenario.appliance(appliance_name))


def _national_row(profile: ApplianceProfile, hh: HouseholdReport) -> NationalRow:
    n = profile.count
    annual = n * hh.annual_final_kwh / KWH_PER_GWH
    return NationalRow(
        name=profile.name,
        count=n,
        monthly_final_gwh=annual / 12,
        annual_final_gwh=annual,
        primary_gwh=n * hh.annual_primary_kwh / KWH_PER_GWH,
        total_cost_musd=n * hh.cost.total / USD_PER_MUSD,
        user_cost_musd=n * hh.cost.user / USD_PER_MUSD,
        subsidy_musd=n * hh.cost.subsidy / USD_PER_MUSD,
        emissions_tco2=n * hh.emissions_tco2,
    )


def _sum_rows(name: str, rows: Iterable[NationalRow]) -> NationalRow:
    rows = tuple(rows)

    def total(attr: str) -> float:
        return math.fsum(map(operator.attrgetter(attr), rows))

    return NationalRow(
        name=name,
        count=sum(r.count for r in rows),
        monthly_final_gwh=total("monthly_final_gwh"),
        annual_final_gwh=total("annual_final_gwh"),
        primary_gwh=total("primary_gwh"),
        total_cost_musd=total("total_cost_musd"),
        user_cost_musd=total("user_cost_musd"),
        subsidy_musd=total("subsidy_musd"),
        emissions_tco2=total("emissions_tco2"),
    )


def evaluate(scenario: Scenario) -> NationalReport:
    """National cooking energy, cost, subsidy and CO2 for every technology."""
    rows = tuple(_national_row(p, _household(scenario, p)) for p in scenario.appliances)
    return NationalReport(
        scenario=scenario.name,
        year=scenario.year,
        rows=rows,
        totals=_sum_rows("total", rows),
    )


# (field on NationalRow, metric name used in reports)
COMPARED_METRICS = (
    ("annual_final_gwh", "final_energy_gwh"),
    ("primary_gwh", "primary_energy_gwh"),
    ("total_cost_musd", "total_cost_musd"),
    ("subsidy_musd", "subsidy_musd"),
    ("emissions_tco2", "emissions_tco2"),
)


@dataclass(frozen=True)
class MetricDelta:
    metric: str
    reference: float
    alternative: float

    @property
    def delta(self) -> float:
        return self.alternative - self.reference

    @property
    def ratio(self) -> float | None:
        """alternative / reference; 1 when both are zero, None when only the reference is."""
        if self.reference == 0:
            return 1.0 if self.alternative == 0 else None
        return self.alternative / self.reference


@dataclass(frozen=True)
class ComparisonReport:
    reference: str
    alternative: str
    metrics: tuple[MetricDelta, ...]

    def metric(self, name: str) -> MetricDelta:
        for m in self.metrics:
            if m.metric == name:
                return m
        raise KeyError(name)

    @property
    def subsidy_savings_musd(self) -> float:
        m = self.metric("subsidy_musd")
        return m.reference - m.alternative

    @property
    def emission_reduction_tco2(self) -> float:
        m = self.metric("emissions_tco2")
        return m.reference - m.alternative


def compare_reports(reference: NationalReport, alternative: NationalReport) -> ComparisonReport:
    metrics = tuple(
        MetricDelta(name, getattr(reference.totals, attr), getattr(alternative.totals, attr))
        for attr, name in COMPARED_METRICS
    )
    return ComparisonReport(reference.scenario, alternative.scenario, metrics)


def compare(reference: Scenario, alternative: Scenario) -> ComparisonReport:
    """Report ``alternative`` relative to ``reference``.

    Deltas are alternative minus reference; the headline savings and
    reductions are reference minus alternative, so they are positive when the
    alternative spends or emits less.
    """
    return compare_reports(evaluate(reference), evaluate(alternative))


@dataclass(frozen=True)
class Affordability:
    pct_of_basket: float
    pct_of_wage: float


def affordability(annual_user_cost: float, demographics: Demographics) -> Affordability:
    wage, basket = demographics.minimum_wage, demographics.basic_basket
    if wage is None or not wage > 0:
        raise ValidationError(f"minimum wage must be > 0, got {wage}")
    if basket is None or not basket > 0:
        raise ValidationError(f"basic basket cost must be > 0, got {basket}")
    return Affordability(
        pct_of_basket=100.0 * annual_user_cost / basket,
        pct_of_wage=100.0 * annual_user_cost / wage,
    )


def per_capita_subsidy(report: NationalReport, demographics: Demographics) -> float:
    """Subsidy in US$ per person per year."""
    if not demographics.population > 0:
        raise ValidationError("population must be > 0")
    return report.totals.subsidy_musd * USD_PER_MUSD / demographics.population


@dataclass(frozen=True)
class AffordabilityRow:
    appliance: str
    user_cost_usd: float
    pct_of_basket: float
    pct_of_wage: float


@dataclass(frozen=True)
class AffordabilityReport:
    scenario: str
    year: int | str
    rows: tuple[AffordabilityRow, ...]
    per_capita_subsidy_usd: float


def affordability_report(scenario: Scenario) -> AffordabilityReport:
    rows = []
    for p in scenario.appliances:
        user = _household(scenario, p).cost.user
        a = affordability(user, scenario.demographics)
        rows.append(AffordabilityRow(p.name, user, a.pct_of_basket, a.pct_of_wage))
    return AffordabilityReport(
        scenario=scenario.name,
        year=scenario.year,
        rows=tuple(rows),
        per_capita_subsidy_usd=per_capita_subsidy(evaluate(scenario), scenario.demographics),
    )


def project_compound(base: float, annual_rate: float, years: int) -> float:
    """Compound ``base`` forward by ``years`` at ``annual_rate`` (a fraction)."""
    if years < 0:
        raise ValidationError(f"years must be >= 0, got {years}")
    if annual_rate <= -1:
        raise ValidationError(f"annual rate must be > -1, got {annual_rate}")
    return base * (1.0 + annual_rate) ** years
