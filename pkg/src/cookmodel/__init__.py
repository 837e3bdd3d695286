"""Energy, CO2 and subsidy consequences of moving household cooking between fuels."""
from .appliance import ApplianceProfile, FuelSpec
from .builder import build_scenario, load, load_text
from .diagnostics import Diagnostic, DiagnosticError
from .emit import emit
from .errors import ValidationError
from .mix import EnergySource, GenerationMix, mix_report
from .parser import ScenarioDocument, dump, parse
from .scenario import (
    Demographics,
    Scenario,
    affordability,
    compare,
    evaluate,
    household_report,
    per_capita_subsidy,
    project_compound,
)
from .tariff import Block, CostBreakdown, FuelPricing, TariffSchedule

__all__ = [
    "ApplianceProfile", "Block", "CostBreakdown", "Demographics", "Diagnostic",
    "DiagnosticError", "EnergySource", "FuelPricing", "FuelSpec", "GenerationMix",
    "Scenario", "ScenarioDocument", "TariffSchedule", "ValidationError",
    "affordability", "build_scenario", "compare", "dump", "emit", "evaluate",
    "household_report", "load", "load_text", "mix_report", "parse",
    "per_capita_subsidy", "project_compound",
]
