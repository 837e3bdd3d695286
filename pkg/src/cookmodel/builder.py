"""Semantic validation: turn a parsed document into a Scenario.

Every problem is collected before giving up, so one run of ``validate``
reports everything wrong with a file.
"""
from __future__ import annotations

import math
from pathlib import Path

from . import diagnostics as dg
from .appliance import ApplianceProfile, FuelSpec
from .diagnostics import Diagnostic, DiagnosticError, Position
from .errors import ValidationError
from .mix import EnergySource, GenerationMix
from .parser import ListValue, Number, Pair, ScenarioDocument, Section, String, parse
from .scenario import Demographics, Scenario
from .tariff import Block, FuelPricing, TariffSchedule

# section -> {key: kind}; kinds: "number", "integer", "string", "block"
FIELDS: dict[str, dict[str, str]] = {
    "scenario": {"name": "string", "year": "integer"},
    "source": {
        "name": "string",
        "energy_mwh": "number",
        "primary_factor": "number",
        "emission_factor": "number",
    },
    "fuel": {
        "name": "string",
        "primary_factor": "number",
        "emission_factor": "number",
        "cylinder_kg": "number",
        "monthly_kg_per_household": "number",
        "monthly_kwh_basis": "number",
        "user_price_per_cylinder": "number",
        "full_cost_per_cylinder": "number",
    },
    "tariff": {"production_cost_per_kwh": "number", "block": "block"},
    "appliance": {
        "name": "string",
        "carrier": "string",
        "monthly_final_kwh": "number",
        "count": "integer",
    },
    "demographics": {
        "population": "number",
        "households": "integer",
        "avg_household_size": "number",
        "minimum_wage": "number",
        "basic_basket": "number",
    },
}

OPTIONAL = {
    "scenario": {"name", "year"},
    "fuel": {"monthly_kwh_basis", "user_price_per_cylinder", "full_cost_per_cylinder"},
    "demographics": {"avg_household_size", "minimum_wage", "basic_basket"},
}

_KIND_NAMES = {"number": "number", "integer": "integer", "string": "quoted string"}


class _Section:
    """Typed accessor over one section that records diagnostics as it goes."""

    def __init__(self, section: Section, diags: list[Diagnostic]) -> None:
        self.section = section
        self.diags = diags
        self.ok = True
        fields = FIELDS[section.name]
        for p in section.pairs:
            if p.key not in fields:
                diags.append(dg.warning(
                    dg.UNKNOWN_KEY, f"unknown key {p.key!r} in [{section.name}] ignored", p.position,
                ))
        optional = OPTIONAL.get(section.name, set())
        for key, kind in fields.items():
            if kind != "block" and key not in optional and section.get(key) is None:
                self.fail(dg.MISSING_KEY, f"[{section.name}] is missing required key {key!r}",
                          section.position)

    def fail(self, code: str, message: str, position: Position, hint: str | None = None) -> None:
        self.diags.append(dg.error(code, message, position, hint))
        self.ok = False

    def __getitem__(self, key: str):
        pair = self.section.get(key)
        if pair is None:
            return None
        return self._convert(pair, FIELDS[self.section.name][key])

    def pair(self, key: str) -> Pair | None:
        return self.section.get(key)

    def _convert(self, pair: Pair, kind: str):
        v = pair.value
        pos = v.position
        if kind == "string":
            if isinstance(v, String):
                return v.value
            self.fail(dg.EXPECTED_STRING, f"{pair.key}: expected quoted string", pos)
            return None
        if not isinstance(v, Number):
            self.fail(dg.EXPECTED_NUMBER, f"{pair.key}: expected number", pos)
            return None
        if v.text == "inf":
            self.fail(dg.EXPECTED_NUMBER, f"{pair.key}: expected finite number", pos)
            return None
        if kind == "integer":
            if not v.is_integer:
                self.fail(dg.EXPECTED_NUMBER, f"{pair.key}: expected integer", pos)
                return None
            return int(v.text)
        return v.value

    def blocks(self) -> list[tuple[Block, Position]]:
        out = []
        for pair in self.section.get_all("block"):
            v = pair.value
            if not (isinstance(v, ListValue) and len(v.items) == 2
                    and all(isinstance(x, Number) for x in v.items)):
                self.fail(dg.EXPECTED_NUMBER, "block: expected '<upper bound|inf>, <rate>'",
                          v.position)
                continue
            bound, rate = v.items
            if rate.text == "inf":
                self.fail(dg.EXPECTED_NUMBER, "block: rate must be a finite number", rate.position)
                continue
            out.append((Block(bound.value, rate.value), pair.position))
        return out


def _domain(view: _Section, build):
    """Construct a domain object from the section's converted values.

    Type errors are recorded while converting, before ``build`` runs; domain
    invariant violations raised by ``build`` become diagnostics too.
    """
    values = {key: view[key] for key in FIELDS[view.section.name] if key != "block"}
    if not view.ok:
        return None
    try:
        return build(values)
    except ValidationError as e:
        view.fail(dg.INVALID_VALUE, str(e), view.section.position)
        return None


def _check_blocks(view: _Section, blocks: list[tuple[Block, Position]]) -> None:
    if not blocks:
        view.fail(dg.TARIFF_BLOCKS, "[tariff] needs at least one 'block = <bound|inf>, <rate>'",
                  view.section.position)
        return
    for i, (b, pos) in enumerate(blocks):
        last = i == len(blocks) - 1
        if i and not b.upper_bound > blocks[i - 1][0].upper_bound:
            view.fail(dg.TARIFF_BLOCKS, "blocks must be strictly increasing", pos)
        elif last and b.upper_bound != math.inf:
            view.fail(dg.TARIFF_BLOCKS, "the last block must be unbounded (inf)", pos)
        elif not last and b.upper_bound == math.inf:
            view.fail(dg.TARIFF_BLOCKS, "only the last block may be unbounded", pos)


def build_scenario(doc: ScenarioDocument, default_name: str = "scenario") -> tuple[Scenario, list[Diagnostic]]:
    """Validate ``doc`` and build the Scenario.

    Returns the scenario with any warnings; raises DiagnosticError listing
    every error (plus warnings) otherwise.
    """
    diags: list[Diagnostic] = []
    start = Position(1, 1)

    for name in ("source", "appliance", "tariff", "demographics"):
        if doc.section(name) is None:
            form = f"[{name}]" if name in ("tariff", "demographics") else f"[[{name}]]"
            diags.append(dg.error(dg.MISSING_SECTION, f"missing {form} section", start))

    scenario_name, year = default_name, None
    if (s := doc.section("scenario")) is not None:
        view = _Section(s, diags)
        scenario_name = view["name"] or default_name
        year = view["year"]

    sources = []
    for s in doc.sections_named("source"):
        view = _Section(s, diags)
        src = _domain(view, lambda v: EnergySource(
            v["name"], v["energy_mwh"], v["primary_factor"], v["emission_factor"],
        ))
        if src is not None and any(o is not None and o.name == src.name for o in sources):
            view.fail(dg.INVALID_VALUE, f"duplicate source name {src.name!r}",
                      s.get("name").value.position)
            src = None
        sources.append(src)
    mix = None
    if sources and all(src is not None for src in sources):
        mix = GenerationMix(year if year is not None else scenario_name, sources)
        if mix.total_energy <= 0:
            diags.append(dg.error(dg.INVALID_VALUE, "generation mix has zero total energy",
                                  doc.section("source").position))

    fuels, pricing = [], {}
    for s in doc.sections_named("fuel"):
        view = _Section(s, diags)
        fuel = _domain(view, lambda v: FuelSpec(
            name=v["name"],
            primary_factor=v["primary_factor"],
            emission_factor_final=v["emission_factor"],
            cylinder_mass=v["cylinder_kg"],
            monthly_mass_per_household=v["monthly_kg_per_household"],
            energy_basis_kwh=v["monthly_kwh_basis"],
        ))
        if fuel is None:
            continue
        if any(f.name == fuel.name for f in fuels):
            view.fail(dg.INVALID_VALUE, f"fuel {fuel.name!r} is defined more than once",
                      s.get("name").value.position)
            continue
        fuels.append(fuel)
        user, full = view["user_price_per_cylinder"], view["full_cost_per_cylinder"]
        if (user is None) != (full is None):
            view.fail(dg.MISSING_KEY,
                      f"fuel {fuel.name!r}: give both user_price_per_cylinder and full_cost_per_cylinder",
                      s.position)
        elif user is not None:
            p = _domain(view, lambda v: FuelPricing(user, full))
            if p is not None:
                pricing[fuel.name] = p

    tariff = None
    if (s := doc.section("tariff")) is not None:
        view = _Section(s, diags)
        blocks = view.blocks()
        _check_blocks(view, blocks)
        tariff = _domain(view, lambda v: TariffSchedule([b for b, _ in blocks],
                                                         v["production_cost_per_kwh"]))

    appliances = []
    appliance_sections = doc.sections_named("appliance")
    for s in appliance_sections:
        view = _Section(s, diags)
        a = _domain(view, lambda v: ApplianceProfile(
            v["name"], v["carrier"], v["monthly_final_kwh"], v["count"],
        ))
        if a is None:
            appliances.append(None)
            continue
        if a.fuel_name is not None:
            carrier_pos = s.get("carrier").value.position
            if not any(f.name == a.fuel_name for f in fuels):
                diags.append(dg.error(dg.UNKNOWN_FUEL,
                                      f"appliance {a.name!r} references unknown fuel {a.fuel_name!r}",
                                      carrier_pos))
            elif a.fuel_name not in pricing:
                diags.append(dg.error(dg.UNKNOWN_FUEL,
                                      f"fuel {a.fuel_name!r} used by appliance {a.name!r} has no pricing",
                                      carrier_pos, hint="add user_price_per_cylinder and full_cost_per_cylinder"))
        if any(b is not None and b.name == a.name for b in appliances):
            diags.append(dg.error(dg.INVALID_VALUE, f"appliance {a.name!r} is defined more than once",
                                  s.get("name").value.position))
        appliances.append(a)

    demographics = None
    if (s := doc.section("demographics")) is not None:
        view = _Section(s, diags)
        demographics = _domain(view, lambda v: Demographics(
            population=v["population"],
            households=v["households"],
            avg_household_size=v["avg_household_size"],
            minimum_wage=v["minimum_wage"],
            basic_basket=v["basic_basket"],
        ))
        counts_known = appliances and all(a is not None for a in appliances)
        if demographics is not None and counts_known:
            total = sum(a.count for a in appliances)
            if total != demographics.households:
                diags.append(dg.error(
                    dg.PARTITION,
                    f"appliance counts sum to {total} but households = {demographics.households}",
                    s.get("households").value.position,
                    hint="every household must be assigned to exactly one appliance",
                ))

    if any(d.is_error for d in diags):
        raise DiagnosticError(diags)
    try:
        scenario = Scenario(
            name=scenario_name,
            year=year if year is not None else "",
            mix=mix,
            fuels=fuels,
            fuel_pricing=pricing,
            tariff=tariff,
            appliances=appliances,
            demographics=demographics,
        )
    except ValidationError as e:
        raise DiagnosticError(diags + [dg.error(dg.INVALID_VALUE, str(e), start)]) from None
    return scenario, sorted(diags, key=lambda d: d.position)


def load_text(text: str, default_name: str = "scenario") -> tuple[Scenario, list[Diagnostic]]:
    return build_scenario(parse(text), default_name)


def load(path: str | Path) -> tuple[Scenario, list[Diagnostic]]:
    """Read, parse and build a ``.scn`` file; the file stem names unnamed scenarios."""
    path = Path(path)
    return load_text(path.read_text(encoding="utf-8"), default_name=path.stem)
