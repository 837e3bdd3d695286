"""Render reports as aligned text tables, CSV, or JSON.

Output is a pure function of (report, format): no timestamps, no locale, LF
line endings. CSV and table cells are rounded for presentation (2 decimals for
energy and money, 1 for national tCO2); JSON keeps full precision and uses the
CSV header names as keys.
"""
from __future__ import annotations

import csv
import io
import json
import math
from functools import singledispatch

from .mix import MixReport
from .scenario import (
    AffordabilityReport,
    ComparisonReport,
    HouseholdReport,
    NationalReport,
)

FORMATS = ("table", "csv", "structured")

NATIONAL_COLUMNS = (
    "appliance",
    "monthly_final_gwh",
    "annual_final_gwh",
    "primary_gwh",
    "total_cost_musd",
    "subsidy_musd",
    "emissions_tco2",
)
MIX_COLUMNS = (
    "source",
    "energy_mwh",
    "share_pct",
    "primary_factor",
    "primary_mwh",
    "emission_factor",
    "emissions_tco2",
)
HOUSEHOLD_COLUMNS = (
    "appliance",
    "monthly_final_kwh",
    "annual_final_kwh",
    "total_cost_usd",
    "subsidy_usd",
    "user_cost_usd",
)
COMPARISON_COLUMNS = ("metric", "reference", "alternative", "delta", "ratio")
AFFORDABILITY_COLUMNS = ("appliance", "user_cost_usd", "pct_of_basket", "pct_of_wage")


def fmt(x: float | None, decimals: int) -> str:
    if x is None or (isinstance(x, float) and math.isnan(x)):
        return "n/a"
    s = f"{x:.{decimals}f}"
    if float(s) == 0:
        s = s.lstrip("-")
    return s


def fmt_factor(x: float) -> str:
    """Conversion factors as entered: up to 6 decimals, no trailing zeros."""
    s = fmt(x, 6).rstrip("0").rstrip(".")
    return s or "0"


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2, allow_nan=False) + "\n"


def _table(header, rows, title: str, footer=(), styled: bool = False) -> str:
    cells = [list(header)] + [list(r) for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]

    def line(r):
        first = r[0].ljust(widths[0])
        rest = [c.rjust(w) for c, w in zip(r[1:], widths[1:])]
        return "  ".join([first] + rest).rstrip()

    head = line(cells[0])
    if styled:
        head = f"\x1b[1m{head}\x1b[0m"
    out = [title, head, "-" * len(line(cells[0]))]
    out += [line(r) for r in cells[1:]]
    out += list(footer)
    return "\n".join(out) + "\n"


@singledispatch
def emit(report, format: str = "table", styled: bool = False) -> str:
    """Render ``report`` in ``format`` (one of FORMATS)."""
    raise TypeError(f"cannot emit {type(report).__name__}")


def _check_format(format: str) -> None:
    if format not in FORMATS:
        raise ValueError(f"unknown format {format!r}; choose from {', '.join(FORMATS)}")


# national ---------------------------------------------------------------

def _national_cells(r) -> list[str]:
    return [
        r.name,
        fmt(r.monthly_final_gwh, 2),
        fmt(r.annual_final_gwh, 2),
        fmt(r.primary_gwh, 2),
        fmt(r.total_cost_musd, 2),
        fmt(r.subsidy_musd, 2),
        fmt(r.emissions_tco2, 1),
    ]


def _national_json(r) -> dict:
    return {
        "appliance": r.name,
        "count": r.count,
        "monthly_final_gwh": r.monthly_final_gwh,
        "annual_final_gwh": r.annual_final_gwh,
        "primary_gwh": r.primary_gwh,
        "total_cost_musd": r.total_cost_musd,
        "subsidy_musd": r.subsidy_musd,
        "emissions_tco2": r.emissions_tco2,
    }


@emit.register
def _(report: NationalReport, format: str = "table", styled: bool = False) -> str:
    _check_format(format)
    rows = [_national_cells(r) for r in report.rows + (report.totals,)]
    if format == "csv":
        return _csv(NATIONAL_COLUMNS, rows)
    if format == "structured":
        return _json({
            "report": "national",
            "scenario": report.scenario,
            "year": report.year,
            "rows": [_national_json(r) for r in report.rows],
            "totals": _national_json(report.totals),
        })
    header = ("appliance", "monthly [GWh]", "annual [GWh]", "primary [GWh]",
              "total cost [MUS$/y]", "subsidy [MUS$/y]", "CO2 [tCO2/y]")
    title = f"National cooking energy: {report.scenario} ({report.year})"
    return _table(header, rows, title, styled=styled)


# mix --------------------------------------------------------------------

@emit.register
def _(report: MixReport, format: str = "table", styled: bool = False) -> str:
    _check_format(format)
    rows = [
        [r.name, fmt(r.energy, 2), fmt(r.share_pct, 2), fmt_factor(r.primary_factor),
         fmt(r.primary_energy, 2), fmt_factor(r.emission_factor), fmt(r.emissions, 2)]
        for r in report.rows
    ]
    rows.append([
        "total", fmt(report.total_energy, 2), fmt(100.0, 2), fmt(report.weighted_primary_factor, 4),
        fmt(report.total_primary, 2), fmt(report.grid_emission_factor, 4), fmt(report.total_emissions, 2),
    ])
    if format == "csv":
        return _csv(MIX_COLUMNS, rows)
    if format == "structured":
        return _json({
            "report": "mix",
            "year": report.year,
            "rows": [
                {"source": r.name, "energy_mwh": r.energy, "share_pct": r.share_pct,
                 "primary_factor": r.primary_factor, "primary_mwh": r.primary_energy,
                 "emission_factor": r.emission_factor, "emissions_tco2": r.emissions}
                for r in report.rows
            ],
            "totals": {
                "source": "total", "energy_mwh": report.total_energy, "share_pct": 100.0,
                "primary_factor": report.weighted_primary_factor, "primary_mwh": report.total_primary,
                "emission_factor": report.grid_emission_factor, "emissions_tco2": report.total_emissions,
            },
        })
    header = ("source", "energy [MWh]", "%", "C_i to Pe", "Pe [MWh]", "EF [tCO2/MWh]", "tCO2")
    footer = [
        "",
        f"weighted_primary_factor: {fmt(report.weighted_primary_factor, 4)}",
        f"grid_emission_factor: {fmt(report.grid_emission_factor, 4)}",
    ]
    return _table(header, rows, f"Primary energy for electric generation ({report.year})",
                  footer, styled)


# household --------------------------------------------------------------

HOUSEHOLD_ROWS = (
    ("Monthly consumption", "kWh", "monthly_final_kwh"),
    ("Annual consumption", "kWh", "annual_final_kwh"),
    ("Total cost per year", "US$", "total_cost_usd"),
    ("Subsidy cost per year", "US$", "subsidy_usd"),
    ("User cost per year", "US$", "user_cost_usd"),
)


def _household_values(report: HouseholdReport) -> dict[str, float]:
    return {
        "monthly_final_kwh": report.monthly_final_kwh,
        "annual_final_kwh": report.annual_final_kwh,
        "total_cost_usd": report.cost.total,
        "subsidy_usd": report.cost.subsidy,
        "user_cost_usd": report.cost.user,
    }


@emit.register
def _(report: HouseholdReport, format: str = "table", styled: bool = False) -> str:
    _check_format(format)
    values = _household_values(report)
    if format == "csv":
        return _csv(HOUSEHOLD_COLUMNS, [[report.appliance] + [fmt(values[k], 2) for k in HOUSEHOLD_COLUMNS[1:]]])
    if format == "structured":
        return _json({"report": "household", "appliance": report.appliance, **values})
    rows = [[label, fmt(values[key], 2), units] for label, units, key in HOUSEHOLD_ROWS]
    return _table(("", "value", "units"), rows, f"Typical household: {report.appliance}",
                  styled=styled)


# comparison -------------------------------------------------------------

@emit.register
def _(report: ComparisonReport, format: str = "table", styled: bool = False) -> str:
    _check_format(format)
    rows = [
        [m.metric, fmt(m.reference, 2), fmt(m.alternative, 2), fmt(m.delta, 2), fmt(m.ratio, 4)]
        for m in report.metrics
    ]
    savings = fmt(report.subsidy_savings_musd, 2)
    reduction = fmt(report.emission_reduction_tco2, 1)
    if format == "csv":
        rows += [["subsidy_savings_musd", "", "", savings, ""],
                 ["emission_reduction_tco2", "", "", reduction, ""]]
        return _csv(COMPARISON_COLUMNS, rows)
    if format == "structured":
        return _json({
            "report": "comparison",
            "reference": report.reference,
            "alternative": report.alternative,
            "metrics": [
                {"metric": m.metric, "reference": m.reference, "alternative": m.alternative,
                 "delta": m.delta, "ratio": m.ratio}
                for m in report.metrics
            ],
            "subsidy_savings_musd": report.subsidy_savings_musd,
            "emission_reduction_tco2": report.emission_reduction_tco2,
        })
    footer = ["", f"subsidy_savings_musd: {savings}", f"emission_reduction_tco2: {reduction}"]
    title = f"Comparison: {report.alternative} relative to {report.reference}"
    return _table(COMPARISON_COLUMNS, rows, title, footer, styled)


# affordability ----------------------------------------------------------

@emit.register
def _(report: AffordabilityReport, format: str = "table", styled: bool = False) -> str:
    _check_format(format)
    rows = [[r.appliance, fmt(r.user_cost_usd, 2), fmt(r.pct_of_basket, 4), fmt(r.pct_of_wage, 4)]
            for r in report.rows]
    if format == "csv":
        return _csv(AFFORDABILITY_COLUMNS, rows)
    if format == "structured":
        return _json({
            "report": "affordability",
            "scenario": report.scenario,
            "year": report.year,
            "rows": [
                {"appliance": r.appliance, "user_cost_usd": r.user_cost_usd,
                 "pct_of_basket": r.pct_of_basket, "pct_of_wage": r.pct_of_wage}
                for r in report.rows
            ],
            "per_capita_subsidy_usd": report.per_capita_subsidy_usd,
        })
    header = ("appliance", "user cost [US$/y]", "% of basket", "% of min. wage")
    footer = ["", f"per_capita_subsidy_usd: {fmt(report.per_capita_subsidy_usd, 2)}"]
    return _table(header, rows, f"Affordability: {report.scenario} ({report.year})", footer, styled)
