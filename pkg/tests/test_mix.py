import pytest

from cookmodel.errors import ValidationError
from cookmodel.mix import (
    EnergySource,
    GenerationMix,
    grid_emission_factor,
    mix_emissions,
    mix_report,
    primary_energy,
    weighted_primary_factor,
)

# 2014 generation mix: (energy MWh, C_i, EF)
TABLE1_2014 = {
    "biomass": (399471.18, 3.04, 0),
    "solar": (16482.7, 1, 0),
    "wind": (79742.47, 1, 0),
    "hydro": (11457895.6, 1, 0),
    "fuel_oil": (5483600.4, 2.77, 0.8),
    "natural_gas": (2964552.7, 1.95, 0.8),
    "diesel": (2759169, 2.77, 0.8),
    "crude_oil": (1146299.3, 2.77, 0.8),
}


def make_mix(table, year=2014):
    return GenerationMix(year, [EnergySource(n, *v) for n, v in table.items()])


@pytest.fixture
def mix2014():
    return make_mix(TABLE1_2014)


@pytest.fixture
def mix2022():
    return GenerationMix(2022, [
        EnergySource("renewable_non_hydro", 553000, 2.64, 0),
        EnergySource("hydro", 35729000, 1, 0),
        EnergySource("thermo", 6420000, 31788598.1 / 12353621.4, 0.8),
    ])


class TestPrimaryEnergy:
    def test_2014_total_matches_table(self, mix2014):
        total, rows = primary_energy(mix2014)
        assert total == pytest.approx(44557111.1, rel=1e-6)
        assert rows["fuel_oil"] == pytest.approx(15189573.1, abs=0.05)

    def test_hydro_identity(self):
        total, _ = primary_energy(GenerationMix(1, [EnergySource("h", 100, 1, 0)]))
        assert total == 100

    def test_2022_aggregates(self, mix2022):
        # hand product-sum of the 2022 per-source cells
        expected = 1459920 + 35729000 + 16520078.8
        assert primary_energy(mix2022)[0] == pytest.approx(expected, rel=1e-8)

    def test_empty_mix_names_the_mix(self):
        with pytest.raises(ValidationError, match="2030"):
            GenerationMix(2030, [])

    def test_zero_energy_source_contributes_nothing(self, mix2014):
        extended = mix2014.concat(GenerationMix(2014, [EnergySource("coal", 0, 2.5, 0.95)]))
        assert primary_energy(extended)[0] == primary_energy(mix2014)[0]


class TestWeightedFactors:
    def test_2014_weighted_primary_factor(self, mix2014):
        oracle = 44557111.1 / 24307213.3
        assert weighted_primary_factor(mix2014) == pytest.approx(oracle, abs=1e-6)
        assert round(weighted_primary_factor(mix2014), 2) == 1.83

    def test_2022_weighted_primary_factor(self, mix2022):
        assert weighted_primary_factor(mix2022) == pytest.approx(53708998.8 / 42702000, abs=1e-6)

    def test_single_source_factor(self):
        mix = GenerationMix(1, [EnergySource("x", 7, 2.5, 0.3)])
        assert weighted_primary_factor(mix) == 2.5
        assert grid_emission_factor(mix) == 0.3

    def test_grid_emission_factor_2014(self, mix2014):
        assert grid_emission_factor(mix2014) == pytest.approx(9882897.1 / 24307213.3, abs=1e-7)

    def test_grid_emission_factor_2022(self, mix2022):
        assert grid_emission_factor(mix2022) == pytest.approx(5136000 / 42702000, abs=1e-9)

    def test_all_renewable_is_zero(self):
        mix = GenerationMix(1, [EnergySource("a", 5, 1, 0), EnergySource("b", 9, 3, 0)])
        assert grid_emission_factor(mix) == 0

    def test_zero_total_energy_is_guarded(self):
        mix = GenerationMix(1, [EnergySource("a", 0, 1, 0)])
        with pytest.raises(ValidationError, match="zero total energy"):
            weighted_primary_factor(mix)
        with pytest.raises(ValidationError):
            grid_emission_factor(mix)


class TestEmissions:
    def test_fuel_oil_row(self, mix2014):
        assert mix_emissions(mix2014)[1]["fuel_oil"] == pytest.approx(4386880.3, abs=0.05)

    def test_2022_thermo(self, mix2022):
        assert mix_emissions(mix2022)[1]["thermo"] == 5136000

    def test_zero_factor(self, mix2014):
        assert mix_emissions(mix2014)[1]["hydro"] == 0


class TestReport:
    def test_2014_report(self, mix2014):
        r = mix_report(mix2014)
        hydro = next(row for row in r.rows if row.name == "hydro")
        assert round(hydro.share_pct, 2) == 47.14
        assert r.total_emissions == pytest.approx(9882897.1, abs=0.05)
        assert sum(row.share_pct for row in r.rows) == pytest.approx(100, abs=0.01)
        assert r.total_primary == pytest.approx(sum(row.primary_energy for row in r.rows), rel=1e-15)

    def test_single_source_share(self):
        r = mix_report(GenerationMix(1, [EnergySource("only", 3, 1, 0)]))
        assert r.rows[0].share_pct == 100

    def test_2022_hydro_share(self, mix2022):
        r = mix_report(mix2022)
        assert round(r.rows[1].share_pct, 2) == 83.67


class TestValidation:
    @pytest.mark.parametrize("kwargs", [
        dict(name="", energy=1, primary_factor=1, emission_factor=0),
        dict(name="x", energy=-1, primary_factor=1, emission_factor=0),
        dict(name="x", energy=1, primary_factor=0, emission_factor=0),
        dict(name="x", energy=1, primary_factor=1, emission_factor=-0.1),
        dict(name="x", energy=float("nan"), primary_factor=1, emission_factor=0),
    ])
    def test_bad_source(self, kwargs):
        with pytest.raises(ValidationError):
            EnergySource(**kwargs)

    def test_factor_below_one_allowed(self):
        assert EnergySource("x", 1, 0.5, 0).primary_factor == 0.5

    def test_duplicate_names(self):
        with pytest.raises(ValidationError, match="duplicate"):
            GenerationMix(1, [EnergySource("a", 1, 1, 0), EnergySource("a", 2, 1, 0)])
