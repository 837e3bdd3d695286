import json

import pytest

from cookmodel.cli import EXIT_INVALID, EXIT_OK, EXIT_USAGE, main

from conftest import MINIMAL, fixture_path

BASELINE = str(fixture_path("baseline-2014"))
BAU = str(fixture_path("bau-2022"))
NP = str(fixture_path("np-2022"))


@pytest.fixture(autouse=True)
def no_color(monkeypatch):
    monkeypatch.setenv("COOKMODEL_NO_COLOR", "1")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_run_csv(capsys):
    code, out, _ = run(capsys, "run", BASELINE, "--format", "csv")
    assert code == EXIT_OK
    assert "lpg_stove,904.28,10851.40,11393.97,959.52,882.76,2540086.5" in out


def test_compare(capsys):
    code, out, _ = run(capsys, "compare", BAU, NP)
    assert code == EXIT_OK
    assert "subsidy_savings_musd: 1161.98" in out


def test_mix(capsys):
    code, out, _ = run(capsys, "mix", BASELINE)
    assert code == EXIT_OK and "1.8331" in out


def test_validate_ok(capsys):
    code, out, _ = run(capsys, "validate", NP)
    assert code == EXIT_OK
    assert out.startswith(f"{NP}: ok")


def test_validate_reports_partition_with_location(capsys, tmp_path):
    bad = tmp_path / "bad.scn"
    bad.write_text(fixture_path("baseline-2014").read_text().replace("households = 3457375", "households = 3457376"))
    code, out, err = run(capsys, "validate", str(bad))
    assert code == EXIT_INVALID
    assert out == ""
    line_no = bad.read_text().splitlines().index("households = 3457376") + 1
    assert f"{bad}:{line_no}:14: error[E105]" in err
    assert "1 error in" in err


def test_every_error_listed(capsys, tmp_path):
    bad = tmp_path / "bad.scn"
    bad.write_text(MINIMAL.replace("count = 10", "count = x").replace("population = 37", "population = 1.2.3"))
    code, _, err = run(capsys, "run", str(bad))
    assert code == EXIT_INVALID
    assert err.count("error[") == 2


def test_warning_does_not_fail(capsys, tmp_path):
    f = tmp_path / "w.scn"
    f.write_text(MINIMAL + "colour = 3\n")
    code, out, err = run(capsys, "run", str(f))
    assert code == EXIT_OK and out
    assert "warning[W001]" in err


@pytest.mark.parametrize("argv", [
    ["run", "/nonexistent/x.scn"],
    ["compare", BAU, "/nonexistent/y.scn"],
    ["run", BASELINE, "--format", "xml"],
    ["run", BASELINE, "--report", "weekly"],
    ["frobnicate"],
    [],
])
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        raise SystemExit(main(argv))
    assert exc.value.code == EXIT_USAGE
    assert capsys.readouterr().out == ""


def test_directory_is_usage_error(capsys, tmp_path):
    code, out, _ = run(capsys, "run", str(tmp_path))
    assert code == EXIT_USAGE and out == ""


def test_unknown_household_appliance(capsys):
    code, out, err = run(capsys, "run", BASELINE, "--report", "household:gas_grill")
    assert code == EXIT_INVALID and out == ""
    assert "gas_grill" in err and "known: lpg_stove, induction_stove" in err


def test_output_file(capsys, tmp_path):
    target = tmp_path / "out.json"
    code, out, _ = run(capsys, "run", NP, "--report", "affordability", "--format", "structured", "-o", str(target))
    assert code == EXIT_OK and out == ""
    assert json.loads(target.read_text())["per_capita_subsidy_usd"] == pytest.approx(4.15, abs=0.005)


def test_failed_run_leaves_no_output_file(capsys, tmp_path):
    bad = tmp_path / "bad.scn"
    bad.write_text("[[source]]\n")
    target = tmp_path / "out.csv"
    code, _, _ = run(capsys, "run", str(bad), "-o", str(target))
    assert code == EXIT_INVALID
    assert not target.exists()


def test_household_report(capsys):
    code, out, _ = run(capsys, "run", NP, "--report", "household:induction_stove")
    assert code == EXIT_OK
    assert "54.87" in out


def test_no_color_env_keeps_plain_output(capsys):
    _, out, _ = run(capsys, "run", BAU)
    assert "\x1b[" not in out
