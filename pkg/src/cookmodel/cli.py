"""cookmodel command line.

Exit codes: 0 success, 1 the input file has errors, 2 usage errors
(bad flags, missing or unreadable files).
"""
from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .builder import load
from .diagnostics import Diagnostic, DiagnosticError
from .emit import FORMATS, emit
from .errors import ValidationError
from .mix import mix_report
from .scenario import affordability_report, compare, evaluate, household_report

EXIT_OK, EXIT_INVALID, EXIT_USAGE = 0, 1, 2

COMPARE_HELP = """\
Compare ALT against REF. Deltas and ratios are ALT - REF and ALT / REF;
subsidy_savings_musd and emission_reduction_tco2 are REF - ALT, so they are
positive when the alternative spends or emits less than the reference."""


class UsageError(Exception):
    pass


def _report_selector(value: str) -> str:
    if value in ("national", "mix", "affordability"):
        return value
    if value.startswith("household:") and len(value) > len("household:"):
        return value
    raise argparse.ArgumentTypeError(
        f"invalid report {value!r} (choose national, household:<appliance>, mix, affordability)"
    )


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cookmodel", description="Cooking-fuel migration scenario engine.")
    sub = p.add_subparsers(dest="command", required=True, metavar="{validate,run,compare,mix}")

    def output_flags(sp):
        sp.add_argument("--format", choices=FORMATS, default="table")
        sp.add_argument("-o", "--output", metavar="PATH", help="write to PATH instead of stdout")

    v = sub.add_parser("validate", help="check a scenario file and report diagnostics")
    v.add_argument("file")

    r = sub.add_parser("run", help="evaluate a scenario")
    r.add_argument("file")
    r.add_argument("--report", type=_report_selector, default="national",
                   help="national | household:<appliance> | mix | affordability (default: national)")
    output_flags(r)

    c = sub.add_parser("compare", help="compare two scenarios", description=COMPARE_HELP,
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    c.add_argument("ref", help="reference scenario")
    c.add_argument("alt", help="alternative scenario")
    output_flags(c)

    m = sub.add_parser("mix", help="print the generation-mix primary energy table")
    m.add_argument("file")
    output_flags(m)
    return p


def _load(path: str, warnings: list[tuple[str, Diagnostic]]):
    p = Path(path)
    if not p.exists():
        raise UsageError(f"no such file: {path}")
    if p.is_dir():
        raise UsageError(f"not a file: {path}")
    try:
        scenario, diags = load(p)
    except (OSError, UnicodeDecodeError) as e:
        raise UsageError(f"cannot read {path}: {e}") from None
    except DiagnosticError as e:
        e.source = path
        raise
    warnings.extend((path, d) for d in diags)
    return scenario


def _styled(args) -> bool:
    return (
        getattr(args, "output", None) is None
        and "COOKMODEL_NO_COLOR" not in os.environ
        and sys.stdout.isatty()
    )


def _render(args, warnings) -> str:
    if args.command == "validate":
        scenario = _load(args.file, warnings)
        return f"{args.file}: ok ({scenario.name}, {len(scenario.appliances)} appliances)\n"
    styled = _styled(args)
    if args.command == "compare":
        ref = _load(args.ref, warnings)
        alt = _load(args.alt, warnings)
        return emit(compare(ref, alt), args.format, styled)
    scenario = _load(args.file, warnings)
    if args.command == "mix":
        return emit(mix_report(scenario.mix), args.format, styled)
    sel = args.report
    if sel == "national":
        report = evaluate(scenario)
    elif sel == "mix":
        report = mix_report(scenario.mix)
    elif sel == "affordability":
        report = affordability_report(scenario)
    else:
        report = household_report(scenario, sel.split(":", 1)[1])
    return emit(report, args.format, styled)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    warnings: list[tuple[str, Diagnostic]] = []
    try:
        text = _render(args, warnings)
    except UsageError as e:
        print(f"cookmodel: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except DiagnosticError as e:
        source = getattr(e, "source", "<input>")
        for d in e.diagnostics:
            print(d.format(source), file=sys.stderr)
        n = len(e.errors)
        print(f"cookmodel: {n} error{'s' if n != 1 else ''} in {source}", file=sys.stderr)
        return EXIT_INVALID
    except ValidationError as e:
        print(f"cookmodel: error: {e}", file=sys.stderr)
        return EXIT_INVALID
    finally:
        for source, d in warnings:
            print(d.format(source), file=sys.stderr)

    if args.command != "validate" and args.output:
        try:
            Path(args.output).write_text(text, encoding="utf-8", newline="\n")
        except OSError as e:
            print(f"cookmodel: error: cannot write {args.output}: {e}", file=sys.stderr)
            return EXIT_USAGE
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
