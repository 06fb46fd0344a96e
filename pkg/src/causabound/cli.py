"""Command line front end.

Subcommands: bound, audit, estimate, oracle-check, demo.  Scenario JSON
and counts CSV inputs are told apart by file extension.  Exit codes: 0
success, 1 a check failed, 2 input error, 3 the requested quantity is
undefined for the given distribution.
"""

from __future__ import annotations

import argparse
import json
import sys

from .audit import run_audit
from .bounds import Method, pc_bounds
from .checks import DEFAULT_SEED, DEFAULT_TRIALS, equivalence_sweep, render_sweep_report
from .contingency import estimate_from_counts, read_counts_csv, structure_for_variables
from .demo import demo_document, run_demo
from .errors import InapplicableModeError, ScenarioFormatError, UndefinedConditionalError
from .observables import derive_observables, reduce_scenario
from .oracle import oracle_bounds
from .report import digest_bytes, render_csv, render_json, report_document
from .scenario import AnalysisMode, Scenario, load_scenario, scenario_to_dict, validate_scenario

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_UNDEFINED = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="causabound",
        description="Bounds on the probability of causation, and audits of structure-blind analyses.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output_flag(p: argparse.ArgumentParser) -> None:
        p.add_argument("--output", choices=("json", "csv"), default="json", help="report rendering")

    p_bound = sub.add_parser("bound", help="compute a PC interval")
    p_bound.add_argument("input", help="scenario .json or counts .csv")
    p_bound.add_argument(
        "--mode",
        choices=[m.value for m in AnalysisMode],
        default=AnalysisMode.FULL.value,
        help="how much structure to use",
    )
    p_bound.add_argument(
        "--method",
        choices=("closed", "oracle", "both"),
        default="closed",
        help="closed-form bounds, brute-force oracle, or both",
    )
    add_output_flag(p_bound)

    p_audit = sub.add_parser("audit", help="compare every applicable analysis mode")
    p_audit.add_argument("input", help="scenario .json or counts .csv")
    p_audit.add_argument(
        "--method",
        choices=("closed", "oracle", "both"),
        default="closed",
        help="methods to audit with",
    )
    add_output_flag(p_audit)

    p_estimate = sub.add_parser("estimate", help="counts CSV to scenario JSON")
    p_estimate.add_argument("input", help="counts .csv")

    p_check = sub.add_parser("oracle-check", help="randomized closed-form vs oracle sweep")
    p_check.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p_check.add_argument("--trials", type=int, default=DEFAULT_TRIALS, help="scenarios per structure")

    demo_p = sub.add_parser("demo", help="run the bundled reference analyses")
    demo_p.add_argument("--json", action="store_true", help="emit the results as JSON")
    return parser


def _methods(flag: str) -> tuple[Method, ...]:
    if flag == "both":
        return (Method.CLOSED_FORM, Method.ORACLE)
    return (Method.CLOSED_FORM,) if flag == "closed" else (Method.ORACLE,)


def _load_input(path: str) -> tuple[Scenario, str]:
    """Load a scenario from .json or .csv (estimated); return it with its digest."""
    with open(path, "rb") as fh:
        digest = digest_bytes(fh.read())
    if path.endswith(".json"):
        scenario = load_scenario(path)
    elif path.endswith(".csv"):
        table = read_counts_csv(path)
        scenario = estimate_from_counts(table, structure_for_variables(table.variables))
    else:
        raise ScenarioFormatError(f"cannot tell scenario JSON from counts CSV: {path!r}")
    violations = validate_scenario(scenario)
    if violations:
        raise ScenarioFormatError("invalid scenario:\n  " + "\n  ".join(violations))
    return scenario, digest


def _emit(doc: dict, output: str) -> None:
    sys.stdout.write(render_json(doc) if output == "json" else render_csv(doc))


def _cmd_bound(args: argparse.Namespace) -> int:
    scenario, digest = _load_input(args.input)
    mode = AnalysisMode(args.mode)
    intervals = []
    for method in _methods(args.method):
        if method is Method.CLOSED_FORM:
            intervals.append(pc_bounds(derive_observables(scenario, mode)))
        else:
            intervals.append(oracle_bounds(reduce_scenario(scenario, mode), mode).interval)
    _emit(report_document(scenario, digest, tuple(intervals)), args.output)
    return EXIT_OK


def _cmd_audit(args: argparse.Namespace) -> int:
    scenario, digest = _load_input(args.input)
    audit = run_audit(scenario, _methods(args.method))
    _emit(report_document(scenario, digest, (), audit), args.output)
    return EXIT_OK


def _cmd_estimate(args: argparse.Namespace) -> int:
    if not args.input.endswith(".csv"):
        raise ScenarioFormatError(f"estimate expects a counts .csv, got {args.input!r}")
    table = read_counts_csv(args.input)
    scenario = estimate_from_counts(table, structure_for_variables(table.variables))
    sys.stdout.write(json.dumps(scenario_to_dict(scenario), indent=2) + "\n")
    return EXIT_OK


def _cmd_oracle_check(args: argparse.Namespace) -> int:
    if args.trials < 1:
        raise ScenarioFormatError("--trials must be at least 1")
    report = equivalence_sweep(args.seed, args.trials)
    sys.stdout.write(render_sweep_report(report))
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def _cmd_demo(args: argparse.Namespace) -> int:
    if args.json:
        doc, ok = demo_document()
        sys.stdout.write(render_json(doc))
    else:
        text, ok = run_demo()
        sys.stdout.write(text)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


_COMMANDS = {
    "bound": _cmd_bound,
    "audit": _cmd_audit,
    "estimate": _cmd_estimate,
    "oracle-check": _cmd_oracle_check,
    "demo": _cmd_demo,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT_ERROR
    try:
        return _COMMANDS[args.command](args)
    except UndefinedConditionalError as exc:
        print(f"causabound: undefined: {exc}", file=sys.stderr)
        return EXIT_UNDEFINED
    except (ScenarioFormatError, InapplicableModeError, OSError) as exc:
        print(f"causabound: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
