"""Bundled reference analyses with their published display values.

Four small studies, one per structure, each carrying the two-decimal
interval displays it is known to produce.  The demo recomputes every
applicable mode with both methods and compares against the expected
displays; any mismatch is a failure.  Doubles as a smoke test of the
whole pipeline on data a reader can check by hand.
"""

from __future__ import annotations

from dataclasses import dataclass

from .audit import applicable_modes
from .bounds import Method, pc_bounds
from .contingency import ContingencyTable, estimate_from_counts
from .observables import derive_observables, reduce_scenario
from .oracle import oracle_bounds
from .report import display
from .scenario import AnalysisMode, Scenario, Structure


@dataclass(frozen=True, slots=True)
class ReferenceCase:
    name: str
    summary: str
    scenario: Scenario
    counts: ContingencyTable | None
    expected: tuple[tuple[AnalysisMode, str, str], ...]


def _trial_counts() -> ContingencyTable:
    return ContingencyTable.from_cells(
        ("E", "R"),
        {(0, 0): 88, (0, 1): 12, (1, 0): 70, (1, 1): 30},
    )


def _cases() -> tuple[ReferenceCase, ...]:
    counts = _trial_counts()
    randomized_trial = ReferenceCase(
        "randomized-trial",
        "100 exposed vs 100 unexposed, response rates 30% and 12%",
        estimate_from_counts(counts, Structure.BASIC),
        counts,
        ((AnalysisMode.FULL, "0.60", "1.00"),),
    )
    complete_mediation = ReferenceCase(
        "complete-mediation",
        "same margins as the trial, but the effect runs through a mediator",
        Scenario(
            Structure.MEDIATOR,
            response=(0.9, 0.1),
            mediator=(0.975, 0.75),
        ),
        None,
        (
            (AnalysisMode.FULL, "0.60", "0.76"),
            (AnalysisMode.IGNORE_MEDIATOR, "0.60", "1.00"),
        ),
    )
    crossover_covariate = ReferenceCase(
        "crossover-covariate",
        "a stratifier that reverses the effect direction between its levels",
        Scenario(
            Structure.COVARIATE,
            response=((0.2, 0.8), (0.8, 0.2)),
            exposure=(0.8, 0.2),
            covariate_prior=(0.5, 0.5),
        ),
        None,
        (
            (AnalysisMode.FULL, "0.71", "1.00"),
            (AnalysisMode.IGNORE_COVARIATE, "0.00", "0.47"),
        ),
    )
    mediated_confounding = ReferenceCase(
        "mediated-confounding",
        "mediation within strata of an unevenly exposed covariate",
        Scenario(
            Structure.MEDIATOR_COVARIATE,
            response=((0.8, 0.7), (0.9, 0.3)),
            mediator=((0.1, 0.3), (0.8, 0.8)),
            exposure=(0.9, 0.1),
            covariate_prior=(0.1, 0.9),
        ),
        None,
        (
            (AnalysisMode.FULL, "0.00", "0.21"),
            (AnalysisMode.IGNORE_MEDIATOR, "0.00", "0.53"),
            (AnalysisMode.IGNORE_COVARIATE, "0.24", "0.59"),
            (AnalysisMode.IGNORE_BOTH, "0.29", "0.97"),
        ),
    )
    return (randomized_trial, complete_mediation, crossover_covariate, mediated_confounding)


REFERENCE_CASES = _cases()


def _case_rows(case: ReferenceCase):
    """Yield (mode, method, interval, expected displays or None) for one case."""
    expected_by_mode = {mode: (lo, hi) for mode, lo, hi in case.expected}
    for mode in applicable_modes(case.scenario.structure):
        expected = expected_by_mode.get(mode)
        for method in (Method.CLOSED_FORM, Method.ORACLE):
            if method is Method.CLOSED_FORM:
                interval = pc_bounds(derive_observables(case.scenario, mode))
            else:
                interval = oracle_bounds(reduce_scenario(case.scenario, mode), mode).interval
            yield mode, method, interval, expected


def run_demo(cases: tuple[ReferenceCase, ...] | None = None) -> tuple[str, bool]:
    """Recompute every reference interval both ways; render a text table.

    Returns the rendered table and whether all displays matched.
    """
    if cases is None:
        cases = REFERENCE_CASES
    lines = []
    ok = True
    checked = 0
    for case in cases:
        lines.append(f"{case.name}: {case.summary}")
        for mode, method, interval, expected in _case_rows(case):
            got = (display(interval.lower), display(interval.upper))
            verdict = ""
            if expected is not None:
                checked += 1
                if got == expected:
                    verdict = "ok"
                else:
                    verdict = f"MISMATCH, expected [{expected[0]}, {expected[1]}]"
                    ok = False
            lines.append(
                f"  {mode.value:<16} {method.value:<7} [{got[0]}, {got[1]}]  {verdict}".rstrip()
            )
        lines.append("")
    lines.append(
        f"demo: {'ok' if ok else 'FAILED'} ({checked} intervals checked against their reference displays)"
    )
    return "\n".join(lines) + "\n", ok


def demo_document(cases: tuple[ReferenceCase, ...] | None = None) -> tuple[dict, bool]:
    """Machine-readable counterpart of run_demo: same checks, JSON-friendly dict."""
    from ._version import __version__
    from .report import full_precision
    from .scenario import scenario_to_dict

    if cases is None:
        cases = REFERENCE_CASES
    doc_cases = []
    ok = True
    checked = 0
    for case in cases:
        rows = []
        for mode, method, interval, expected in _case_rows(case):
            got = (display(interval.lower), display(interval.upper))
            row = {
                "mode": mode.value,
                "method": method.value,
                "lower": full_precision(interval.lower),
                "upper": full_precision(interval.upper),
                "lower_display": got[0],
                "upper_display": got[1],
            }
            if expected is not None:
                checked += 1
                row["expected_display"] = [expected[0], expected[1]]
                row["matches"] = got == expected
                ok = ok and row["matches"]
            rows.append(row)
        doc_cases.append(
            {
                "name": case.name,
                "summary": case.summary,
                "scenario": scenario_to_dict(case.scenario),
                "intervals": rows,
            }
        )
    doc = {
        "tool": "causabound",
        "version": __version__,
        "cases": doc_cases,
        "checked": checked,
        "ok": ok,
    }
    return doc, ok
