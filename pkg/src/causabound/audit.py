"""Bias audits: what happens to the bounds when structure is ignored.

An audit computes the PC interval under every analysis mode the structure
supports, closed form and, on request, oracle.  Intervals are then
compared pairwise: `nested` when one contains the other (1e-12 slack),
`disjoint` when they are strictly separated, `overlapping` otherwise.
Intervals are closed, so touching endpoints overlap rather than being
disjoint.  The headline question: does any information-discarding mode
produce an interval disjoint from the full-information one?  When yes,
the shortcut analysis is not merely vaguer, it is incompatible with the
truth.
"""

from __future__ import annotations

import enum
import hashlib
import json
from dataclasses import dataclass

from .bounds import Method, PcInterval, pc_bounds
from .errors import UndefinedConditionalError
from .observables import derive_observables, reduce_scenario
from .oracle import oracle_bounds
from .scenario import AnalysisMode, Scenario, Structure, scenario_to_dict

NESTED_SLACK = 1e-12


class Relation(str, enum.Enum):
    NESTED = "nested"
    OVERLAPPING = "overlapping"
    DISJOINT = "disjoint"


def classify_relation(a: PcInterval, b: PcInterval, slack: float = NESTED_SLACK) -> Relation:
    """How two closed intervals relate; disjointness is strict separation."""
    if a.upper < b.lower or b.upper < a.lower:
        return Relation.DISJOINT
    a_in_b = a.lower >= b.lower - slack and a.upper <= b.upper + slack
    b_in_a = b.lower >= a.lower - slack and b.upper <= a.upper + slack
    if a_in_b or b_in_a:
        return Relation.NESTED
    return Relation.OVERLAPPING


def applicable_modes(structure: Structure) -> tuple[AnalysisMode, ...]:
    """Every mode the structure supports, full information first."""
    modes = [AnalysisMode.FULL]
    if structure.has_mediator:
        modes.append(AnalysisMode.IGNORE_MEDIATOR)
    if structure.has_covariate:
        modes.append(AnalysisMode.IGNORE_COVARIATE)
    if structure.has_mediator and structure.has_covariate:
        modes.append(AnalysisMode.IGNORE_BOTH)
    return tuple(modes)


@dataclass(frozen=True, slots=True)
class AuditEntry:
    """One (mode, method) cell: an interval, or the error that prevented it."""

    mode: AnalysisMode
    method: Method
    interval: PcInterval | None
    error: str | None = None


@dataclass(frozen=True, slots=True)
class AuditReport:
    scenario_digest: str
    structure: Structure
    methods: tuple[Method, ...]
    entries: tuple[AuditEntry, ...]
    relations: tuple[tuple[Relation | None, ...], ...]
    headline_disagreement: bool

    def entry(self, mode: AnalysisMode, method: Method) -> AuditEntry:
        for e in self.entries:
            if e.mode is mode and e.method is method:
                return e
        raise KeyError(f"no audit entry for ({mode.value}, {method.value})")

    def relation(
        self,
        mode_a: AnalysisMode,
        method_a: Method,
        mode_b: AnalysisMode,
        method_b: Method,
    ) -> Relation | None:
        """Relation between two entries; None if either entry failed."""
        keys = [(e.mode, e.method) for e in self.entries]
        i = keys.index((mode_a, method_a))
        j = keys.index((mode_b, method_b))
        return self.relations[i][j]


def scenario_digest(scenario: Scenario) -> str:
    """Stable content digest of the canonical JSON form."""
    canonical = json.dumps(scenario_to_dict(scenario), sort_keys=True, separators=(",", ":"))
    return "sha256:" + hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def _compute_entry(scenario: Scenario, mode: AnalysisMode, method: Method) -> AuditEntry:
    try:
        if method is Method.CLOSED_FORM:
            interval = pc_bounds(derive_observables(scenario, mode))
        else:
            interval = oracle_bounds(reduce_scenario(scenario, mode), mode).interval
    except UndefinedConditionalError as exc:
        return AuditEntry(mode, method, None, str(exc))
    return AuditEntry(mode, method, interval)


def run_audit(scenario: Scenario, methods: tuple[Method, ...] = (Method.CLOSED_FORM,)) -> AuditReport:
    """Audit every applicable mode with the requested methods.

    Per-cell failures (an undefined conditional under some collapse) are
    recorded in place, never abort the rest of the audit, and simply drop
    out of the relation matrix as None rows.
    """
    entries = tuple(
        _compute_entry(scenario, mode, method)
        for mode in applicable_modes(scenario.structure)
        for method in methods
    )
    n = len(entries)
    relations = tuple(
        tuple(
            classify_relation(entries[i].interval, entries[j].interval)
            if entries[i].interval is not None and entries[j].interval is not None
            else None
            for j in range(n)
        )
        for i in range(n)
    )
    headline = False
    for method in methods:
        full = next(
            (e for e in entries if e.mode is AnalysisMode.FULL and e.method is method), None
        )
        if full is None or full.interval is None:
            continue
        for e in entries:
            if e.method is method and e.mode is not AnalysisMode.FULL and e.interval is not None:
                if classify_relation(full.interval, e.interval) is Relation.DISJOINT:
                    headline = True
    return AuditReport(
        scenario_digest(scenario),
        scenario.structure,
        tuple(methods),
        entries,
        relations,
        headline,
    )
