"""Randomized agreement check between the closed forms and the oracle.

Sweeps seeded random scenarios of every structure, computes both the
closed-form interval and the corner-enumeration oracle on each, and
tracks the worst endpoint discrepancy.  The two derivations share nothing
past the scenario itself, so agreement at 1e-9 over a sweep is strong
evidence each family is the exact solution of its optimization problem.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass

from .bounds import pc_bounds
from .observables import derive_observables
from .oracle import oracle_bounds
from .randomgen import MIN_MASS, random_scenario
from .scenario import Scenario, Structure, scenario_to_dict

DEFAULT_SEED = 42
DEFAULT_TRIALS = 250
TOLERANCE = 1e-9

_SWEEP_ORDER = (
    Structure.BASIC,
    Structure.MEDIATOR,
    Structure.COVARIATE,
    Structure.MEDIATOR_COVARIATE,
)


@dataclass(frozen=True, slots=True)
class StructureSweep:
    """Worst disagreement seen for one structure."""

    structure: Structure
    trials: int
    max_discrepancy: float
    worst_scenario: Scenario | None
    worst_endpoint: str


@dataclass(frozen=True, slots=True)
class SweepReport:
    seed: int
    trials_per_structure: int
    tolerance: float
    results: tuple[StructureSweep, ...]

    @property
    def max_discrepancy(self) -> float:
        return max(r.max_discrepancy for r in self.results)

    @property
    def ok(self) -> bool:
        return self.max_discrepancy <= self.tolerance


def equivalence_sweep(
    seed: int = DEFAULT_SEED, trials: int = DEFAULT_TRIALS, tolerance: float = TOLERANCE
) -> SweepReport:
    """Run the sweep: `trials` scenarios per structure from one seeded stream."""
    rng = random.Random(seed)
    results = []
    for structure in _SWEEP_ORDER:
        worst = 0.0
        worst_scenario: Scenario | None = None
        worst_endpoint = ""
        for _ in range(trials):
            scenario = random_scenario(rng, structure)
            closed = pc_bounds(derive_observables(scenario))
            exact = oracle_bounds(scenario).interval
            for endpoint, gap in (
                ("lower", abs(closed.lower - exact.lower)),
                ("upper", abs(closed.upper - exact.upper)),
            ):
                if gap > worst:
                    worst, worst_scenario, worst_endpoint = gap, scenario, endpoint
        results.append(StructureSweep(structure, trials, worst, worst_scenario, worst_endpoint))
    return SweepReport(seed, trials, tolerance, tuple(results))


def render_sweep_report(report: SweepReport) -> str:
    """Deterministic text rendering; includes replay JSON on failure."""
    lines = [
        f"closed-form vs oracle sweep: seed {report.seed}, "
        f"{report.trials_per_structure} scenarios per structure",
        f"generator guardrail: denominators and stratum weights below {MIN_MASS} are excluded",
    ]
    for r in report.results:
        verdict = "ok" if r.max_discrepancy <= report.tolerance else "FAIL"
        lines.append(
            f"  {r.structure.value:<19} max endpoint gap {r.max_discrepancy:.3e}  {verdict}"
        )
    if report.ok:
        lines.append(f"all structures agree within {report.tolerance:.0e}")
    else:
        lines.append(f"DISAGREEMENT beyond {report.tolerance:.0e}; worst offenders follow for replay:")
        for r in report.results:
            if r.max_discrepancy > report.tolerance and r.worst_scenario is not None:
                lines.append(
                    f"  {r.structure.value} ({r.worst_endpoint} endpoint, gap {r.max_discrepancy:.3e}):"
                )
                lines.append("    " + json.dumps(scenario_to_dict(r.worst_scenario)))
    return "\n".join(lines) + "\n"
