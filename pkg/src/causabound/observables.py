"""Observable summaries and analysis-mode reductions.

The bounds formulas do not consume a Scenario directly; they consume an
ObservableSet, the handful of functionals the relevant formula family is
written in.  Deriving one is mostly bookkeeping, with three pieces of real
arithmetic:

Chain marginals.  Mediator structures have no direct E -> R edge, so
    P(R=1|E=e) = P(R=1|M=1) P(M=1|E=e) + P(R=1|M=0) P(M=0|E=e)
(per stratum when S is present).  For a genuine mediator scenario this IS
the marginal; for a collapsed view of a richer scenario it is the value a
mediator-only analyst would reconstruct, which need not match the joint
law.  Both are carried so reports can label which one a formula consumed.

Covariate weights.  Stratum weights are posteriors by Bayes' rule,
    P(S=s|E=e) = P(S=s) P(E=e|S=s) / P(E=e),
with P(E=e) = sum_s P(S=s) P(E=e|S=s).  A zero P(E=e) makes the weights,
and everything conditioned on E=e, undefined.

Collapses.  Ignoring a variable means marginalizing it out of the tables
the analyst keeps: dropping S mixes strata with the posterior weights
above (given E=e for the M|E and R|E tables, given M=m for the R|M table,
where P(S=s|M=m) comes from the joint law); dropping M replaces the
mediator machinery with the chain marginals.  `reduce_scenario` performs
these collapses and returns an ordinary Scenario of the smaller structure,
so every analysis mode reuses the same downstream derivations.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InapplicableModeError, UndefinedConditionalError
from .scenario import AnalysisMode, Pair, Scenario, Structure

Quad = tuple[float, float, float, float]


def chain_response(mediator_pair: Pair, response_pair: Pair, exposure_value: int) -> float:
    """P(R=1|E=e) routed through the mediator: the Markov chain marginal."""
    m1 = mediator_pair[exposure_value]
    return response_pair[1] * m1 + response_pair[0] * (1.0 - m1)


@dataclass(frozen=True, slots=True)
class ObservableSet:
    """Inputs to one bounds-formula family, plus provenance notes.

    `structure` is the effective structure after the mode's reductions;
    which optional fields are populated follows it.  `p_r1_given_e1` and
    `p_r1_given_e0` are the values the formulas consume: chain marginals
    whenever a mediator is in play.  When those differ from the joint-law
    marginals of the original scenario, the true values are kept in
    `marginal_p_r1_given_e*` and a note says so.

    `risk_ratio` is +inf when P(R=1|E=0) = 0 < P(R=1|E=1), and None when
    it is not defined at all (0/0, or an unavailable marginal).
    """

    structure: Structure
    mode: AnalysisMode
    p_r1_given_e1: float
    p_r1_given_e0: float | None
    risk_ratio: float | None
    mediator_summary: Quad | None = None
    stratum_weights: tuple[float, ...] | None = None
    stratum_response: tuple[Pair, ...] | None = None
    stratum_mediator_summary: tuple[Quad, ...] | None = None
    marginal_p_r1_given_e1: float | None = None
    marginal_p_r1_given_e0: float | None = None
    notes: tuple[str, ...] = ()


def _risk_ratio(p1: float, p0: float | None) -> tuple[float | None, tuple[str, ...]]:
    if p0 is None:
        return None, ()
    if p0 > 0.0:
        return p1 / p0, ()
    if p1 > 0.0:
        return float("inf"), ("P(R=1|E=0) = 0: risk ratio taken as +infinity, so the lower bound is 1",)
    return None, ("P(R=1|E=1) = P(R=1|E=0) = 0: risk ratio undefined",)


def _exposure_marginal(scenario: Scenario) -> float:
    """P(E=1) under the scenario's joint law (covariate structures)."""
    return sum(
        scenario.covariate_prior[s] * scenario.exposure[s]  # type: ignore[index]
        for s in range(scenario.n_strata)
    )


def _stratum_posterior(scenario: Scenario, e: int) -> tuple[float, ...]:
    """P(S=s|E=e) by Bayes' rule; raises when P(E=e) = 0."""
    p_e1 = _exposure_marginal(scenario)
    p_e = p_e1 if e == 1 else 1.0 - p_e1
    if p_e <= 0.0:
        raise UndefinedConditionalError(f"P(E={e}) = 0: nothing is conditionally defined given E={e}")
    out = []
    for s in range(scenario.n_strata):
        expo = scenario.exposure[s]  # type: ignore[index]
        p_e_given_s = expo if e == 1 else 1.0 - expo
        out.append(scenario.covariate_prior[s] * p_e_given_s / p_e)  # type: ignore[index]
    return tuple(out)


def _mediator_posterior(scenario: Scenario, m: int) -> tuple[float, ...]:
    """P(S=s|M=m) from the joint law of a mediator_covariate scenario."""
    joint = []
    for s in range(scenario.n_strata):
        prior = scenario.covariate_prior[s]  # type: ignore[index]
        expo = scenario.exposure[s]  # type: ignore[index]
        m_pair = scenario.mediator_pair(s)
        p_m_given_s = expo * m_pair[1] + (1.0 - expo) * m_pair[0]
        if m == 0:
            p_m_given_s = 1.0 - p_m_given_s
        joint.append(prior * p_m_given_s)
    p_m = sum(joint)
    if p_m <= 0.0:
        raise UndefinedConditionalError(f"P(M={m}) = 0: the collapsed response table P(R=1|M={m}) is undefined")
    return tuple(j / p_m for j in joint)


def true_marginal_response(scenario: Scenario, e: int) -> float:
    """P(R=1|E=e) under the joint law, whatever the structure.

    For mediator structures this is the chain marginal (the model has no
    other path); for covariate structures it mixes strata with the
    posterior weights, so it needs P(E=e) > 0.
    """
    st = scenario.structure
    if st is Structure.BASIC:
        return scenario.response[e]
    if st is Structure.MEDIATOR:
        return chain_response(scenario.mediator, scenario.response, e)  # type: ignore[arg-type]
    weights = _stratum_posterior(scenario, e)
    total = 0.0
    for s in range(scenario.n_strata):
        if st.has_mediator:
            value = chain_response(scenario.mediator_pair(s), scenario.response_pair(s), e)
        else:
            value = scenario.response_pair(s)[e]
        total += weights[s] * value
    return total


def _collapse_covariate(scenario: Scenario) -> Scenario:
    """Marginalize S out of the tables a covariate-blind analyst keeps."""
    st = scenario.structure
    p_e1 = _exposure_marginal(scenario)
    if st is Structure.COVARIATE:
        response = (true_marginal_response(scenario, 0), true_marginal_response(scenario, 1))
        return Scenario(Structure.BASIC, response, None, p_e1)
    # mediator_covariate: collapse M|E over P(S|E=e) and R|M over P(S|M=m)
    mediator = []
    for e in (0, 1):
        weights = _stratum_posterior(scenario, e)
        mediator.append(sum(weights[s] * scenario.mediator_pair(s)[e] for s in range(scenario.n_strata)))
    response = []
    for m in (0, 1):
        weights = _mediator_posterior(scenario, m)
        response.append(sum(weights[s] * scenario.response_pair(s)[m] for s in range(scenario.n_strata)))
    return Scenario(Structure.MEDIATOR, tuple(response), tuple(mediator), p_e1)


def _collapse_mediator(scenario: Scenario) -> Scenario:
    """Replace the mediator tables by the chain marginals they induce."""
    if scenario.structure is Structure.MEDIATOR:
        response = (
            chain_response(scenario.mediator, scenario.response, 0),  # type: ignore[arg-type]
            chain_response(scenario.mediator, scenario.response, 1),  # type: ignore[arg-type]
        )
        return Scenario(Structure.BASIC, response, None, scenario.exposure)
    # mediator_covariate -> covariate with per-stratum chain responses
    response = tuple(
        (
            chain_response(scenario.mediator_pair(s), scenario.response_pair(s), 0),
            chain_response(scenario.mediator_pair(s), scenario.response_pair(s), 1),
        )
        for s in range(scenario.n_strata)
    )
    return Scenario(Structure.COVARIATE, response, None, scenario.exposure, scenario.covariate_prior)


def reduce_scenario(scenario: Scenario, mode: AnalysisMode) -> Scenario:
    """The scenario as seen by an analyst ignoring what `mode` ignores.

    Only reductions the structure supports are allowed: a mode may drop M
    or S only where they exist.  Dropping both collapses S first, which
    equals dropping the structure to basic via the true joint marginals.
    """
    st = scenario.structure
    if mode.drops_mediator and not st.has_mediator:
        raise InapplicableModeError(f"mode {mode.value} drops M, but structure {st.value} has no mediator")
    if mode.drops_covariate and not st.has_covariate:
        raise InapplicableModeError(f"mode {mode.value} drops S, but structure {st.value} has no covariate")
    if mode is AnalysisMode.FULL:
        return scenario
    if mode is AnalysisMode.IGNORE_BOTH:
        response = (true_marginal_response(scenario, 0), true_marginal_response(scenario, 1))
        return Scenario(Structure.BASIC, response, None, _exposure_marginal(scenario))
    if mode is AnalysisMode.IGNORE_MEDIATOR:
        return _collapse_mediator(scenario)
    return _collapse_covariate(scenario)


def _quad(mediator_pair: Pair, response_pair: Pair) -> Quad:
    """(a, b, c, d) = (P(M=0|E=0), P(M=1|E=1), P(R=0|M=0), P(R=1|M=1))."""
    return (
        1.0 - mediator_pair[0],
        mediator_pair[1],
        1.0 - response_pair[0],
        response_pair[1],
    )


def _observe_reduced(scenario: Scenario, mode: AnalysisMode) -> ObservableSet:
    st = scenario.structure
    notes: tuple[str, ...] = ()
    if st is Structure.BASIC:
        p0, p1 = scenario.response
        rr, rr_notes = _risk_ratio(p1, p0)
        return ObservableSet(st, mode, p1, p0, rr, notes=notes + rr_notes)

    if st is Structure.MEDIATOR:
        p0 = chain_response(scenario.mediator, scenario.response, 0)  # type: ignore[arg-type]
        p1 = chain_response(scenario.mediator, scenario.response, 1)  # type: ignore[arg-type]
        rr, rr_notes = _risk_ratio(p1, p0)
        notes += ("P(R=1|E=e) is the chain marginal through M",) + rr_notes
        return ObservableSet(st, mode, p1, p0, rr, mediator_summary=_quad(scenario.mediator, scenario.response), notes=notes)  # type: ignore[arg-type]

    weights = _stratum_posterior(scenario, 1)
    if st is Structure.COVARIATE:
        stratum_response = tuple(scenario.response_pair(s) for s in range(scenario.n_strata))
        quads = None
    else:
        stratum_response = tuple(
            (
                chain_response(scenario.mediator_pair(s), scenario.response_pair(s), 0),
                chain_response(scenario.mediator_pair(s), scenario.response_pair(s), 1),
            )
            for s in range(scenario.n_strata)
        )
        quads = tuple(_quad(scenario.mediator_pair(s), scenario.response_pair(s)) for s in range(scenario.n_strata))
        notes += ("per-stratum P(R=1|E=e,S=s) is the chain marginal through M",)
    p1 = 0.0
    for s in range(scenario.n_strata):
        p1 += weights[s] * stratum_response[s][1]
    try:
        p0 = true_marginal_response(scenario, 0)
    except UndefinedConditionalError:
        p0 = None
        notes += ("P(E=0) = 0: marginal P(R=1|E=0) unavailable",)
    rr, rr_notes = _risk_ratio(p1, p0)
    return ObservableSet(
        st,
        mode,
        p1,
        p0,
        rr,
        stratum_weights=weights,
        stratum_response=stratum_response,
        stratum_mediator_summary=quads,
        notes=notes + rr_notes,
    )


def derive_observables(scenario: Scenario, mode: AnalysisMode = AnalysisMode.FULL) -> ObservableSet:
    """Reduce per `mode`, then summarize what the formulas will consume.

    When the collapsed view's chain marginals differ from the original
    joint law (they can, once a covariate has been mixed away), the true
    marginals ride along with a note naming both values.
    """
    reduced = reduce_scenario(scenario, mode)
    observed = _observe_reduced(reduced, mode)
    if mode is AnalysisMode.FULL or reduced.structure is not Structure.MEDIATOR:
        return observed
    # a mediator-form analysis of a collapsed scenario reconstructs marginals
    # through the chain; compare against the joint law of what was dropped
    truth1 = true_marginal_response(scenario, 1)
    try:
        truth0 = true_marginal_response(scenario, 0)
    except UndefinedConditionalError:
        truth0 = None
    if _differs(observed.p_r1_given_e1, truth1) or _differs(observed.p_r1_given_e0, truth0):
        note = (
            "chain-reconstructed marginals (consumed by the formulas) differ from the joint law: "
            f"P(R=1|E=1) {observed.p_r1_given_e1:.12g} vs {truth1:.12g}"
        )
        if observed.p_r1_given_e0 is not None and truth0 is not None:
            note += f", P(R=1|E=0) {observed.p_r1_given_e0:.12g} vs {truth0:.12g}"
        return ObservableSet(
            observed.structure,
            mode,
            observed.p_r1_given_e1,
            observed.p_r1_given_e0,
            observed.risk_ratio,
            mediator_summary=observed.mediator_summary,
            marginal_p_r1_given_e1=truth1,
            marginal_p_r1_given_e0=truth0,
            notes=observed.notes + (note,),
        )
    return observed


def _differs(reconstructed: float | None, truth: float | None, tolerance: float = 1e-12) -> bool:
    if reconstructed is None or truth is None:
        return (reconstructed is None) != (truth is None)
    return abs(reconstructed - truth) > tolerance
