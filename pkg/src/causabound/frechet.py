"""Frechet limits for a pair of potential outcomes.

A binary variable V with potential versions V(0), V(1) has observable
margins p_e = P(V(e)=1) but an unobservable joint.  Writing
q = P(V(0)=1, V(1)=1), every joint consistent with the margins has

    max{0, p0 + p1 - 1}  <=  q  <=  min{p0, p1},

and every q in that interval is attainable.  The four joint cells are
affine in q, so their attainable ranges follow by evaluating at the two
ends.  This one fact powers both the oracle and the closed-form bounds.
"""

from __future__ import annotations

from dataclasses import dataclass

from .scenario import PROBABILITY_TOLERANCE


@dataclass(frozen=True, slots=True)
class FrechetBox:
    """Margins (p0, p1) with the induced range [q_min, q_max] for q."""

    p0: float
    p1: float
    q_min: float
    q_max: float

    def cell(self, v0: int, v1: int, q: float) -> float:
        """P(V(0)=v0, V(1)=v1) for a given joint parameter q."""
        if v0 == 1 and v1 == 1:
            return q
        if v0 == 1:
            return self.p0 - q
        if v1 == 1:
            return self.p1 - q
        return 1.0 - self.p0 - self.p1 + q

    def cell_range(self, v0: int, v1: int) -> tuple[float, float]:
        """Attainable range of the (v0, v1) cell over the whole box."""
        at_min = self.cell(v0, v1, self.q_min)
        at_max = self.cell(v0, v1, self.q_max)
        return (min(at_min, at_max), max(at_min, at_max))


def frechet_box(p0: float, p1: float) -> FrechetBox:
    """Build the box for margins p0 = P(V(0)=1), p1 = P(V(1)=1).

    Margins may overshoot [0, 1] by the validation tolerance (rounding in
    upstream collapses); they are clamped.  Larger excursions are rejected.
    """
    clamped = []
    for name, p in (("p0", p0), ("p1", p1)):
        if not -PROBABILITY_TOLERANCE <= p <= 1.0 + PROBABILITY_TOLERANCE:
            raise ValueError(f"{name} = {p!r} is not a probability")
        clamped.append(min(1.0, max(0.0, p)))
    p0, p1 = clamped
    q_max = min(p0, p1)
    # p0 + p1 - 1.0 can land one ulp above min(p0, p1) when a margin is 1.0
    q_min = min(q_max, max(0.0, p0 + p1 - 1.0))
    return FrechetBox(p0, p1, q_min, q_max)
