"""Greedy solvers with logarithmic approximation guarantees.

Total-scope problems reduce to multicover: pick neighbourhood sets until
every vertex is covered as often as its demand.  The greedy that always
takes the set covering the most still-unmet demand is a
``ln(largest set size) + 1`` approximation.

Partial-scope problems use the coverage potential from
:mod:`vecdom.feasibility` instead: grow the set by the vertex with the
largest marginal gain until the potential tops out.  The guarantee is
``ln(best single-vertex value) + 1``, which never exceeds
``ln(2 * max degree) + 1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InfeasibleError, WrongVariantError
from .feasibility import CoverageState, Solution, coverage_target, is_feasible
from .variants import Instance, Neighborhood, Scope

__all__ = [
    "MulticoverInstance",
    "greedy_multicover",
    "greedy_total_vector",
    "greedy_multiple_domination",
    "greedy_vector_domination",
]


@dataclass(frozen=True)
class MulticoverInstance:
    """Cover each element u of 0..universe_size-1 by requirement[u] distinct sets."""

    universe_size: int
    family: tuple[tuple[int, ...], ...]
    requirements: tuple[int, ...]

    def __post_init__(self) -> None:
        assert len(self.requirements) == self.universe_size

    def max_set_size(self) -> int:
        return max((len(s) for s in self.family), default=0)


def greedy_multicover(mc: MulticoverInstance) -> tuple[int, ...]:
    """Indices of the chosen sets, in selection order.

    Each round selects the set covering the most elements with unmet
    requirement, ties broken by smallest index.  A set counts at most once
    per element, as multicover demands distinct sets.

    Raises:
        InfeasibleError: some element appears in fewer sets than required.
    """
    membership = [0] * mc.universe_size
    for s in mc.family:
        for u in s:
            membership[u] += 1
    for u, req in enumerate(mc.requirements):
        if req > membership[u]:
            raise InfeasibleError(
                f"element {u} needs {req} sets but appears in only {membership[u]}"
            )
    remaining = list(mc.requirements)
    outstanding = sum(remaining)
    unused = [True] * len(mc.family)
    picks: list[int] = []
    while outstanding > 0:
        best, best_score = -1, 0
        for i, s in enumerate(mc.family):
            if not unused[i]:
                continue
            score = sum(1 for u in s if remaining[u] > 0)
            if score > best_score:
                best, best_score = i, score
        assert best >= 0, "feasible multicover ran out of useful sets"
        unused[best] = False
        picks.append(best)
        for u in mc.family[best]:
            if remaining[u] > 0:
                remaining[u] -= 1
                outstanding -= 1
    return tuple(picks)


def _harmonic_style_bound(size: int) -> float:
    return math.log(size) + 1.0 if size > 1 else 1.0


def greedy_total_vector(inst: Instance) -> Solution:
    """Greedy for total scope with open neighbourhoods.

    Raises:
        InfeasibleError: some demand exceeds the vertex degree.
    """
    if inst.scope is not Scope.TOTAL or inst.neighborhood is not Neighborhood.OPEN:
        raise WrongVariantError("expected a total-scope open-neighbourhood instance")
    g = inst.graph
    for v in range(g.n):
        if inst.demands[v] > g.degree(v):
            raise InfeasibleError(
                f"vertex {v} demands {inst.demands[v]} of {g.degree(v)} neighbours"
            )
    mc = MulticoverInstance(g.n, g._adj, inst.demands)
    picks = greedy_multicover(mc)
    chosen = frozenset(picks)
    return Solution(
        vertices=chosen,
        status="feasible" if is_feasible(inst, chosen) else "infeasible",
        quality="approx",
        method="greedy-total-vector",
        bound=_harmonic_style_bound(g.max_degree()),
    )


def greedy_multiple_domination(inst: Instance) -> Solution:
    """Greedy for total scope with closed neighbourhoods.

    Raises:
        InfeasibleError: some demand exceeds degree plus one.
    """
    if inst.scope is not Scope.TOTAL or inst.neighborhood is not Neighborhood.CLOSED:
        raise WrongVariantError("expected a total-scope closed-neighbourhood instance")
    g = inst.graph
    for v in range(g.n):
        if inst.demands[v] > g.degree(v) + 1:
            raise InfeasibleError(
                f"vertex {v} demands {inst.demands[v]} of {g.degree(v) + 1} "
                "closed neighbours"
            )
    family = tuple(
        tuple(sorted(g.neighbors(v) + (v,))) for v in range(g.n)
    )
    mc = MulticoverInstance(g.n, family, inst.demands)
    picks = greedy_multicover(mc)
    chosen = frozenset(picks)
    return Solution(
        vertices=chosen,
        status="feasible" if is_feasible(inst, chosen) else "infeasible",
        quality="approx",
        method="greedy-multiple-domination",
        bound=_harmonic_style_bound(g.max_degree() + 1),
    )


def greedy_vector_domination(inst: Instance) -> Solution:
    """Submodular-cover greedy for partial scope with open neighbourhoods.

    Vertices whose demand exceeds their degree can never be served from
    outside, so they are seeded into the set up front.  Afterwards the
    vertex with the best marginal coverage gain is added until the
    potential reaches its maximum; ties fall to the smallest id.  Never
    infeasible: the full vertex set always works.
    """
    if inst.scope is not Scope.PARTIAL or inst.neighborhood is not Neighborhood.OPEN:
        raise WrongVariantError("expected a partial-scope open-neighbourhood instance")
    g = inst.graph
    demands = inst.demands
    state = CoverageState(inst)
    for v in range(g.n):
        if demands[v] > g.degree(v):
            state.add(v)
    target = coverage_target(inst)
    while state.value < target:
        best, best_gain = -1, 0
        for v in range(g.n):
            if v in state.members:
                continue
            gain = state.gain(v)
            if gain > best_gain:
                best, best_gain = v, gain
        assert best >= 0, "potential below target with no positive gain"
        state.add(best)
    # best single-vertex potential: own demand plus one per demanding neighbour
    best_single = max(
        (
            demands[v] + sum(1 for u in g.neighbors(v) if demands[u] > 0)
            for v in range(g.n)
        ),
        default=0,
    )
    chosen = frozenset(state.members)
    return Solution(
        vertices=chosen,
        status="feasible" if is_feasible(inst, chosen) else "infeasible",
        quality="approx",
        method="greedy-vector-domination",
        bound=_harmonic_style_bound(best_single),
        coarse_bound=_harmonic_style_bound(2 * g.max_degree()),
    )
