"""Rank-level bookkeeping for the homology decomposition of the core.

For a good C*-action the core's homology splits as the direct sum of the
fixed components' homologies, each shifted up by the real dimension of its
attracting fibre.  This module assembles that sum, computes the core's Betti
numbers independently from the component graph, and compares the two.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import DuplicateMinimum, MissingOverride
from .graded import GradedVectorSpace, direct_sum
from .model import ActionFixedData, CoreModel, natural_key


@dataclass(frozen=True)
class BettiCheck:
    ok: bool
    lhs: GradedVectorSpace
    rhs: GradedVectorSpace


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    action: Optional[str] = None
    detail: str = ""


def assemble(data: ActionFixedData) -> GradedVectorSpace:
    return direct_sum(f.betti.shift(f.mu) for f in data.fixed_components)


def _graph_components(vertices, edges) -> int:
    parent = {v: v for v in vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    return len({find(v) for v in vertices})


def core_betti(model: CoreModel) -> GradedVectorSpace:
    """Betti numbers of the union of the core components.

    Components meeting in finitely many points glue like a graph of spaces:
    b_0 counts connected pieces, b_1 adds the cycle rank of the intersection
    multigraph, and higher degrees are additive.  Anything else needs
    ``core_betti_override``.
    """
    if model.core_betti_override is not None:
        return model.core_betti_override
    for inter in model.intersections:
        if not inter.is_points():
            raise MissingOverride(
                f"intersection {inter.pair} is positive-dimensional; supply core_betti_override"
            )
    ids = model.component_ids()
    if not ids:
        return GradedVectorSpace()
    edges = []
    for inter in model.intersections:
        edges.extend([inter.pair] * inter.betti.rank(0))
    n_pieces = _graph_components(ids, edges)
    cycle_rank = len(edges) - len(ids) + n_pieces

    ranks: dict[int, int] = {0: n_pieces, 1: cycle_rank}
    for comp in model.components:
        for deg, rk in comp.betti.as_dict().items():
            if deg >= 1:
                ranks[deg] = ranks.get(deg, 0) + rk
    return GradedVectorSpace(ranks)


def verify_betti_relation(model: CoreModel, action_id: str) -> BettiCheck:
    data = model.action(action_id)
    lhs = assemble(data)
    rhs = core_betti(model)
    return BettiCheck(lhs == rhs, lhs, rhs)


def minimal_components(model: CoreModel, strict: bool = True) -> set[str]:
    """Owners of the mu = 0 components of all declared weight-1 actions.

    With ``strict`` a DuplicateMinimum is raised when two weight-1 actions
    claim the same minimal component.
    """
    seen: dict[str, str] = {}
    for action in model.weight1_actions():
        for f in action.minima():
            if f.owner is None:
                continue
            if f.owner in seen and strict:
                raise DuplicateMinimum(seen[f.owner], action.id, f.owner)
            seen.setdefault(f.owner, action.id)
    return set(seen)


def verify_model(model: CoreModel, action_id: str | None = None) -> list[Check]:
    """Run every structural check the decomposition theory predicts.

    Raises KeyError for an unknown ``action_id`` and MissingOverride when the
    core Betti numbers cannot be computed.
    """
    actions = list(model.actions) if action_id is None else [model.action(action_id)]
    checks: list[Check] = []

    if model.is_weight1:
        half = model.complex_dim_M / 2
        bad = [c.id for c in model.components if c.complex_dim != half]
        checks.append(Check(
            "pure_dimension", not bad,
            detail="all components half-dimensional" if not bad
            else "not half-dimensional: " + ", ".join(bad),
        ))

    rhs = core_betti(model)
    comp_ids = set(model.component_ids())
    for action in actions:
        lhs = assemble(action)
        checks.append(Check(
            "betti_relation", lhs == rhs, action.id,
            detail=f"fixed loci {lhs.poincare_string()} vs core {rhs.poincare_string()}",
        ))
        minima = action.minima()
        checks.append(Check(
            "minimal_uniqueness", len(minima) == 1, action.id,
            detail=f"{len(minima)} fixed component(s) with mu = 0",
        ))
        if action.weight1:
            owners = [f.owner for f in action.fixed_components]
            bijective = None not in owners and len(set(owners)) == len(owners) and set(owners) == comp_ids
            checks.append(Check(
                "owner_bijection", bijective, action.id,
                detail="owners: " + ", ".join(str(o) for o in owners),
            ))
            mismatched = [
                f.id for f in minima
                if f.owner is None or f.owner not in comp_ids
                or model.component(f.owner).betti != f.betti
            ]
            checks.append(Check(
                "minimum_is_component", not mismatched, action.id,
                detail="minimum coincides with its owner" if not mismatched
                else "mismatch at " + ", ".join(mismatched),
            ))

    if action_id is None:
        try:
            mins = minimal_components(model)
            checks.append(Check(
                "distinct_minima", True,
                detail="minimal set: " + (", ".join(sorted(mins, key=natural_key)) or "(none)"),
            ))
        except DuplicateMinimum as exc:
            checks.append(Check("distinct_minima", False, detail=str(exc)))
    return checks
