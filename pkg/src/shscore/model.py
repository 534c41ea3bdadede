"""Core models: components of the core, their intersections, and per-action fixed data."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional

from .graded import GradedVectorSpace

ISOLATED_POINT = "isolated-point"
FIXED_SPHERE = "fixed-sphere"


def natural_key(s: str):
    """Sort key that orders "S2" before "S10"."""
    return [int(tok) if tok.isdigit() else tok for tok in re.split(r"(\d+)", s)]


@dataclass(frozen=True)
class FixedComponent:
    """One connected component of the fixed locus of a C*-action.

    ``mu`` is the real dimension of the fibre of its t -> infinity attracting
    set; ``owner`` is the core component whose closure contains that
    attracting set, or None when the closure is not a core component.
    """

    id: str
    betti: GradedVectorSpace
    complex_dim: int
    mu: int
    owner: Optional[str]
    kind: str = ISOLATED_POINT
    tangent_weights: tuple[int, ...] = ()

    def euler_characteristic(self) -> int:
        return self.betti.euler_characteristic()


@dataclass(frozen=True)
class ActionFixedData:
    id: str
    fixed_components: tuple[FixedComponent, ...]
    weight1: bool
    shk: bool = False

    def minima(self) -> list[FixedComponent]:
        return [f for f in self.fixed_components if f.mu == 0]


@dataclass(frozen=True)
class Component:
    id: str
    complex_dim: int
    betti: GradedVectorSpace


@dataclass(frozen=True)
class Intersection:
    pair: tuple[str, str]
    betti: GradedVectorSpace
    complex_dim: int

    def is_points(self) -> bool:
        return self.complex_dim == 0 and set(self.betti.degrees()) <= {0}


@dataclass(frozen=True)
class QuiverData:
    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]

    def __post_init__(self):
        known = set(self.vertices)
        for tail, head in self.edges:
            if tail not in known or head not in known:
                raise ValueError(f"edge ({tail}, {head}) references an undeclared vertex")


@dataclass(frozen=True)
class CoreModel:
    name: str
    complex_dim_M: int
    components: tuple[Component, ...]
    intersections: tuple[Intersection, ...] = ()
    actions: tuple[ActionFixedData, ...] = ()
    core_betti_override: Optional[GradedVectorSpace] = None
    subcritical: Optional[bool] = None
    weight1_flag: Optional[bool] = None
    quiver: Optional[QuiverData] = None
    annotations: dict = field(default_factory=dict, compare=False, hash=False)

    @property
    def is_weight1(self) -> bool:
        """Explicit model flag if present, else whether any declared action is weight-1."""
        if self.weight1_flag is not None:
            return self.weight1_flag
        return any(a.weight1 for a in self.actions)

    def component(self, cid: str) -> Component:
        for c in self.components:
            if c.id == cid:
                return c
        raise KeyError(cid)

    def component_ids(self) -> list[str]:
        return [c.id for c in self.components]

    def action(self, aid: str) -> ActionFixedData:
        for a in self.actions:
            if a.id == aid:
                return a
        raise KeyError(aid)

    def intersection(self, a: str, b: str) -> Optional[Intersection]:
        key = frozenset((a, b))
        for inter in self.intersections:
            if frozenset(inter.pair) == key:
                return inter
        return None

    def weight1_actions(self) -> list[ActionFixedData]:
        return [a for a in self.actions if a.weight1]
