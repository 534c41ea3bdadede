"""Toric model of the minimal resolution of the A_n surface singularity.

Rays are v_i = (i, 1) for i = 0..n+1 and the smooth charts are the cones
cone(v_i, v_{i+1}).  A cocharacter lambda = (p, q) acts on the coordinate
functions X, Y, Z of the singular cone with weights (p, (n+1)q - p, q); the
holomorphic symplectic form has weight q.  Interior ray v_k (1 <= k <= n)
corresponds to the exceptional sphere S_k.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graded import GradedVectorSpace
from .model import (
    FIXED_SPHERE,
    ISOLATED_POINT,
    ActionFixedData,
    Component,
    CoreModel,
    FixedComponent,
    Intersection,
)


@dataclass(frozen=True)
class LatticeSubgroup:
    p: int
    q: int

    @property
    def coords(self) -> tuple[int, int]:
        return (self.p, self.q)

    def __add__(self, other: "LatticeSubgroup") -> "LatticeSubgroup":
        return LatticeSubgroup(self.p + other.p, self.q + other.q)

    def __str__(self):
        return f"({self.p},{self.q})"

    @property
    def label(self) -> str:
        return f"{self.p},{self.q}"

    @classmethod
    def parse(cls, text: str) -> "LatticeSubgroup":
        parts = text.replace("(", "").replace(")", "").split(",")
        if len(parts) != 2:
            raise ValueError(f"expected 'p,q', got {text!r}")
        try:
            p, q = (int(s.strip()) for s in parts)
        except ValueError:
            raise ValueError(f"expected two integers 'p,q', got {text!r}") from None
        return cls(p, q)


@dataclass(frozen=True)
class ChartWeights:
    chart: int
    a: int
    b: int


@dataclass(frozen=True)
class AnFan:
    n: int

    @property
    def rays(self) -> list[tuple[int, int]]:
        return [(i, 1) for i in range(self.n + 2)]

    @property
    def charts(self) -> list[tuple[tuple[int, int], tuple[int, int]]]:
        r = self.rays
        return [(r[i], r[i + 1]) for i in range(self.n + 1)]

    def chart_determinant(self, i: int) -> int:
        (a, b), (c, d) = self.charts[i]
        return a * d - b * c

    def singular_cone_determinant(self) -> int:
        (a, b), (c, d) = self.rays[0], self.rays[-1]
        return a * d - b * c

    def sphere_ids(self) -> list[str]:
        return [f"S{k}" for k in range(1, self.n + 1)]


def build_fan(n: int) -> AnFan:
    if n < 1:
        raise ValueError(f"A_n needs n >= 1, got {n}")
    return AnFan(n)


def character_weights(fan: AnFan, lam: LatticeSubgroup) -> tuple[int, int, int]:
    """Weights of X, Y, Z: pairings of lambda with (1,0), (-1,n+1), (0,1)."""
    p, q = lam.coords
    return (p, -p + (fan.n + 1) * q, q)


def symplectic_weight(lam: LatticeSubgroup) -> int:
    return lam.q


def is_conical(fan: AnFan, lam: LatticeSubgroup) -> bool:
    return all(w > 0 for w in character_weights(fan, lam))


def chart_weights(fan: AnFan, i: int, lam: LatticeSubgroup) -> ChartWeights:
    """Weights of lambda on the two coordinates of chart i.

    The coordinates are the characters m1 = (-1, i+1) and m2 = (1, -i),
    the dual basis of (v_i, v_{i+1}).
    """
    if not 0 <= i <= fan.n:
        raise IndexError(f"chart index {i} out of range 0..{fan.n}")
    p, q = lam.coords
    return ChartWeights(i, -p + (i + 1) * q, p - i * q)


def fixed_ray(fan: AnFan, lam: LatticeSubgroup) -> int | None:
    """Index k of the interior ray lambda is a positive multiple of, if any."""
    p, q = lam.coords
    if q > 0 and p % q == 0 and 1 <= p // q <= fan.n:
        return p // q
    return None


def _point_owner(fan: AnFan, cw: ChartWeights) -> str | None:
    # The negative-weight axis is the attracting curve; its closure is the
    # toric divisor of the ray along which that coordinate does not vanish.
    if cw.a < 0:
        return f"S{cw.chart + 1}"
    if cw.b < 0:
        return f"S{cw.chart}"
    return None


def fixed_locus(fan: AnFan, lam: LatticeSubgroup) -> list[FixedComponent]:
    if not is_conical(fan, lam):
        raise ValueError(f"lambda={lam} is not conical on A_{fan.n}")
    k = fixed_ray(fan, lam)
    out = []
    if k is not None:
        m = lam.q
        out.append(FixedComponent(
            id=f"S{k}",
            betti=GradedVectorSpace.sphere(),
            complex_dim=1,
            mu=0,
            owner=f"S{k}",
            kind=FIXED_SPHERE,
            tangent_weights=(0, m),
        ))
    for i in range(fan.n + 1):
        if k is not None and i in (k - 1, k):
            continue
        cw = chart_weights(fan, i, lam)
        negatives = sum(1 for w in (cw.a, cw.b) if w < 0)
        out.append(FixedComponent(
            id=f"p{i}",
            betti=GradedVectorSpace.point(),
            complex_dim=0,
            mu=2 * negatives,
            owner=_point_owner(fan, cw),
            kind=ISOLATED_POINT,
            tangent_weights=(cw.a, cw.b),
        ))
    return out


def enumerate_weight1(fan: AnFan) -> list[LatticeSubgroup]:
    # weight 1 forces q = 1; conicality is then 0 < p < n+1
    return [LatticeSubgroup(k, 1) for k in range(1, fan.n + 1)]


def minimal_component(fan: AnFan, lam: LatticeSubgroup) -> FixedComponent:
    """The unique fixed component with mu = 0.

    It is a core component (a fixed sphere) exactly when lambda is a multiple
    of an interior ray; otherwise it is an isolated point, which is not
    Lagrangian.
    """
    minima = [f for f in fixed_locus(fan, lam) if f.mu == 0]
    assert len(minima) == 1, minima
    return minima[0]


def compose(lam1: LatticeSubgroup, lam2: LatticeSubgroup) -> LatticeSubgroup:
    return lam1 + lam2


def is_even(lam: LatticeSubgroup) -> bool:
    return lam.p % 2 == 0 and lam.q % 2 == 0


def disjoint_minima(fan: AnFan, lam1: LatticeSubgroup, lam2: LatticeSubgroup) -> bool:
    for lam in (lam1, lam2):
        if symplectic_weight(lam) != 1 or not is_conical(fan, lam):
            raise ValueError(f"lambda={lam} is not a weight-1 conical action")
    j, k = fixed_ray(fan, lam1), fixed_ray(fan, lam2)
    return abs(j - k) >= 2


def action_fixed_data(fan: AnFan, lam: LatticeSubgroup) -> ActionFixedData:
    return ActionFixedData(
        id=lam.label,
        fixed_components=tuple(fixed_locus(fan, lam)),
        weight1=symplectic_weight(lam) == 1,
        shk=True,
    )


def to_core_model(fan: AnFan, actions: list[LatticeSubgroup] | None = None) -> CoreModel:
    """Core model of A_n: a chain of spheres meeting adjacent neighbours in a point."""
    if actions is None:
        actions = enumerate_weight1(fan)
    for lam in actions:
        if not is_conical(fan, lam):
            raise ValueError(f"lambda={lam} is not conical on A_{fan.n}")
    ids = fan.sphere_ids()
    components = tuple(Component(s, 1, GradedVectorSpace.sphere()) for s in ids)
    intersections = tuple(
        Intersection((ids[i], ids[i + 1]), GradedVectorSpace.point(), 0)
        for i in range(len(ids) - 1)
    )
    return CoreModel(
        name=f"A{fan.n}",
        complex_dim_M=2,
        components=components,
        intersections=intersections,
        actions=tuple(action_fixed_data(fan, lam) for lam in actions),
        annotations={
            "known_sh_ranks": {"2": fan.n},
            "sh_vanishes_above": 2,
            "source": "known value for A_n: rk SH^2 = n, zero in higher degrees",
        },
    )


def conical_in_box(fan: AnFan, bound: int) -> list[LatticeSubgroup]:
    """All conical lambda with |p|, |q| <= bound, in lexicographic order."""
    return [
        LatticeSubgroup(p, q)
        for p in range(-bound, bound + 1)
        for q in range(-bound, bound + 1)
        if is_conical(fan, LatticeSubgroup(p, q))
    ]

