"""Graded Floer cohomology of core components and a Maslov index engine.

Floer groups of core components are read off the clean intersections: the
group for (L_i, L_j) is the cohomology of L_i & L_j shifted up by the complex
codimension of the intersection inside L_i.  The shift is cross-checked by a
Robbin-Salamon index computation on the diagonal unitary path that rotates
the complement of the intersection half a quarter-turn each way.

All angles are exact rational multiples of pi and all indices are stored
doubled, so nothing here touches floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .errors import FloerError
from .graded import GradedVectorSpace
from .model import CoreModel


@dataclass(frozen=True, order=True)
class HalfInteger:
    doubled: int

    @classmethod
    def of(cls, value) -> "HalfInteger":
        twice = Fraction(value) * 2
        if twice.denominator != 1:
            raise ValueError(f"{value!r} is not a half-integer")
        return cls(int(twice))

    def __add__(self, other: "HalfInteger") -> "HalfInteger":
        return HalfInteger(self.doubled + other.doubled)

    def __neg__(self) -> "HalfInteger":
        return HalfInteger(-self.doubled)

    def __sub__(self, other: "HalfInteger") -> "HalfInteger":
        return self + (-other)

    @property
    def value(self) -> Fraction:
        return Fraction(self.doubled, 2)

    def is_integer(self) -> bool:
        return self.doubled % 2 == 0

    def __int__(self):
        if not self.is_integer():
            raise ValueError(f"{self} is not an integer")
        return self.doubled // 2

    def __str__(self):
        return str(self.value)


def _exact(x, what: str) -> Fraction:
    if isinstance(x, float) or not isinstance(x, (Rational, str)):
        raise TypeError(f"{what} must be an exact rational multiple of pi, got {x!r}")
    return Fraction(x)


@dataclass(frozen=True)
class PhasePath:
    """A path of Lagrangian subspaces of C^n, diagonal in a unitary frame.

    Coordinate j is the real line e^{i theta_j(t)} R with
    theta_j(t) = pi * (alpha_j + beta_j t) for t in [0, 1]; the reference
    Lagrangian has angles pi * reference_j.  Angles are recorded in units
    of pi.
    """

    phases: tuple[tuple[Fraction, Fraction], ...]
    reference: tuple[Fraction, ...]

    def __init__(self, phases, reference):
        phases = tuple((_exact(a, "alpha"), _exact(b, "beta")) for a, b in phases)
        reference = tuple(_exact(r, "reference") for r in reference)
        if len(phases) != len(reference):
            raise ValueError("phases and reference must have the same length")
        object.__setattr__(self, "phases", phases)
        object.__setattr__(self, "reference", reference)

    @property
    def dimension(self) -> int:
        return len(self.phases)

    def restrict(self, s0, s1) -> "PhasePath":
        """The sub-path on [s0, s1], reparametrised over [0, 1]."""
        s0, s1 = Fraction(s0), Fraction(s1)
        return PhasePath(
            [(a + b * s0, b * (s1 - s0)) for a, b in self.phases], self.reference
        )

    def reversed(self) -> "PhasePath":
        return PhasePath([(a + b, -b) for a, b in self.phases], self.reference)

    def __add__(self, other: "PhasePath") -> "PhasePath":
        return PhasePath(self.phases + other.phases, self.reference + other.reference)

    def crossings(self, j: int) -> list[Fraction]:
        """Crossing times of coordinate j; empty if it never or always crosses."""
        a, b = self.phases[j]
        if b == 0:
            return []
        lo, hi = sorted((a - self.reference[j], a + b - self.reference[j]))
        return [
            (m - (a - self.reference[j])) / b
            for m in range(math.ceil(lo), math.floor(hi) + 1)
        ]


def _coordinate_index(path: PhasePath, j: int) -> int:
    """Doubled Robbin-Salamon index of one coordinate line."""
    _, b = path.phases[j]
    sign = (b > 0) - (b < 0)
    total = 0
    for t in path.crossings(j):
        total += sign if t in (0, 1) else 2 * sign
    return total


def rs_index(path: PhasePath) -> HalfInteger:
    """Robbin-Salamon index of a diagonal path relative to its reference.

    Each coordinate is a rotating line whose crossing form at a crossing
    has the sign of its angular speed; interior crossings count fully and
    endpoint crossings count half.  Coordinates that sit on the reference
    for all t contribute zero.
    """
    return HalfInteger(sum(_coordinate_index(path, j) for j in range(path.dimension)))


def balanced_path(n: int, k: int, reference=Fraction(1, 2)) -> PhasePath:
    """k frozen coordinates, then (n-k)/2 turning by +pi/2 and (n-k)/2 by -pi/2."""
    if n < 1 or n % 2 or k % 2 or not 0 <= k <= n:
        raise ValueError(f"need n positive even and k even with 0 <= k <= n, got n={n}, k={k}")
    ref = Fraction(reference)
    half = (n - k) // 2
    quarter = Fraction(1, 2)
    phases = [(ref, 0)] * k + [(ref, quarter)] * half + [(ref, -quarter)] * half
    return PhasePath(phases, [ref] * n)


@dataclass(frozen=True)
class GradingShift:
    d_codim: int
    d_index: HalfInteger
    agree: bool


def _require_weight1(model: CoreModel):
    if not model.is_weight1:
        raise FloerError(f"model {model.name!r} is not flagged weight-1")


def hf_self(model: CoreModel, cid: str) -> GradedVectorSpace:
    try:
        comp = model.component(cid)
    except KeyError:
        raise FloerError(f"unknown component {cid!r}") from None
    if 2 * comp.complex_dim != model.complex_dim_M:
        raise FloerError(
            f"component {cid!r} has complex dimension {comp.complex_dim}, "
            f"not half of {model.complex_dim_M}"
        )
    return comp.betti


def hf_pair(model: CoreModel, ci: str, cj: str) -> GradedVectorSpace:
    _require_weight1(model)
    if ci == cj:
        return hf_self(model, ci)
    try:
        li = model.component(ci)
        model.component(cj)
    except KeyError as exc:
        raise FloerError(f"unknown component {exc.args[0]!r}") from None
    inter = model.intersection(ci, cj)
    if inter is None:
        return GradedVectorSpace()
    return inter.betti.shift(li.complex_dim - inter.complex_dim)


def grading_shift(model: CoreModel, ci: str, cj: str) -> GradingShift:
    """Compare the codimension shift with the Maslov-index shift for one pair."""
    try:
        li = model.component(ci)
        model.component(cj)
    except KeyError as exc:
        raise FloerError(f"unknown component {exc.args[0]!r}") from None
    if ci == cj:
        s_dim = li.complex_dim
    else:
        inter = model.intersection(ci, cj)
        if inter is None:
            raise FloerError(f"{ci} and {cj} do not intersect")
        s_dim = inter.complex_dim
    dim_m = model.complex_dim_M
    d_codim = li.complex_dim - s_dim
    maslov = rs_index(balanced_path(dim_m, 2 * s_dim))
    d_index = maslov + HalfInteger(dim_m - 2 * s_dim)
    return GradingShift(d_codim, d_index, d_index.doubled == 2 * d_codim)


@dataclass(frozen=True)
class FloerTable:
    components: tuple[str, ...]
    entries: dict
    shifts: dict

    def entry(self, ci: str, cj: str) -> GradedVectorSpace:
        return self.entries[(ci, cj)]


def floer_table(model: CoreModel) -> FloerTable:
    _require_weight1(model)
    ids = tuple(model.component_ids())
    entries = {}
    shifts = {}
    for ci in ids:
        for cj in ids:
            entries[(ci, cj)] = hf_pair(model, ci, cj)
            if ci == cj or model.intersection(ci, cj) is not None:
                shifts[(ci, cj)] = grading_shift(model, ci, cj)
    return FloerTable(ids, entries, shifts)
