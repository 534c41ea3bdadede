"""Graded vector spaces recorded as degree -> rank maps.

Only ranks are tracked; no coefficient field is ever materialized.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping


class GradedVectorSpace:
    """A finite-dimensional graded vector space, stored as its nonzero ranks.

    Instances are immutable and hashable. Zero ranks are dropped on
    construction, so two spaces are equal exactly when their rank maps agree.
    """

    __slots__ = ("_ranks",)

    def __init__(self, ranks: Mapping[int, int] | None = None):
        clean = {}
        for deg, rk in (ranks or {}).items():
            if isinstance(deg, bool) or int(deg) != deg:
                raise TypeError(f"degree must be an integer, got {deg!r}")
            if isinstance(rk, bool) or int(rk) != rk or rk < 0:
                raise ValueError(f"rank must be a nonnegative integer, got {rk!r}")
            if rk:
                clean[int(deg)] = int(rk)
        self._ranks = tuple(sorted(clean.items()))

    @classmethod
    def from_dense(cls, ranks: Iterable[int], start: int = 0) -> "GradedVectorSpace":
        """Build from ranks listed by ascending degree beginning at ``start``."""
        return cls({start + i: r for i, r in enumerate(ranks)})

    @classmethod
    def point(cls) -> "GradedVectorSpace":
        return cls({0: 1})

    @classmethod
    def sphere(cls, dim: int = 2) -> "GradedVectorSpace":
        return cls({0: 1, dim: 1})

    def to_dense(self) -> list[int]:
        """Ranks by ascending degree from 0; negative degrees are not allowed."""
        if not self._ranks:
            return []
        if self._ranks[0][0] < 0:
            raise ValueError("dense form starts at degree 0; space has negative degrees")
        out = [0] * (self._ranks[-1][0] + 1)
        for deg, rk in self._ranks:
            out[deg] = rk
        return out

    def as_dict(self) -> dict[int, int]:
        return dict(self._ranks)

    def rank(self, degree: int) -> int:
        for deg, rk in self._ranks:
            if deg == degree:
                return rk
        return 0

    def degrees(self) -> list[int]:
        return [deg for deg, _ in self._ranks]

    @property
    def total_rank(self) -> int:
        return sum(rk for _, rk in self._ranks)

    def euler_characteristic(self) -> int:
        return sum(rk if deg % 2 == 0 else -rk for deg, rk in self._ranks)

    def is_zero(self) -> bool:
        return not self._ranks

    def shift(self, d: int) -> "GradedVectorSpace":
        return GradedVectorSpace({deg + d: rk for deg, rk in self._ranks})

    def __add__(self, other: "GradedVectorSpace") -> "GradedVectorSpace":
        if not isinstance(other, GradedVectorSpace):
            return NotImplemented
        out = dict(self._ranks)
        for deg, rk in other._ranks:
            out[deg] = out.get(deg, 0) + rk
        return GradedVectorSpace(out)

    def degreewise_max(self, other: "GradedVectorSpace") -> "GradedVectorSpace":
        out = dict(self._ranks)
        for deg, rk in other._ranks:
            out[deg] = max(out.get(deg, 0), rk)
        return GradedVectorSpace(out)

    def dominated_by(self, other: "GradedVectorSpace") -> bool:
        """True iff rank(k) <= other.rank(k) in every degree."""
        return all(rk <= other.rank(deg) for deg, rk in self._ranks)

    def is_palindromic(self, center) -> bool:
        c2 = Fraction(center) * 2
        if c2.denominator != 1:
            raise ValueError(f"center must be an integer or half-integer, got {center!r}")
        c2 = int(c2)
        return all(self.rank(c2 - deg) == rk for deg, rk in self._ranks)

    def poincare_string(self, var: str = "t") -> str:
        if not self._ranks:
            return "0"
        terms = []
        for deg, rk in self._ranks:
            if deg == 0:
                terms.append(str(rk))
                continue
            mono = var if deg == 1 else f"{var}^{deg}"
            terms.append(mono if rk == 1 else f"{rk}*{mono}")
        return " + ".join(terms)

    def __eq__(self, other):
        if isinstance(other, GradedVectorSpace):
            return self._ranks == other._ranks
        if isinstance(other, Mapping):
            return self == GradedVectorSpace(other)
        return NotImplemented

    def __hash__(self):
        return hash(self._ranks)

    def __bool__(self):
        return bool(self._ranks)

    def __repr__(self):
        body = ", ".join(f"{deg}: {rk}" for deg, rk in self._ranks)
        return f"GradedVectorSpace({{{body}}})"

    def __str__(self):
        return self.poincare_string()


ZERO = GradedVectorSpace()


def shift(V: GradedVectorSpace, d: int) -> GradedVectorSpace:
    """Cohomological shift: content in degree k moves to degree k + d."""
    return V.shift(d)


def direct_sum(Vs: Iterable[GradedVectorSpace]) -> GradedVectorSpace:
    out = ZERO
    for V in Vs:
        out = out + V
    return out


def is_palindromic(V: GradedVectorSpace, center) -> bool:
    return V.is_palindromic(center)


def poincare_string(V: GradedVectorSpace) -> str:
    return V.poincare_string()
