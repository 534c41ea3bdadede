"""Graded affine cones given by generators with multi-weights and relations.

A presentation lists the generators of the coordinate ring with their
weights in Z^r, homogeneous relations among them, and the covector that
reads off the weight of the holomorphic symplectic form.  A cocharacter
lambda in Z^r is conical when it pairs positively with every generator.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

from .errors import InhomogeneousRelation, ModelError
from .model import QuiverData


@dataclass(frozen=True)
class Variable:
    name: str
    weights: tuple[int, ...]


@dataclass(frozen=True)
class Monomial:
    coeff: Fraction
    exps: tuple[int, ...]


@dataclass(frozen=True)
class ConePresentation:
    variables: tuple[Variable, ...]
    relations: tuple[tuple[Monomial, ...], ...]
    sympl_covector: tuple[int, ...]

    def __post_init__(self):
        r = len(self.sympl_covector)
        for v in self.variables:
            if len(v.weights) != r:
                raise ModelError(f"variable {v.name!r} has {len(v.weights)} weights, expected {r}")
        for idx, rel in enumerate(self.relations):
            for mono in rel:
                if len(mono.exps) != len(self.variables):
                    raise ModelError(f"relation {idx}: exponent vector length mismatch")
                if any(e < 0 for e in mono.exps):
                    raise ModelError(f"relation {idx}: negative exponent in {mono.exps}")

    @property
    def rank(self) -> int:
        return len(self.sympl_covector)

    def monomial_weight(self, exps) -> tuple[int, ...]:
        return tuple(
            sum(e * v.weights[j] for e, v in zip(exps, self.variables))
            for j in range(self.rank)
        )

    @classmethod
    def from_json(cls, doc: dict) -> "ConePresentation":
        try:
            variables = tuple(Variable(v["name"], tuple(int(w) for w in v["weights"])) for v in doc["variables"])
            relations = tuple(
                tuple(Monomial(Fraction(str(m["coeff"])), tuple(int(e) for e in m["exps"])) for m in rel)
                for rel in doc.get("relations", [])
            )
            covector = tuple(int(c) for c in doc["sympl_covector"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ModelError(f"malformed presentation: {exc}") from None
        return cls(variables, relations, covector)

    def to_json(self) -> dict:
        return {
            "variables": [{"name": v.name, "weights": list(v.weights)} for v in self.variables],
            "relations": [
                [{"coeff": str(m.coeff), "exps": list(m.exps)} for m in rel]
                for rel in self.relations
            ],
            "sympl_covector": list(self.sympl_covector),
        }


def an_presentation(n: int) -> ConePresentation:
    """XY - Z^{n+1} with X, Y, Z graded by (1,0), (-1,n+1), (0,1)."""
    if n < 1:
        raise ValueError(f"A_n needs n >= 1, got {n}")
    return ConePresentation(
        variables=(
            Variable("X", (1, 0)),
            Variable("Y", (-1, n + 1)),
            Variable("Z", (0, 1)),
        ),
        relations=((Monomial(Fraction(1), (1, 1, 0)), Monomial(Fraction(-1), (0, 0, n + 1))),),
        sympl_covector=(0, 1),
    )


def check_homogeneous(P: ConePresentation) -> list[tuple[int, ...] | None]:
    """Common weight vector of each relation (None for a relation with no terms)."""
    out = []
    for idx, rel in enumerate(P.relations):
        terms = [m for m in rel if m.coeff != 0]
        if not terms:
            out.append(None)
            continue
        first = terms[0]
        w0 = P.monomial_weight(first.exps)
        for m in terms[1:]:
            w = P.monomial_weight(m.exps)
            if w != w0:
                raise InhomogeneousRelation(idx, (first.exps, w0), (m.exps, w))
        out.append(w0)
    return out


@dataclass(frozen=True)
class CharacterClass:
    conical: bool
    sympl_weight: int
    generator_weights: tuple[int, ...]


def _pair(u, v) -> int:
    return sum(a * b for a, b in zip(u, v))


def classify_character(P: ConePresentation, lam) -> CharacterClass:
    lam = tuple(lam)
    if len(lam) != P.rank:
        raise ValueError(f"lambda has length {len(lam)}, presentation has rank {P.rank}")
    gw = tuple(_pair(v.weights, lam) for v in P.variables)
    return CharacterClass(all(w > 0 for w in gw), _pair(P.sympl_covector, lam), gw)


def _fm_bounds(rows: list[tuple[list[Fraction], Fraction]], r: int, j: int):
    """Exact range of x_j over {x : a.x >= b for (a, b) in rows} by Fourier-Motzkin.

    Returns None if the system is infeasible, else (lo, hi) with None for an
    unbounded side.
    """
    order = [i for i in range(r) if i != j]
    for i in order:
        pos = [(a, b) for a, b in rows if a[i] > 0]
        neg = [(a, b) for a, b in rows if a[i] < 0]
        keep = [(a, b) for a, b in rows if a[i] == 0]
        for (ap, bp), (an, bn) in itertools.product(pos, neg):
            cp, cn = ap[i], -an[i]
            keep.append(([cn * x + cp * y for x, y in zip(ap, an)], cn * bp + cp * bn))
        rows = keep
    lo = hi = None
    for a, b in rows:
        c = a[j]
        if c == 0:
            if b > 0:
                return None
        elif c > 0:
            lo = b / c if lo is None else max(lo, b / c)
        else:
            hi = b / c if hi is None else min(hi, b / c)
    if lo is not None and hi is not None and lo > hi:
        return None
    return lo, hi


def _complete_in_box(P: ConePresentation, bound: int) -> bool:
    """Certificate that no lattice solution lies outside the box.

    Integer lambda is conical of weight 1 iff it satisfies <w_v, lambda> >= 1
    for every generator and <c, lambda> = 1.  If that rational polyhedron is
    empty or sits inside the box, the box scan is exhaustive.
    """
    r = P.rank
    rows = [([Fraction(x) for x in v.weights], Fraction(1)) for v in P.variables]
    rows.append(([Fraction(x) for x in P.sympl_covector], Fraction(1)))
    rows.append(([Fraction(-x) for x in P.sympl_covector], Fraction(-1)))
    for j in range(r):
        rng = _fm_bounds(rows, r, j)
        if rng is None:
            return True
        lo, hi = rng
        if lo is None or hi is None or lo < -bound or hi > bound:
            return False
    return True


def enumerate_weight1(P: ConePresentation, bound: int) -> tuple[list[tuple[int, ...]], bool]:
    """Weight-1 conical characters with every |lambda_j| <= bound, sorted.

    The scan walks the slice <c, lambda> = 1 of the box.  The flag reports
    whether the list is provably the full set of such characters.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    c = P.sympl_covector
    pivots = [j for j, cj in enumerate(c) if cj != 0]
    found = []
    if pivots:
        piv = pivots[0]
        free = [j for j in range(P.rank) if j != piv]
        for vals in itertools.product(range(-bound, bound + 1), repeat=len(free)):
            rest = 1 - sum(c[j] * v for j, v in zip(free, vals))
            if rest % c[piv]:
                continue
            x = rest // c[piv]
            if abs(x) > bound:
                continue
            lam = [0] * P.rank
            for j, v in zip(free, vals):
                lam[j] = v
            lam[piv] = x
            if classify_character(P, lam).conical:
                found.append(tuple(lam))
    found.sort()
    return found, _complete_in_box(P, bound)


def phi_exponents(weights: list[int]) -> tuple[int, list[int]]:
    """Common weight w = lcm(w_j) and the even exponents 2w / w_j."""
    if not weights:
        raise ValueError("need at least one generator weight")
    if any(w < 1 for w in weights):
        raise ValueError(f"generator weights must be positive, got {weights}")
    w = reduce(math.lcm, weights)
    return w, [2 * w // wj for wj in weights]


@dataclass(frozen=True)
class QuiverVerdict:
    admissible: bool
    subcritical: bool
    loops: tuple[tuple[str, str], ...] = ()


def quiver_weight1_admissible(Q: QuiverData) -> QuiverVerdict:
    """A loop edge rules out a weight-1 action and makes the quotient subcritical."""
    loops = tuple(e for e in Q.edges if e[0] == e[1])
    return QuiverVerdict(not loops, bool(loops), loops)
