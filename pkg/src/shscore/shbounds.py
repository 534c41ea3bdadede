"""Lower bounds on the ranks of symplectic cohomology.

For a weight-1 action, every fixed component whose attracting closure is a
minimal core component contributes its shifted Betti numbers to SH.  Bounds
from several actions are combined degree-wise by maximum: each is a valid
bound on the same group and nothing justifies adding them.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .decomposition import core_betti, minimal_components
from .errors import DuplicateMinimum, NotAllMinimal, ShsError
from .graded import GradedVectorSpace, direct_sum
from .graded_cone import quiver_weight1_admissible
from .model import CoreModel, natural_key


def sh_lower_bounds(model: CoreModel, action_id: str, minimal: set[str] | None = None) -> GradedVectorSpace:
    action = model.action(action_id)
    if not action.weight1:
        raise ShsError(f"action {action_id!r} is not weight-1")
    if minimal is None:
        minimal = minimal_components(model)
    return direct_sum(
        f.betti.shift(f.mu) for f in action.fixed_components if f.owner in minimal
    )


def all_minimal_bound(model: CoreModel) -> GradedVectorSpace:
    minimal = minimal_components(model)
    missing = [cid for cid in model.component_ids() if cid not in minimal]
    if missing:
        raise NotAllMinimal(missing)
    return core_betti(model)


def is_subcritical(model: CoreModel) -> bool:
    if model.quiver is not None and quiver_weight1_admissible(model.quiver).subcritical:
        return True
    return bool(model.subcritical)


@dataclass
class ShBoundReport:
    bounds: GradedVectorSpace
    top_degree: int
    top_bound: int
    all_minimal: bool
    vanishing_flag: bool
    minimal: list[str] = field(default_factory=list)
    diagnostics: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "bounds": {str(k): v for k, v in self.bounds.as_dict().items()},
            "top_degree": self.top_degree,
            "top_bound": self.top_bound,
            "all_minimal": self.all_minimal,
            "vanishing_flag": self.vanishing_flag,
            "minimal_components": self.minimal,
            "diagnostics": self.diagnostics,
        }

    def summary(self) -> str:
        if self.vanishing_flag:
            return "SH ≡ 0 (subcritical)"
        if self.bounds.is_zero():
            head = "no nonzero bounds"
        else:
            head = ", ".join(f"SH^{k} ≥ {v}" for k, v in self.bounds.as_dict().items())
        return f"{head}; top-degree bound {self.top_bound}"


def report(model: CoreModel) -> ShBoundReport:
    diagnostics = []
    try:
        minimal = minimal_components(model)
    except DuplicateMinimum as exc:
        diagnostics.append(f"DuplicateMinimum: {exc}")
        minimal = minimal_components(model, strict=False)

    bounds = GradedVectorSpace()
    for action in model.weight1_actions():
        bounds = bounds.degreewise_max(sh_lower_bounds(model, action.id, minimal))

    comp_ids = model.component_ids()
    all_min = bool(comp_ids) and all(c in minimal for c in comp_ids)
    if all_min:
        try:
            bounds = bounds.degreewise_max(core_betti(model))
        except ShsError as exc:
            diagnostics.append(f"{type(exc).__name__}: {exc}")

    top = model.complex_dim_M
    top_bound = len(minimal)
    if top_bound > bounds.rank(top):
        bounds = bounds + GradedVectorSpace({top: top_bound - bounds.rank(top)})

    vanishing = is_subcritical(model)
    if vanishing:
        if not bounds.is_zero():
            diagnostics.append(
                "InconsistentModel: subcritical marker present but declared actions give "
                f"nonzero bounds {bounds.poincare_string()}"
            )
        bounds = GradedVectorSpace()

    known = model.annotations.get("known_sh_ranks") or {}
    for deg, rk in sorted(known.items(), key=lambda kv: int(kv[0])):
        b = bounds.rank(int(deg))
        if b > rk:
            diagnostics.append(f"InconsistentModel: bound {b} on SH^{deg} exceeds known rank {rk}")
        elif b == rk:
            diagnostics.append(f"sharp: SH^{deg} bound {b} equals known rank")

    return ShBoundReport(
        bounds=bounds,
        top_degree=top,
        top_bound=top_bound,
        all_minimal=all_min,
        vanishing_flag=vanishing,
        minimal=sorted(minimal, key=natural_key),
        diagnostics=diagnostics,
    )
