import dataclasses

import pytest

from shscore import fixture_path
from shscore.decomposition import assemble, core_betti
from shscore.errors import NotAllMinimal, ShsError
from shscore.graded import GradedVectorSpace as G
from shscore.model import Component, CoreModel
from shscore.modelfile import load_model
from shscore.shbounds import all_minimal_bound, report, sh_lower_bounds
from shscore.toric_an import LatticeSubgroup as L, build_fan, enumerate_weight1, to_core_model


def test_sh_lower_bounds_examples():
    full = to_core_model(build_fan(4))
    assert sh_lower_bounds(full, "1,1") == G({0: 1, 2: 4})
    only2 = to_core_model(build_fan(4), [L(2, 1)])
    assert sh_lower_bounds(only2, "2,1") == G({0: 1, 2: 1})
    single = to_core_model(build_fan(1))
    assert sh_lower_bounds(single, "1,1") == G({0: 1, 2: 1})
    mixed = to_core_model(build_fan(4), [L(2, 1), L(5, 2)])
    with pytest.raises(ShsError):
        sh_lower_bounds(mixed, "5,2")


def test_all_minimal_bound():
    for n in range(1, 9):
        assert all_minimal_bound(to_core_model(build_fan(n))) == G({0: 1, 2: n})
    with pytest.raises(NotAllMinimal) as info:
        all_minimal_bound(to_core_model(build_fan(4), [L(2, 1)]))
    assert info.value.missing == ("S1", "S3", "S4")


def test_report_full_a4():
    rep = report(to_core_model(build_fan(4)))
    assert rep.bounds == G({0: 1, 2: 4})
    assert (rep.top_degree, rep.top_bound, rep.all_minimal, rep.vanishing_flag) == (2, 4, True, False)
    assert rep.summary() == "SH^0 ≥ 1, SH^2 ≥ 4; top-degree bound 4"
    assert "sharp: SH^2 bound 4 equals known rank" in rep.diagnostics


def test_report_jordan():
    rep = report(load_model(fixture_path("jordan-quiver.json")))
    assert rep.vanishing_flag and rep.bounds == G() and rep.top_bound == 0
    assert rep.summary() == "SH ≡ 0 (subcritical)"
    assert not rep.diagnostics


def test_report_inconsistent_subcritical():
    model = dataclasses.replace(to_core_model(build_fan(2)), subcritical=True)
    rep = report(model)
    assert rep.vanishing_flag and rep.bounds == G()
    assert any(d.startswith("InconsistentModel") for d in rep.diagnostics)


def test_report_no_actions():
    rep = report(to_core_model(build_fan(3), []))
    assert rep.bounds == G() and rep.top_bound == 0


def test_report_duplicate_minimum_diagnostic():
    model = to_core_model(build_fan(3), [L(1, 1)])
    twin = dataclasses.replace(model.actions[0], id="twin")
    rep = report(dataclasses.replace(model, actions=model.actions + (twin,)))
    assert any(d.startswith("DuplicateMinimum") for d in rep.diagnostics)
    assert rep.top_bound == 1


@pytest.mark.parametrize("n", range(1, 9))
def test_monotone_in_actions(n):
    fan = build_fan(n)
    lams = enumerate_weight1(fan)
    prev = G()
    for m in range(len(lams) + 1):
        rep = report(to_core_model(fan, lams[:m]))
        assert prev.dominated_by(rep.bounds)
        assert rep.top_bound == m
        prev = rep.bounds


@pytest.mark.parametrize("n", range(1, 9))
def test_bounds_below_assembly(n):
    fan = build_fan(n)
    lams = enumerate_weight1(fan)
    for m in range(1, len(lams) + 1):
        model = to_core_model(fan, lams[:m])
        for action in model.actions:
            assert sh_lower_bounds(model, action.id).dominated_by(assemble(action))
    full = to_core_model(fan)
    for action in full.actions:
        assert sh_lower_bounds(full, action.id) == core_betti(full)


def test_known_rank_exceeded_diagnostic():
    model = CoreModel("fake", 2, (Component("S", 1, G.sphere()),),
                      actions=to_core_model(build_fan(1)).actions,
                      annotations={"known_sh_ranks": {"2": 0}})
    model = dataclasses.replace(model, actions=tuple(
        dataclasses.replace(a, fixed_components=tuple(
            dataclasses.replace(f, owner="S", id="S") for f in a.fixed_components))
        for a in model.actions))
    rep = report(model)
    assert any("exceeds known rank" in d for d in rep.diagnostics)
