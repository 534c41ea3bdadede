import dataclasses

import pytest

from shscore import fixture_path
from shscore.decomposition import (
    assemble,
    core_betti,
    minimal_components,
    verify_betti_relation,
    verify_model,
)
from shscore.errors import DuplicateMinimum, MissingOverride
from shscore.graded import GradedVectorSpace as G
from shscore.model import ActionFixedData, Component, CoreModel, FixedComponent, Intersection
from shscore.modelfile import load_model
from shscore.toric_an import LatticeSubgroup as L, build_fan, conical_in_box, to_core_model

import oracles

SPHERE = G({0: 1, 2: 1})


def _spheres(*ids):
    return tuple(Component(i, 1, SPHERE) for i in ids)


def _points(*pairs):
    return tuple(Intersection(p, G({0: 1}), 0) for p in pairs)


def test_assemble_examples():
    model = to_core_model(build_fan(4), [L(2, 1), L(5, 2)])
    assert assemble(model.action("2,1")) == G({0: 1, 2: 4})
    assert assemble(model.action("5,2")) == G({0: 1, 2: 4})
    single = ActionFixedData("pt", (FixedComponent("x", G.point(), 0, 0, None),), False)
    assert assemble(single) == G({0: 1})


@pytest.mark.parametrize("n", range(1, 9))
def test_core_betti_chain_matches_simplicial(n):
    model = to_core_model(build_fan(n))
    assert core_betti(model) == G(oracles.betti_numbers(oracles.sphere_chain(n))) == G({0: 1, 2: n})


def test_core_betti_triangle_and_star():
    triangle = CoreModel("tri", 2, _spheres("a", "b", "c"), _points(("a", "b"), ("b", "c"), ("a", "c")))
    assert core_betti(triangle) == G(oracles.betti_numbers(oracles.sphere_triangle())) == G({0: 1, 1: 1, 2: 3})
    star = load_model(fixture_path("d4-star.json"))
    assert core_betti(star) == G(oracles.betti_numbers(oracles.sphere_star(3)))
    one = CoreModel("one", 2, _spheres("a"))
    assert core_betti(one) == SPHERE


def test_core_betti_disconnected():
    model = CoreModel("two", 2, _spheres("a", "b"))
    assert core_betti(model) == G({0: 2, 2: 2})


def test_core_betti_needs_override():
    model = CoreModel("curve-meet", 4, (Component("a", 2, G({0: 1, 2: 2, 4: 1})),
                                        Component("b", 2, G({0: 1, 2: 2, 4: 1}))),
                      (Intersection(("a", "b"), SPHERE, 1),))
    with pytest.raises(MissingOverride):
        core_betti(model)
    fixed = dataclasses.replace(model, core_betti_override=G({0: 1, 2: 3, 4: 2}))
    assert core_betti(fixed) == G({0: 1, 2: 3, 4: 2})


@pytest.mark.parametrize("n", range(1, 9))
def test_betti_relation_all_conical(n):
    fan = build_fan(n)
    lams = conical_in_box(fan, 10)
    model = to_core_model(fan, lams)
    fixed_total = {a.id: sum(f.betti.total_rank for f in a.fixed_components) for a in model.actions}
    for action in model.actions:
        res = verify_betti_relation(model, action.id)
        assert res.ok, (n, action.id, res)
        assert res.lhs.total_rank == fixed_total[action.id]
        assert res.lhs.euler_characteristic() == res.rhs.euler_characteristic()


def test_betti_relation_p2_fails():
    model = load_model(fixture_path("p2-triangle.json"))
    res = verify_betti_relation(model, model.actions[0].id)
    assert not res.ok
    assert res.lhs == G({0: 1, 2: 1, 4: 1})
    assert res.rhs == G({0: 1, 1: 1, 2: 3})


def test_point_model():
    model = CoreModel(
        "point", 2, (Component("o", 0, G.point()),),
        actions=(ActionFixedData("a", (FixedComponent("o", G.point(), 0, 0, "o"),), False),),
    )
    assert verify_betti_relation(model, "a").ok
    with pytest.raises(KeyError):
        verify_betti_relation(model, "nope")


def test_minimal_components():
    fan = build_fan(4)
    assert minimal_components(to_core_model(fan)) == {"S1", "S2", "S3", "S4"}
    assert minimal_components(to_core_model(fan, [L(2, 1)])) == {"S2"}
    doubled = to_core_model(fan, [L(2, 1)])
    twin = dataclasses.replace(doubled.actions[0], id="twin")
    dup = dataclasses.replace(doubled, actions=doubled.actions + (twin,))
    with pytest.raises(DuplicateMinimum) as info:
        minimal_components(dup)
    assert info.value.actions == ("2,1", "twin")
    assert minimal_components(dup, strict=False) == {"S2"}


@pytest.mark.parametrize("n", range(1, 9))
def test_minimum_is_owner(n):
    model = to_core_model(build_fan(n))
    for action in model.actions:
        (m,) = action.minima()
        assert m.betti == model.component(m.owner).betti
    assert len(minimal_components(model)) == len(model.components)


def test_verify_model_checks():
    checks = verify_model(to_core_model(build_fan(3)))
    assert all(c.ok for c in checks)
    names = {c.name for c in checks}
    assert names == {"pure_dimension", "betti_relation", "minimal_uniqueness", "owner_bijection",
                     "minimum_is_component", "distinct_minima"}

    broken = to_core_model(build_fan(3), [L(1, 1)])
    bad_fixed = tuple(dataclasses.replace(f, owner="S1") for f in broken.actions[0].fixed_components)
    broken = dataclasses.replace(broken, actions=(dataclasses.replace(broken.actions[0], fixed_components=bad_fixed),))
    failed = {c.name for c in verify_model(broken) if not c.ok}
    assert failed == {"owner_bijection"}

    thick = dataclasses.replace(to_core_model(build_fan(2)), complex_dim_M=4)
    failed = {c.name for c in verify_model(thick) if not c.ok}
    assert "pure_dimension" in failed
