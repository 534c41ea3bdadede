"""JSON model files (schema version 1).

Betti vectors are dense arrays of ranks by ascending degree from 0.
Besides the required keys, a model may carry ``weight1`` (explicit model
flag), ``quiver`` ({vertices, edges}) from which subcriticality is derived,
and free-form ``annotations``.
"""

from __future__ import annotations

import json
from pathlib import Path

import jsonschema

from .errors import ModelError
from .graded import GradedVectorSpace
from .model import (
    ActionFixedData,
    Component,
    CoreModel,
    FixedComponent,
    FIXED_SPHERE,
    ISOLATED_POINT,
    Intersection,
    QuiverData,
    natural_key,
)

SCHEMA_VERSION = 1

_betti = {"type": "array", "items": {"type": "integer", "minimum": 0}}
_dim = {"type": "integer", "minimum": 0}

MODEL_SCHEMA = {
    "type": "object",
    "required": ["schema_version", "name", "complex_dim_M", "components"],
    "additionalProperties": False,
    "properties": {
        "schema_version": {"type": "integer"},
        "name": {"type": "string"},
        "complex_dim_M": {"type": "integer", "minimum": 1},
        "components": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "complex_dim", "betti"],
                "additionalProperties": False,
                "properties": {"id": {"type": "string"}, "complex_dim": _dim, "betti": _betti},
            },
        },
        "intersections": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["pair", "betti", "complex_dim"],
                "additionalProperties": False,
                "properties": {
                    "pair": {"type": "array", "items": {"type": "string"}, "minItems": 2, "maxItems": 2},
                    "betti": _betti,
                    "complex_dim": _dim,
                },
            },
        },
        "actions": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "weight1", "fixed_components"],
                "additionalProperties": False,
                "properties": {
                    "id": {"type": "string"},
                    "weight1": {"type": "boolean"},
                    "shk": {"type": "boolean"},
                    "fixed_components": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "required": ["id", "betti", "complex_dim", "mu", "owner"],
                            "additionalProperties": False,
                            "properties": {
                                "id": {"type": "string"},
                                "betti": _betti,
                                "complex_dim": _dim,
                                "mu": {"type": "integer", "minimum": 0, "multipleOf": 2},
                                "owner": {"type": ["string", "null"]},
                                "kind": {"enum": [ISOLATED_POINT, FIXED_SPHERE]},
                                "tangent_weights": {"type": "array", "items": {"type": "integer"}},
                            },
                        },
                    },
                },
            },
        },
        "core_betti_override": _betti,
        "subcritical": {"type": "boolean"},
        "weight1": {"type": "boolean"},
        "quiver": {
            "type": "object",
            "required": ["vertices", "edges"],
            "additionalProperties": False,
            "properties": {
                "vertices": {"type": "array", "items": {"type": "string"}},
                "edges": {
                    "type": "array",
                    "items": {"type": "array", "items": {"type": "string"}, "minItems": 2, "maxItems": 2},
                },
            },
        },
        "annotations": {"type": "object"},
    },
}


def _unique(ids, what):
    seen = set()
    for i in ids:
        if i in seen:
            raise ModelError(f"duplicate {what} id {i!r}")
        seen.add(i)
    return seen


def model_from_json(doc) -> CoreModel:
    if not isinstance(doc, dict):
        raise ModelError("model file must be a JSON object")
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise ModelError(f"unsupported schema_version {doc.get('schema_version')!r}")
    try:
        jsonschema.validate(doc, MODEL_SCHEMA)
    except jsonschema.ValidationError as exc:
        path = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise ModelError(f"schema violation at {path}: {exc.message}") from None

    gv = GradedVectorSpace.from_dense
    components = tuple(Component(c["id"], c["complex_dim"], gv(c["betti"])) for c in doc["components"])
    comp_ids = _unique((c.id for c in components), "component")

    intersections = []
    seen_pairs = set()
    for inter in doc.get("intersections", []):
        a, b = inter["pair"]
        for x in (a, b):
            if x not in comp_ids:
                raise ModelError(f"intersection references unknown component {x!r}")
        if a == b:
            raise ModelError(f"intersection of {a!r} with itself")
        key = frozenset((a, b))
        if key in seen_pairs:
            raise ModelError(f"duplicate intersection for pair {a!r}, {b!r}")
        seen_pairs.add(key)
        intersections.append(Intersection((a, b), gv(inter["betti"]), inter["complex_dim"]))

    actions = []
    for act in doc.get("actions", []):
        fixed = []
        for f in act["fixed_components"]:
            owner = f["owner"]
            if owner is not None and owner not in comp_ids:
                raise ModelError(f"action {act['id']!r}: fixed component {f['id']!r} has unknown owner {owner!r}")
            kind = f.get("kind", FIXED_SPHERE if f["complex_dim"] > 0 else ISOLATED_POINT)
            fixed.append(FixedComponent(
                id=f["id"],
                betti=gv(f["betti"]),
                complex_dim=f["complex_dim"],
                mu=f["mu"],
                owner=owner,
                kind=kind,
                tangent_weights=tuple(f.get("tangent_weights", ())),
            ))
        _unique((f.id for f in fixed), f"fixed component (action {act['id']!r})")
        actions.append(ActionFixedData(act["id"], tuple(fixed), act["weight1"], act.get("shk", False)))
    _unique((a.id for a in actions), "action")

    quiver = None
    if "quiver" in doc:
        q = doc["quiver"]
        try:
            quiver = QuiverData(tuple(q["vertices"]), tuple(tuple(e) for e in q["edges"]))
        except ValueError as exc:
            raise ModelError(str(exc)) from None

    override = doc.get("core_betti_override")
    return CoreModel(
        name=doc["name"],
        complex_dim_M=doc["complex_dim_M"],
        components=components,
        intersections=tuple(intersections),
        actions=tuple(actions),
        core_betti_override=gv(override) if override is not None else None,
        subcritical=doc.get("subcritical"),
        weight1_flag=doc.get("weight1"),
        quiver=quiver,
        annotations=doc.get("annotations", {}),
    )


def model_to_json(model: CoreModel) -> dict:
    def fixed(f: FixedComponent) -> dict:
        return {
            "id": f.id,
            "betti": f.betti.to_dense(),
            "complex_dim": f.complex_dim,
            "mu": f.mu,
            "owner": f.owner,
            "kind": f.kind,
            "tangent_weights": list(f.tangent_weights),
        }

    doc = {
        "schema_version": SCHEMA_VERSION,
        "name": model.name,
        "complex_dim_M": model.complex_dim_M,
        "components": [
            {"id": c.id, "complex_dim": c.complex_dim, "betti": c.betti.to_dense()}
            for c in sorted(model.components, key=lambda c: natural_key(c.id))
        ],
        "intersections": [
            {"pair": list(i.pair), "betti": i.betti.to_dense(), "complex_dim": i.complex_dim}
            for i in sorted(model.intersections, key=lambda i: [natural_key(x) for x in i.pair])
        ],
        "actions": [
            {
                "id": a.id,
                "weight1": a.weight1,
                "shk": a.shk,
                "fixed_components": [fixed(f) for f in a.fixed_components],
            }
            for a in model.actions
        ],
    }
    if model.core_betti_override is not None:
        doc["core_betti_override"] = model.core_betti_override.to_dense()
    if model.subcritical is not None:
        doc["subcritical"] = model.subcritical
    if model.weight1_flag is not None:
        doc["weight1"] = model.weight1_flag
    if model.quiver is not None:
        doc["quiver"] = {
            "vertices": list(model.quiver.vertices),
            "edges": [list(e) for e in model.quiver.edges],
        }
    if model.annotations:
        doc["annotations"] = model.annotations
    return doc


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def load_model(path) -> CoreModel:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ModelError(f"cannot read {path}: {exc.strerror}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ModelError(f"{path}: invalid JSON ({exc})") from None
    return model_from_json(doc)


def save_model(model: CoreModel, path) -> None:
    Path(path).write_text(dumps(model_to_json(model)))
