"""Command-line front end.

Exit status: 0 success, 1 a verification failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import decomposition, floer, graded_cone, shbounds, toric_an
from .errors import ShsError
from .model import QuiverData, natural_key
from .modelfile import dumps, load_model, model_to_json

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2


class InputError(Exception):
    pass


def _emit(args, doc: dict, text: str) -> None:
    if args.json:
        sys.stdout.write(dumps(doc))
    elif not args.quiet:
        print(text)


def _lambda(text: str) -> toric_an.LatticeSubgroup:
    try:
        return toric_an.LatticeSubgroup.parse(text)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _vector(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(s) for s in text.replace("(", "").replace(")", "").split(","))
    except ValueError:
        raise InputError(f"expected comma-separated integers, got {text!r}") from None


def _fan(n: int) -> toric_an.AnFan:
    try:
        return toric_an.build_fan(n)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _fixed_json(f) -> dict:
    return {
        "id": f.id,
        "kind": f.kind,
        "betti": f.betti.to_dense(),
        "mu": f.mu,
        "owner": f.owner,
        "tangent_weights": list(f.tangent_weights),
    }


# ---- an ----------------------------------------------------------------

def cmd_an_enumerate(args) -> int:
    fan = _fan(args.n)
    rows = []
    for lam in toric_an.enumerate_weight1(fan):
        rows.append({"lambda": list(lam.coords), "minimum": toric_an.minimal_component(fan, lam).id})
    lines = [f"A_{fan.n}: {len(rows)} weight-1 conical actions"]
    lines += [f"  lambda=({r['lambda'][0]},{r['lambda'][1]})  minimal sphere {r['minimum']}" for r in rows]
    _emit(args, {"n": fan.n, "actions": rows}, "\n".join(lines))
    return EXIT_OK


def cmd_an_analyze(args) -> int:
    fan = _fan(args.n)
    lam = _lambda(args.lam)
    wx, wy, wz = toric_an.character_weights(fan, lam)
    conical = toric_an.is_conical(fan, lam)
    doc = {
        "n": fan.n,
        "lambda": list(lam.coords),
        "character_weights": [wx, wy, wz],
        "symplectic_weight": toric_an.symplectic_weight(lam),
        "conical": conical,
    }
    lines = [
        f"A_{fan.n}, lambda={lam}: character weights X={wx} Y={wy} Z={wz}",
        f"symplectic weight {doc['symplectic_weight']}; conical: {'yes' if conical else 'no'}",
    ]
    if conical:
        fixed = toric_an.fixed_locus(fan, lam)
        minimum = toric_an.minimal_component(fan, lam)
        lagrangian = minimum.kind == "fixed-sphere"
        doc["fixed_locus"] = [_fixed_json(f) for f in fixed]
        doc["minimum"] = {"id": minimum.id, "lagrangian": lagrangian}
        lines.append(f"fixed locus ({len(fixed)} components):")
        for f in fixed:
            lines.append(
                f"  {f.id:<4} {f.kind:<15} weights={f.tangent_weights}  mu={f.mu}  owner={f.owner}"
            )
        note = "" if lagrangian else "  (a point: minimum is not Lagrangian)"
        lines.append(f"minimum: {minimum.id}{note}")
    _emit(args, doc, "\n".join(lines))
    return EXIT_OK


def cmd_an_export(args) -> int:
    fan = _fan(args.n)
    lams = [_lambda(s) for s in args.lam] if args.lam else None
    try:
        model = toric_an.to_core_model(fan, lams)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    text = dumps(model_to_json(model))
    if args.output:
        Path(args.output).write_text(text)
        if not args.quiet:
            print(f"wrote {args.output}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


# ---- model commands ------------------------------------------------------

def cmd_verify(args) -> int:
    model = load_model(args.model)
    if args.action is not None and args.action not in [a.id for a in model.actions]:
        raise InputError(f"unknown action {args.action!r}")
    checks = decomposition.verify_model(model, args.action)
    rows = []
    for c in checks:
        row = {"check": c.name, "ok": c.ok, "action": c.action, "detail": c.detail}
        if c.name == "betti_relation":
            res = decomposition.verify_betti_relation(model, c.action)
            row["lhs"] = {str(k): v for k, v in res.lhs.as_dict().items()}
            row["rhs"] = {str(k): v for k, v in res.rhs.as_dict().items()}
        rows.append(row)
    ok = all(c.ok for c in checks)
    lines = [f"model {model.name}"]
    for c in checks:
        where = f" [{c.action}]" if c.action else ""
        lines.append(f"  {'PASS' if c.ok else 'FAIL'} {c.name}{where}: {c.detail}")
    lines.append("verdict: " + ("ok" if ok else "FAILED"))
    _emit(args, {"model": model.name, "ok": ok, "checks": rows}, "\n".join(lines))
    return EXIT_OK if ok else EXIT_FAILED


def cmd_floer(args) -> int:
    model = load_model(args.model)
    table = floer.floer_table(model)
    ids = sorted(table.components, key=natural_key)
    shk = any(a.shk for a in model.actions)
    entries = []
    for ci in ids:
        for cj in ids:
            V = table.entry(ci, cj)
            e = {"pair": [ci, cj], "ranks": {str(k): v for k, v in V.as_dict().items()},
                 "poincare": V.poincare_string()}
            sh = table.shifts.get((ci, cj))
            if sh is not None:
                e["shift"] = {"d_codim": sh.d_codim, "d_index": str(sh.d_index), "agree": sh.agree}
            entries.append(e)
    agree = all(s.agree for s in table.shifts.values())
    doc = {"model": model.name, "components": ids, "entries": entries, "shifts_agree": agree, "shk": shk}

    width = max([len(table.entry(a, b).poincare_string()) for a in ids for b in ids] + [len(x) for x in ids], default=1)
    label = max((len(x) for x in ids), default=0)
    head = " " * (label + 2) + "  ".join(x.ljust(width) for x in ids)
    lines = [f"HF^*(L_i, L_j) for {model.name}", head.rstrip()]
    for ci in ids:
        cells = "  ".join(table.entry(ci, cj).poincare_string().ljust(width) for cj in ids)
        lines.append(f"{ci.ljust(label)}  {cells}".rstrip())
    lines.append(f"grading shifts (codimension vs Maslov index) agree: {'yes' if agree else 'NO'}")
    if not shk:
        lines.append("note: no action is marked SHK; the isometric-case shift was applied anyway")
    _emit(args, doc, "\n".join(lines))
    return EXIT_OK if agree else EXIT_FAILED


def cmd_shbounds(args) -> int:
    model = load_model(args.model)
    rep = shbounds.report(model)
    doc = {"model": model.name, **rep.to_json()}
    lines = [f"model {model.name}: {rep.summary()}"]
    lines += [f"  {d}" for d in rep.diagnostics]
    _emit(args, doc, "\n".join(lines))
    return EXIT_OK


# ---- cone ----------------------------------------------------------------

def _presentation(args) -> graded_cone.ConePresentation:
    if args.an is not None:
        try:
            return graded_cone.an_presentation(args.an)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    if not args.file:
        raise InputError("give a presentation file or --an N")
    return graded_cone.ConePresentation.from_json(_read_json(args.file))


def _read_json(path):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc})") from None


def cmd_cone_check(args) -> int:
    P = _presentation(args)
    weights = graded_cone.check_homogeneous(P)
    doc = {"homogeneous": True, "relation_weights": [list(w) if w else None for w in weights]}
    lines = ["all relations homogeneous"]
    lines += [f"  relation {i}: weight {w}" for i, w in enumerate(weights)]
    _emit(args, doc, "\n".join(lines))
    return EXIT_OK


def cmd_cone_enumerate(args) -> int:
    P = _presentation(args)
    graded_cone.check_homogeneous(P)
    found, bounded = graded_cone.enumerate_weight1(P, args.bound)
    doc = {"bound": args.bound, "characters": [list(l) for l in found], "bounded": bounded}
    lines = [f"{len(found)} weight-1 conical characters in |lambda_j| <= {args.bound}"]
    lines += [f"  {l}" for l in found]
    lines.append("list is complete" if bounded else "list may be incomplete: feasible region leaves the box")
    _emit(args, doc, "\n".join(lines))
    return EXIT_OK


def cmd_cone_phi(args) -> int:
    P = _presentation(args)
    lam = _vector(args.lam)
    try:
        cls = graded_cone.classify_character(P, lam)
        w, exps = graded_cone.phi_exponents(list(cls.generator_weights))
    except ValueError as exc:
        raise InputError(str(exc)) from None
    names = [v.name for v in P.variables]
    doc = {"lambda": list(lam), "generator_weights": list(cls.generator_weights), "w": w,
           "exponents": dict(zip(names, exps)), "sympl_weight": cls.sympl_weight}
    terms = " + ".join(f"|{n}|^{e}" for n, e in zip(names, exps))
    text = f"lambda={lam}: generator weights {cls.generator_weights}, w={w}\nPhi = {terms}"
    _emit(args, doc, text)
    return EXIT_OK


def cmd_cone_quiver(args) -> int:
    doc = _read_json(args.file)
    q = doc.get("quiver", doc) if isinstance(doc, dict) else None
    try:
        Q = QuiverData(tuple(q["vertices"]), tuple(tuple(e) for e in q["edges"]))
    except (TypeError, KeyError, ValueError) as exc:
        raise InputError(f"malformed quiver: {exc}") from None
    v = graded_cone.quiver_weight1_admissible(Q)
    out = {"admissible": v.admissible, "subcritical": v.subcritical, "loops": [list(e) for e in v.loops]}
    text = (f"weight-1 admissible: {v.admissible}; subcritical: {v.subcritical}"
            + (f" (loops at {', '.join(e[0] for e in v.loops)})" if v.loops else ""))
    _emit(args, out, text)
    return EXIT_OK


# ---- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS, help="suppress text output")

    parser = argparse.ArgumentParser(prog="shscore", parents=[common],
                                     description="Weight-1 actions, core decompositions, Floer tables and SH bounds.")
    sub = parser.add_subparsers(dest="command", required=True)

    an = sub.add_parser("an", help="toric A_n resolutions")
    an_sub = an.add_subparsers(dest="an_command", required=True)
    p = an_sub.add_parser("enumerate", parents=[common], help="weight-1 conical actions and their minima")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_an_enumerate)
    p = an_sub.add_parser("analyze", parents=[common], help="analyze one cocharacter")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True, metavar="P,Q")
    p.set_defaults(func=cmd_an_analyze)
    p = an_sub.add_parser("export", parents=[common], help="write a model file")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", action="append", metavar="P,Q",
                   help="action to include (repeatable; default: all weight-1 actions)")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_an_export)

    p = sub.add_parser("verify", parents=[common], help="check the Betti relation and core structure")
    p.add_argument("model")
    p.add_argument("--action")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("floer", parents=[common], help="graded Floer cohomology table")
    p.add_argument("model")
    p.set_defaults(func=cmd_floer)

    p = sub.add_parser("shbounds", parents=[common], help="lower bounds on symplectic cohomology")
    p.add_argument("model")
    p.set_defaults(func=cmd_shbounds)

    cone = sub.add_parser("cone", help="graded affine cone presentations")
    cone_sub = cone.add_subparsers(dest="cone_command", required=True)
    for name, func, helptext in [
        ("check", cmd_cone_check, "check homogeneity of relations"),
        ("enumerate", cmd_cone_enumerate, "weight-1 conical characters in a box"),
        ("phi", cmd_cone_phi, "exponents of the Hamiltonian built from the generators"),
    ]:
        p = cone_sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("file", nargs="?", help="presentation JSON")
        p.add_argument("--an", type=int, metavar="N", help="use the built-in A_N presentation")
        if name == "enumerate":
            p.add_argument("--bound", type=int, default=16)
        if name == "phi":
            p.add_argument("--lambda", dest="lam", required=True)
        p.set_defaults(func=func)
    p = cone_sub.add_parser("quiver", parents=[common], help="weight-1 admissibility of a quiver")
    p.add_argument("file", help="JSON with {vertices, edges} or a model file with a quiver")
    p.set_defaults(func=cmd_cone_quiver)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.json = getattr(args, "json", False)
    args.quiet = getattr(args, "quiet", False)
    try:
        return args.func(args)
    except (InputError, ShsError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT

if __name__ == "__main__":
    sys.exit(main())
