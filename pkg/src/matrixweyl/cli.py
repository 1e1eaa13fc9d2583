"""Command-line front end.

Subcommands build representations, run the verification suites, dump
operators and compute spectra.  Output is deterministic JSON (default),
LaTeX mirroring the displayed matrix conventions, or short text.  Exit
status: 0 when every check in the manifest passed, 1 on a mathematical
failure (broken identity, non-invariant space), 2 on usage errors.

MATRIXWEYL_WORKERS caps the process pool used for the identity suites;
unset or 1 runs sequentially with identical output.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from .coeff import Coeff, K
from .generators import RepSpec, build_gl_np1, build_gm
from .identities import (
    art_dependency,
    art_relations,
    casimir_centrality,
    casimir_closed_form_reports,
    casimirs_gl3,
    commutation_table,
    g1_matches_gl3,
    gm_closure_check,
    gm_tower_constants,
    gm_tower_reports,
    grading_audit,
)
from .matrixreps import gl2_irrep
from .models import (
    calogero,
    consistency_check,
    pattern_verdict,
    scalar_form_check,
    spectrum,
    sutherland,
)
from .render import matrix_op_latex, matrix_op_str
from .serialize import dumps, manifest, matrix_op_to_json
from .spaces import (
    NotInvariantError,
    SpaceNotClosedError,
    hexagon_audit,
    orbit_closure,
)
from .weyl import PolySpinor


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("MATRIXWEYL_WORKERS", "1")))
    except ValueError:
        return 1


def _run_reports(jobs):
    """jobs: list of (callable, args); runs them, possibly in a process pool."""
    n = _workers()
    if n <= 1 or len(jobs) <= 1:
        return [f(*a) for f, a in jobs]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=n) as pool:
        futs = [pool.submit(f, *a) for f, a in jobs]
        return [f.result() for f in futs]


def _k_value(args) -> Coeff:
    if getattr(args, "k", None) is None:
        return K
    return Coeff.rational(args.k)


def _emit(args, text: str):
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _reports_for_check(d):
    gens = build_gl_np1(RepSpec.gl3(K, d))
    return [r.record() for r in commutation_table(gens)]


def cmd_gens(args) -> int:
    gens = build_gl_np1(RepSpec.gl3(_k_value(args), args.d))
    if args.output == "latex":
        parts = [
            "%% %s\n%s\n" % (name, matrix_op_latex(op)) for name, op in gens.named()
        ]
        _emit(args, "\n".join(parts))
        return 0
    if args.output == "text":
        parts = ["%s:\n%s\n" % (name, matrix_op_str(op)) for name, op in gens.named()]
        _emit(args, "\n".join(parts))
        return 0
    data = manifest(
        "gens",
        {"n": 2, "d": args.d, "k": "symbolic" if args.k is None else str(args.k)},
        [
            {"name": name, "op": matrix_op_to_json(op)}
            for name, op in gens.named()
        ],
    )
    _emit(args, dumps(data))
    return 0


def cmd_check(args) -> int:
    ds = [args.d] if args.d else [1, 2, 3]
    jobs = [(_reports_for_check, (d,)) for d in ds]
    results = []
    for d, recs in zip(ds, _run_reports(jobs)):
        for r in recs:
            r = dict(r)
            r["d"] = d
            results.append(r)
    data = manifest("check", {"n": args.n, "d": ds}, results)
    _emit(args, dumps(data))
    return 0 if data["verdict"] == "pass" else 1


def cmd_casimir(args) -> int:
    gens = build_gl_np1(RepSpec.gl3(K, args.d))
    results = [r.record() for r in casimir_closed_form_reports(gens)]
    C1, C2, _C3 = casimirs_gl3(gens)
    for name, C in (("C1", C1), ("C2", C2)):
        for r in casimir_centrality(C, gens, name):
            results.append(r.record())
    data = manifest("casimir", {"d": args.d}, results)
    _emit(args, dumps(data))
    return 0 if data["verdict"] == "pass" else 1


def cmd_relations(args) -> int:
    results = []
    ds = [args.d] if args.d else [1, 2, 3]
    for d in ds:
        gens = build_gl_np1(RepSpec.gl3(K, d))
        for r in art_relations(gens):
            rec = r.record()
            rec["d"] = d
            results.append(rec)
    dep = art_dependency([build_gl_np1(RepSpec.gl3(K, d)) for d in (1, 2, 3)])
    results.append(
        {
            "name": "C2 from Art.5+6+7",
            "pass": dep.passed,
            "coefficients": {k: str(v) for k, v in sorted(dep.coefficients.items())},
        }
    )
    audit = grading_audit(build_gl_np1(RepSpec.gl3(K, 1)))
    results.append(
        {
            "name": "grading balance",
            "pass": audit.all_balanced,
            "reference_mismatches": audit.mismatched_lines(),
        }
    )
    data = manifest("relations", {"d": ds}, results)
    _emit(args, dumps(data))
    return 0 if data["verdict"] == "pass" else 1


def cmd_space(args) -> int:
    if args.m is not None:
        from .spaces import scalar_basis

        basis = scalar_basis(args.k, args.m)
        results = [
            {
                "name": "P(%d,%d)" % (args.k, args.m),
                "pass": True,
                "dim": basis.dim,
            }
        ]
        data = manifest("space", {"k": args.k, "m": args.m}, results)
        _emit(args, dumps(data))
        return 0
    gens = build_gl_np1(RepSpec.gl3(Coeff.rational(args.k), args.d))
    seed = PolySpinor.unit(args.d - 1, args.d, 2)
    cap = args.degree_cap if args.degree_cap is not None else args.k + 2
    try:
        basis = orbit_closure(gens.all_ops(), [seed], degree_cap=cap)
    except SpaceNotClosedError as exc:
        data = manifest(
            "space",
            {"k": args.k, "d": args.d, "degree_cap": cap},
            [{"name": "orbit closure", "pass": False, "error": str(exc)}],
        )
        _emit(args, dumps(data))
        return 1
    results = [{"name": "orbit closure", "pass": True, "dim": basis.dim}]
    if args.d == 2:
        rpt = hexagon_audit(basis, args.k, gl2_irrep(2))
        results.append(
            {
                "name": "hexagon audit",
                "pass": rpt.passed,
                "layers": list(rpt.layer_sizes),
                "boundary_points": rpt.boundary_points,
                "interior_points": rpt.interior_points,
                "issues": list(rpt.issues),
            }
        )
    data = manifest("space", {"k": args.k, "d": args.d, "degree_cap": cap}, results)
    _emit(args, dumps(data))
    return 0 if data["verdict"] == "pass" else 1


_MODEL_BUILDERS = {"calogero": calogero, "sutherland": sutherland}


def cmd_model(args) -> int:
    build = _MODEL_BUILDERS[args.model]
    model = build(args.form, _k_value(args), args.d)
    if args.output == "latex":
        names = (
            ("\\tau_2", "\\tau_3") if args.model == "calogero" else ("\\eta_2", "\\eta_3")
        )
        _emit(args, matrix_op_latex(model.op, list(names)) + "\n")
        return 0
    if args.output == "text":
        _emit(args, matrix_op_str(model.op) + "\n")
        return 0
    results = [
        {
            "name": "%s %s d=%d" % (args.model, args.form, args.d),
            "op": matrix_op_to_json(model.op),
        }
    ]
    checks = [scalar_form_check(args.model, K).record()]
    if args.d > 1:
        checks.append(consistency_check(args.model, K, args.d).record())
    data = manifest(
        "model",
        {"model": args.model, "form": args.form, "d": args.d},
        results + checks,
    )
    _emit(args, dumps(data))
    return 0


def cmd_spectrum(args) -> int:
    build = _MODEL_BUILDERS[args.model]
    model = build("liealgebraic", Coeff.rational(args.k), args.d)
    bindings = {"nu": Fraction(args.nu)}
    if args.model == "calogero":
        bindings["omega"] = Fraction(args.omega)
    else:
        bindings["alpha"] = Fraction(args.alpha)
    try:
        result = spectrum(model, bindings)
    except (NotInvariantError, SpaceNotClosedError, ValueError) as exc:
        data = manifest(
            "spectrum",
            {"model": args.model, "k": args.k, "d": args.d},
            [{"name": "spectrum", "pass": False, "error": str(exc)}],
        )
        _emit(args, dumps(data))
        return 1
    rec = result.to_json()
    rec["name"] = "spectrum"
    rec["pass"] = True
    if args.model == "calogero":
        rec["verdict_vs_scalar_pattern"] = pattern_verdict(
            result, Fraction(args.omega)
        )
    data = manifest(
        "spectrum",
        {
            "model": args.model,
            "k": args.k,
            "d": args.d,
            "bindings": rec["bindings"],
        },
        [rec],
    )
    _emit(args, dumps(data))
    return 0


def cmd_gm(args) -> int:
    gm = build_gm(args.m, K, gl2_irrep(args.d))
    results = [r.record() for r in gm_tower_reports(gm)]
    consts = gm_tower_constants(gm)
    results.append(
        {
            "name": "tower constants",
            "pass": all(c is not None for c in consts),
            "constants": [str(c) for c in consts],
        }
    )
    closure = gm_closure_check(gm)
    results.append(
        {
            "name": "closure [T,U] within degree %d" % closure.degree_cap,
            "pass": closure.closed,
            "max_degree": closure.max_degree,
        }
    )
    if args.m == 1 and args.d == 1:
        eq, da, db = g1_matches_gl3(gm, build_gl_np1(RepSpec.gl3(K, 1)))
        results.append(
            {"name": "g(1) equals gl3 span", "pass": eq, "dims": [da, db]}
        )
    data = manifest("gm", {"m": args.m, "d": args.d}, results)
    _emit(args, dumps(data))
    return 0 if data["verdict"] == "pass" else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="matrixweyl",
        description="exact gl(n+1) matrix-differential-operator engine",
    )
    p.add_argument("--out", help="write output to a file instead of stdout")
    p.add_argument(
        "--output",
        choices=("json", "latex", "text"),
        default="json",
        help="output format where applicable",
    )
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("gens", help="dump the gl3 generators for one block size")
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--k", type=int, default=None, help="bind k (default symbolic)")
    sp.set_defaults(func=cmd_gens)

    sp = sub.add_parser("check", help="verify the full commutation table")
    sp.add_argument("--n", type=int, default=2)
    sp.add_argument("--d", type=int, default=None, help="one block size (default 1,2,3)")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("casimir", help="verify Casimir values and centrality")
    sp.add_argument("--d", type=int, required=True)
    sp.set_defaults(func=cmd_casimir)

    sp = sub.add_parser("relations", help="verify the nine quadratic relations")
    sp.add_argument("--d", type=int, default=None)
    sp.set_defaults(func=cmd_relations)

    sp = sub.add_parser("space", help="discover an invariant space")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--d", type=int, default=2)
    sp.add_argument("--m", type=int, default=None, help="triangle space instead")
    sp.add_argument("--degree-cap", type=int, default=None)
    sp.set_defaults(func=cmd_space)

    sp = sub.add_parser("model", help="build a model operator")
    sp.add_argument("--model", choices=("calogero", "sutherland"), required=True)
    sp.add_argument(
        "--form",
        choices=("differential", "liealgebraic", "matrix"),
        default="liealgebraic",
    )
    sp.add_argument("--d", type=int, default=1)
    sp.add_argument("--k", type=int, default=None)
    sp.set_defaults(func=cmd_model)

    sp = sub.add_parser("spectrum", help="exact spectrum on the invariant flag")
    sp.add_argument("--model", choices=("calogero", "sutherland"), required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--d", type=int, default=1)
    sp.add_argument("--omega", default="1")
    sp.add_argument("--alpha", default="1")
    sp.add_argument("--nu", default="0")
    sp.set_defaults(func=cmd_spectrum)

    sp = sub.add_parser("gm", help="polynomial-algebra tower checks")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--d", type=int, default=1)
    sp.set_defaults(func=cmd_gm)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        parser.exit(2, "error: %s\n" % exc)


if __name__ == "__main__":
    sys.exit(main())
