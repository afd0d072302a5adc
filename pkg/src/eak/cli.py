"""Command-line interface: analysis, evaluation, verification, Dedekind
sums, lattice sums and concreteness checks for rational polytopes."""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from eak import concrete as concrete_mod
from eak import coefficients, lattice_sum, oracle
from eak.dedekind import dr_sum_fast
from eak.exactval import ExactValue, format_rational, parse_rational
from eak.lattice import EmbeddedLattice
from eak.local_data import all_codim2_data, all_facet_data
from eak.polytope import Polytope

SCHEMA = "1"


class InputError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r} ({exc})")


def _load_polytope(path: str) -> Polytope:
    try:
        with open(path) as f:
            data = json.load(f)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON at line {exc.lineno}: {exc.msg}")
    try:
        return Polytope.from_json(data)
    except (ValueError, KeyError, TypeError) as exc:
        raise InputError(f"{path}: {exc}")


def _exact_str(v: ExactValue) -> str:
    return str(v)


def _exact_json(v: ExactValue):
    return {
        "rational": format_rational(v.rational_part),
        "angle_terms": [
            {
                "coefficient": format_rational(c),
                "sign": a.sign,
                "cos_squared": format_rational(a.cos_squared),
            }
            for c, a in v.angle_terms
        ],
    }


def _emit(report: dict, json_path: str | None) -> None:
    if json_path:
        with open(json_path, "w") as f:
            json.dump(report, f, indent=2, sort_keys=True)
            f.write("\n")


# ---------------------------------------------------------------------------
# subcommands

def _cmd_analyze(args) -> int:
    P = _load_polytope(args.polytope)
    report: dict = {"schema": SCHEMA, "command": "analyze", "polytope": P.to_json()}
    print(f"polytope: dim={P.dim} vertices={len(P.vertices)} facets={len(P.inequalities)}")
    print(f"denominator={P.denominator()} volume={format_rational(P.volume())}")
    report["denominator"] = P.denominator()
    report["volume"] = format_rational(P.volume())

    facets = all_facet_data(P)
    codim2 = all_codim2_data(P)
    print("\nfacets (normal | offset | relative volume):")
    for f in facets:
        print(f"  {f.v_F}  {format_rational(f.x_F_dot)}  {format_rational(f.vol_star)}")
    print("\ncodim-2 faces (facet pair | h | k | x1 | x2 | vol*):")
    for g in codim2:
        print(
            f"  ({g.f1},{g.f2})  h={g.h} k={g.k} "
            f"x1={format_rational(g.x1)} x2={format_rational(g.x2)} "
            f"vol*={format_rational(g.vol_star)}"
        )
    if args.dump_local:
        report["facets"] = [
            {
                "normal": list(f.v_F),
                "offset": format_rational(f.x_F_dot),
                "relative_volume": format_rational(f.vol_star),
                "norm_sq": format_rational(f.norm_sq),
            }
            for f in facets
        ]
        report["codim2"] = [
            {
                "facets": [g.f1, g.f2],
                "h": g.h,
                "k": g.k,
                "h_inv": g.h_inv,
                "x1": format_rational(g.x1),
                "x2": format_rational(g.x2),
                "dot12": format_rational(g.dot12),
                "cos_squared": format_rational(g.c_G.cos_squared),
                "cos_sign": g.c_G.sign,
                "relative_volume": format_rational(g.vol_star),
            }
            for g in codim2
        ]

    flavors = ["solid-angle", "ehrhart"] if args.flavor == "both" else [args.flavor]
    evals = []
    for t in args.eval or []:
        for flavor in flavors:
            if flavor == "solid-angle":
                c2 = coefficients.coeff_a_d1(P).eval(t)
                c1 = coefficients.coeff_a_d2(P).eval(t)
                names = ("a_d1", "a_d2")
            else:
                c2 = coefficients.coeff_e_d1(P).eval(t)
                c1 = coefficients.coeff_e_d2(P).eval(t)
                names = ("e_d1", "e_d2")
            print(
                f"\nt={format_rational(t)} [{flavor}]: "
                f"{names[0]} = {_exact_str(c2)}; {names[1]} = {_exact_str(c1)}"
            )
            evals.append(
                {
                    "t": format_rational(t),
                    "flavor": flavor,
                    names[0]: _exact_json(c2),
                    names[1]: _exact_json(c1),
                }
            )
    report["evaluations"] = evals
    _emit(report, args.json)
    return 0


def _cmd_eval(args) -> int:
    P = _load_polytope(args.polytope)
    if P.dim != 3:
        raise InputError("eval requires a three-dimensional polytope")
    report: dict = {"schema": SCHEMA, "command": "eval", "values": []}
    qp = coefficients.complete_quasipolynomial_d3(P, args.flavor)
    for t in args.t:
        v = qp.value(t)
        print(f"{args.flavor}({format_rational(t)}) = {_exact_str(v)}")
        report["values"].append({"t": format_rational(t), "value": _exact_json(v)})
    _emit(report, args.json)
    return 0


def _cmd_verify(args) -> int:
    P = _load_polytope(args.polytope)
    if P.dim != 3:
        raise InputError("verify requires a three-dimensional polytope")
    m = P.denominator()
    checks = []
    ok_all = True
    e2 = coefficients.coeff_e_d1(P)
    e1 = coefficients.coeff_e_d2(P)
    a2 = coefficients.coeff_a_d1(P)
    a1 = coefficients.coeff_a_d2(P)
    vol = P.volume()
    for t in args.t:
        t = Fraction(t)
        count_samples = [
            (t + j * m, Fraction(oracle.count_points(P, t + j * m))) for j in range(4)
        ]
        ec = oracle.interpolate_coefficients(count_samples, 3)
        angle_samples = [
            (t + j * m, oracle.solid_angle_sum(P, t + j * m)) for j in range(4)
        ]
        ac = oracle.interpolate_coefficients(angle_samples, 3)
        rows = [
            ("vol", ExactValue.of(vol), ExactValue.of(ec[0])),
            ("e_d1", e2.eval(t), ExactValue.of(ec[1])),
            ("e_d2", e1.eval(t), ExactValue.of(ec[2])),
            ("a_d1", a2.eval(t), ac[1]),
            ("a_d2", a1.eval(t), ac[2]),
        ]
        for name, formula, interpolated in rows:
            ok = formula == interpolated
            ok_all = ok_all and ok
            status = "pass" if ok else "FAIL"
            print(
                f"t={format_rational(t)} {name}: formula={_exact_str(formula)} "
                f"oracle={_exact_str(interpolated)} [{status}]"
            )
            checks.append(
                {
                    "t": format_rational(t),
                    "coefficient": name,
                    "formula": _exact_json(formula),
                    "oracle": _exact_json(interpolated),
                    "pass": ok,
                }
            )
    report = {"schema": SCHEMA, "command": "verify", "checks": checks, "pass": ok_all}
    _emit(report, args.json)
    return 0 if ok_all else 1


def _cmd_dedekind(args) -> int:
    try:
        value = dr_sum_fast(args.h, args.k, args.x, args.y)
    except ValueError as exc:
        raise InputError(str(exc))
    print(format_rational(value))
    _emit(
        {
            "schema": SCHEMA,
            "command": "dedekind",
            "h": args.h,
            "k": args.k,
            "x": format_rational(Fraction(args.x)),
            "y": format_rational(Fraction(args.y)),
            "value": format_rational(value),
        },
        args.json,
    )
    return 0


def _cmd_lattice_sum(args) -> int:
    try:
        with open(args.problem) as f:
            data = json.load(f)
    except OSError as exc:
        raise InputError(f"cannot read {args.problem}: {exc}")
    except json.JSONDecodeError as exc:
        raise InputError(f"{args.problem}: malformed JSON: {exc.msg}")
    try:
        basis = [[parse_rational(str(c)) for c in col] for col in data["basis"]]
        w_cols = [[parse_rational(str(c)) for c in col] for col in data["w"]]
        e = [int(v) for v in data["e"]]
        x = [parse_rational(str(c)) for c in data["x"]]
        dim = len(basis[0])
        problem = lattice_sum.LatticeSumProblem(
            EmbeddedLattice(dim, tuple(tuple(c) for c in basis)),
            tuple(tuple(c) for c in w_cols),
            tuple(e),
            tuple(x),
        )
    except (KeyError, ValueError, TypeError, IndexError) as exc:
        raise InputError(f"{args.problem}: {exc}")
    value = lattice_sum.lattice_sum_finite(problem)
    print(_exact_str(value))
    _emit(
        {"schema": SCHEMA, "command": "lattice-sum", "value": _exact_json(value)},
        args.json,
    )
    return 0


def _cmd_concrete(args) -> int:
    P = _load_polytope(args.polytope)
    rep = concrete_mod.is_concrete(P, args.tmax)
    if rep.concrete:
        print(f"concrete for t = 1..{args.tmax}")
    else:
        print(
            f"not concrete: fails at t={rep.failed_t} "
            f"with defect {_exact_str(rep.defect)}"
        )
    tiling = concrete_mod.symmetrized_multitiling_level(
        P, samples=args.samples, seed=args.seed
    )
    if tiling.is_multitiling:
        print(f"symmetrized copy multi-tiles at level {tiling.level} "
              f"(sampled {tiling.samples} points)")
    else:
        print("symmetrized copy is not a constant-multiplicity tiling "
              f"(witness {tiling.witness})")
    report = {
        "schema": SCHEMA,
        "command": "concrete",
        "concrete": rep.concrete,
        "failed_t": rep.failed_t,
        "defect": _exact_json(rep.defect) if rep.defect is not None else None,
        "tiling_level": tiling.level,
        "samples": tiling.samples,
    }
    _emit(report, args.json)
    return 0


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eak",
        description="Exact solid-angle sums, Ehrhart quasi-coefficients and "
        "Dedekind-Rademacher sums for rational polytopes.",
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=None,
        help="worker thread cap (default: EAK_THREADS or the core count)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="closed-form coefficient tables and evaluations")
    p.add_argument("polytope")
    p.add_argument("--flavor", choices=["solid-angle", "ehrhart", "both"], default="both")
    p.add_argument("--eval", action="append", type=_rational, metavar="T")
    p.add_argument("--dump-local", action="store_true")
    p.add_argument("--json")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("eval", help="evaluate the full degree-3 quasi-polynomial")
    p.add_argument("polytope")
    p.add_argument("--flavor", choices=["solid-angle", "ehrhart"], default="ehrhart")
    p.add_argument("--t", action="append", type=_rational, required=True)
    p.add_argument("--json")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("verify", help="formula-vs-oracle comparison table")
    p.add_argument("polytope")
    p.add_argument("--t", action="append", type=_rational, required=True)
    p.add_argument("--json")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("dedekind", help="exact Dedekind-Rademacher sum")
    p.add_argument("h", type=int)
    p.add_argument("k", type=int)
    p.add_argument("x", type=_rational, nargs="?", default=Fraction(0))
    p.add_argument("y", type=_rational, nargs="?", default=Fraction(0))
    p.add_argument("--json")
    p.set_defaults(func=_cmd_dedekind)

    p = sub.add_parser("lattice-sum", help="exact finite lattice-sum evaluation")
    p.add_argument("problem")
    p.add_argument("--json")
    p.set_defaults(func=_cmd_lattice_sum)

    p = sub.add_parser("concrete", help="concreteness and multi-tiling checks")
    p.add_argument("polytope")
    p.add_argument("--tmax", type=int, default=4)
    p.add_argument("--samples", type=int, default=256)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json")
    p.set_defaults(func=_cmd_concrete)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    if args.threads is None:
        env = os.environ.get("EAK_THREADS")
        args.threads = int(env) if env else os.cpu_count()
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except oracle.BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
