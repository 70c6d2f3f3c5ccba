"""Command-line front end.  Every command prints one JSON report on stdout;
short human summaries go to stderr.

Exit codes: 0 success, 1 validation error, 2 budget exhausted.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .cocycles import (CocycleError, CocycleSystem, check_conditions, check_symmetries,
                       cubic_dw3, parse_cocycle, parse_dw3, relation_matrix, serialize_cocycle,
                       smith_kernel, solution_count, trivial_dw3, trivial_system)
from .cyclotomic import CycScalar
from .dw3 import partition_dw3
from .flat import BudgetExceeded
from .groups import group_from_spec
from .pachner import random_walk
from .simplicial import (Triangulation, TriangulationError, euler_characteristic, is_connected,
                         load, orient, serialize_triangulation)
from .statesum2d import group_algebra, parse_algebra, partition_2d
from .tlft4 import PartitionConfig, build_dual, partition_4d, triangulate_dual


class UsageError(ValueError):
    pass


def _emit(report: dict) -> None:
    print(json.dumps(report, sort_keys=True))


def _read(path) -> str:
    return Path(path).read_text(encoding="utf-8")


def _apply_order(T: Triangulation, spec: str | None) -> Triangulation:
    if spec is None or spec == "natural":
        return T
    order = [int(w) for w in spec.replace(",", " ").split()]
    if sorted(order) != sorted(T.vertices):
        raise UsageError("--order must list every vertex exactly once")
    return T.with_order(order)


def _dw_cocycle(args, G):
    name = args.cocycle or "trivial"
    if name == "trivial":
        return trivial_dw3(G, args.N or 2)
    if name == "cubic":
        return cubic_dw3(G)
    c = parse_dw3(_read(name))
    if c.group.order != G.order:
        raise CocycleError("cocycle file is over a different group")
    return c


def _system(args, G):
    name = args.cocycle or "trivial"
    if name == "trivial":
        return trivial_system(G, args.N or 2)
    s = parse_cocycle(_read(name))
    if s.group.order != G.order:
        raise CocycleError("cocycle file is over a different group")
    return s


def _evaluate(T: Triangulation, args) -> tuple:
    """(value, extra report fields) for the invariant selected by the flags."""
    if T.dim == 2:
        A = parse_algebra(_read(args.algebra)) if args.algebra else group_algebra(
            group_from_spec(args.group or "Z2"))
        return CycScalar.rational(1, partition_2d(T, A, threads=args.threads)), {}
    G = group_from_spec(args.group or "Z2")
    if T.dim == 3:
        return partition_dw3(T, G, _dw_cocycle(args, G), budget=args.budget,
                             threads=args.threads), {}
    cfg = PartitionConfig(dual_seed=args.dual_seed, threads=args.threads, budget=args.budget,
                          gauge=args.gauge)
    res = partition_4d(T, _system(args, G), cfg)
    return res.value, {"states": res.represented, "states_visited": res.states,
                       "rule_evaluations": res.rule_evaluations, "dual": res.stats}


def _load_complex(args) -> Triangulation:
    T = load(args.complex)
    if args.dim is not None and T.dim != args.dim:
        raise UsageError(f"--dim {args.dim} but the complex has dimension {T.dim}")
    return _apply_order(T, getattr(args, "order", None))


def cmd_validate(args) -> dict:
    T = load(args.complex)
    oriented = True
    try:
        orient(T)
    except TriangulationError:
        oriented = False
    return {"command": "validate", "complex": args.complex, "dim": T.dim,
            "f_vector": list(T.f_vector()), "euler_characteristic": euler_characteristic(T),
            "closed": True, "connected": is_connected(T), "orientable": oriented}


def cmd_invariant(args) -> dict:
    T = _load_complex(args)
    value, extra = _evaluate(T, args)
    report = {"command": "invariant", "complex": args.complex, "dim": T.dim,
              "group": args.group, "cocycle": args.cocycle, "algebra": args.algebra,
              "dual_seed": args.dual_seed, "order": args.order or "natural",
              "value": value.to_json()}
    report.update(extra)
    return report


def cmd_pachner(args) -> dict:
    T = _load_complex(args)
    before, _ = _evaluate(T, args)
    T2, log = random_walk(T, args.steps, args.seed, args.max_facets)
    after, _ = _evaluate(T2, args)
    if args.output:
        Path(args.output).write_text(serialize_triangulation(T2), encoding="utf-8")
    return {"command": "pachner", "complex": args.complex, "dim": T.dim, "seed": args.seed,
            "steps": args.steps, "max_facets": args.max_facets,
            "moves": [line for line in log if not line.startswith("#")],
            "rejected": [line for line in log if line.startswith("#")],
            "facets_before": len(T.facets), "facets_after": len(T2.facets),
            "before": before.to_json(), "after": after.to_json(), "equal": before == after}


def _violation_list(v) -> list:
    return [[name, [int(i) for i in idx]] for name, idx in v]


def cmd_cocycle(args) -> dict:
    if args.action == "check":
        if args.source in (None, "trivial"):
            if not args.group:
                raise UsageError("checking the trivial system needs --group")
            s = trivial_system(group_from_spec(args.group), args.N or 2)
        else:
            s = parse_cocycle(_read(args.source))
        cond = check_conditions(s)
        sym = check_symmetries(s) if args.symmetries else []
        return {"command": "cocycle check", "source": args.source or "trivial",
                "group": s.group.name, "N": s.N, "condition_violations": _violation_list(cond),
                "symmetry_violations": _violation_list(sym),
                "violations": len(cond) + len(sym)}
    if not args.group:
        raise UsageError("cocycle search needs --group")
    G = group_from_spec(args.group)
    N = args.N or 2
    A = relation_matrix(G, args.symmetries)
    gens, invariants = smith_kernel(A, N)
    systems = [CocycleSystem.from_vector(G, N, v) for v in gens]
    rechecks = [not check_conditions(s) and (not args.symmetries or not check_symmetries(s))
                for s in systems]
    if args.output:
        out = Path(args.output)
        out.mkdir(parents=True, exist_ok=True)
        for i, s in enumerate(systems):
            (out / f"gen{i:03d}.cyc").write_text(serialize_cocycle(s, args.group), encoding="utf-8")
    return {"command": "cocycle search", "group": args.group, "N": N,
            "symmetries": args.symmetries, "relations": int(A.shape[0]),
            "unknowns": int(A.shape[1]), "generators": len(systems),
            "solution_count": solution_count(invariants, int(A.shape[1]), N),
            "all_pass_recheck": all(rechecks),
            "basis": [[[int(i), int(v[i])] for i in v.nonzero()[0]] for v in gens]}


def cmd_dual(args) -> dict:
    T = _load_complex(args)
    D = build_dual(T)
    F = triangulate_dual(D, args.dual_seed)
    triangles = sum(len(f) for f in F.fans)
    cone_tets = sum(len(F.cone_triangles(D, i)) for i in range(len(D.cells)))
    stats = D.stats()
    stats.update({"dual_seed": args.dual_seed, "polygon_triangles": triangles,
                  "cone_tetrahedra": cone_tets, "interior_vertices": sum(F.interior)})
    return {"command": "dual", "complex": args.complex, **stats}


def _add_invariant_flags(p) -> None:
    p.add_argument("--complex", required=True, help="triangulation file")
    p.add_argument("--dim", type=int, choices=(2, 3, 4))
    p.add_argument("--group", help="group spec: Z2, Z3, Z4, Z2xZ2, S3, D4, ...")
    p.add_argument("--cocycle", help="'trivial', 'cubic' (dim 3, Z2) or a cocycle file")
    p.add_argument("-N", type=int, help="root order for the trivial cocycle")
    p.add_argument("--algebra", help="algebra file (dim 2); default: group algebra")
    p.add_argument("--order", help="'natural' or a vertex permutation, least vertex first")
    p.add_argument("--dual-seed", type=int, default=0)
    p.add_argument("--gauge", default="both", choices=("none", "primal", "dual", "both"))
    p.add_argument("--budget", type=int, default=10 ** 8, help="rule-evaluation cap")
    p.add_argument("--threads", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tlft", description=__doc__.splitlines()[0])
    ap.add_argument("--no-timing", action="store_true",
                    help="omit wall time from the report (byte-stable output)")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a triangulation file")
    p.add_argument("complex")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("invariant", help="compute the state-sum invariant")
    _add_invariant_flags(p)
    p.set_defaults(func=cmd_invariant)

    p = sub.add_parser("pachner", help="random move walk with before/after invariants")
    _add_invariant_flags(p)
    p.add_argument("--steps", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-facets", type=int)
    p.add_argument("--output", help="write the final complex here")
    p.set_defaults(func=cmd_pachner)

    p = sub.add_parser("cocycle", help="check or search cocycle systems")
    p.add_argument("action", choices=("check", "search"))
    p.add_argument("source", nargs="?", help="cocycle file or 'trivial' (check only)")
    p.add_argument("--group")
    p.add_argument("-N", type=int)
    p.add_argument("--symmetries", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--output", help="directory for the generators (search)")
    p.set_defaults(func=cmd_cocycle)

    p = sub.add_parser("dual", help="dual skeleton and 3-face triangulation statistics")
    p.add_argument("--complex", required=True)
    p.add_argument("--dim", type=int, choices=(4,))
    p.add_argument("--dual-seed", type=int, default=0)
    p.set_defaults(func=cmd_dual)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        report = args.func(args)
    except BudgetExceeded as exc:
        _emit({"command": args.command, "error": "budget", "message": str(exc)})
        return 2
    except (ValueError, OSError) as exc:
        _emit({"command": args.command, "error": type(exc).__name__, "message": str(exc)})
        return 1
    if not args.no_timing:
        report["seconds"] = round(time.perf_counter() - start, 3)
    _emit(report)
    if "value" in report:
        print(f"{args.command}: {CycScalar.from_json(report['value'])!r}", file=sys.stderr)
    if report.get("violations"):
        print(f"{report['violations']} violated instances", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
