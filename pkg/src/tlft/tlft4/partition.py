"""The four-dimensional partition function.

psi = |G|^-(V + N4) * sum over states of prod B(T) prod B(F) prod B(E),

with V the number of vertices and N4 the number of 4-simplices (the sizes of
the primal and dual gauge groups).  Sums over gauge orbits are taken on one
representative and multiplied by the orbit size.
"""
from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from ..cocycles import CocycleError, CocycleSystem, check_conditions, check_symmetries
from ..cyclotomic import CycScalar
from ..flat import Budget
from ..simplicial import Triangulation, TriangulationError, orient
from .dual import build_dual, triangulate_dual
from .model import StateSumModel
from .states import State, dual_colorings, dual_tree, gauge_multiplicity, primal_colorings
from .weights import WeightEvaluator

DEFAULT_BUDGET = 10 ** 8


@dataclass
class PartitionConfig:
    dual_seed: int = 0
    gauge: str = "both"          # none | primal | dual | both
    threads: int = 1
    budget: int | None = DEFAULT_BUDGET
    tet_sign: str = "crossing"
    check_cocycle: bool = True


@dataclass
class PartitionResult:
    value: CycScalar
    states: int                  # states actually visited
    represented: int             # states represented (visited times gauge multiplicity)
    rule_evaluations: int
    seconds: float
    stats: dict = field(default_factory=dict)


def _chunk_sum(model, ev, G, colorings, fix_dual, tree, budget):
    N = ev.N
    total = [0] * N
    n = 0
    for g in colorings:
        for x in dual_colorings(model, G, g, fix_dual, budget, tree):
            c = ev.state_counts(State(tuple(g), tuple(x)))
            budget.spend(len(model.cells))
            total = [a + b for a, b in zip(total, c)]
            n += 1
    return total, n


def partition_4d(T: Triangulation, sys: CocycleSystem, config: PartitionConfig | None = None,
                 **overrides) -> PartitionResult:
    cfg = config or PartitionConfig()
    for k, v in overrides.items():
        setattr(cfg, k, v)
    if T.dim != 4:
        raise TriangulationError("partition_4d needs a 4-dimensional complex")
    if cfg.check_cocycle:
        if check_conditions(sys):
            raise CocycleError("cocycle conditions fail")
        if check_symmetries(sys):
            raise CocycleError("cocycle symmetries fail")
    if not T.oriented:
        T = orient(T)
    start = time.perf_counter()
    G = sys.group
    D = build_dual(T)
    F = triangulate_dual(D, cfg.dual_seed)
    model = StateSumModel(D, F, cfg.tet_sign)
    ev = WeightEvaluator(model, sys)
    budget = Budget(cfg.budget)
    fix = {"none": (), "primal": ("primal",), "dual": ("dual",), "both": ("primal", "dual")}[cfg.gauge]
    primals = list(primal_colorings(model, G, "primal" in fix, budget))
    tree = dual_tree(model)
    threads = max(1, int(cfg.threads))
    chunks = [primals[i::threads] for i in range(threads)] if threads > 1 else [primals]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda ch: _chunk_sum(model, ev, G, ch, "dual" in fix, tree, budget),
                                  chunks))
    else:
        parts = [_chunk_sum(model, ev, G, primals, "dual" in fix, tree, budget)]
    N = sys.N
    total = [0] * N
    visited = 0
    for counts, n in parts:
        total = [a + b for a, b in zip(total, counts)]
        visited += n
    mult = gauge_multiplicity(model, G, cfg.gauge)
    denom = G.order ** (T.vertex_count + len(D.vertices) + len(D.cells))
    value = CycScalar.from_exponent_counts(N, total).scale(Fraction(mult, denom))
    return PartitionResult(value, visited, visited * mult, budget.used,
                           time.perf_counter() - start, D.stats())
