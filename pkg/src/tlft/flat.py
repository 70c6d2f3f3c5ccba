"""Backtracking enumeration of flat group-valued labelings.

Variables take values in a finite group.  A constraint is a closed cycle of
slots ``(var, sign, conj)``; the slot value is ``conj * x^sign * conj^-1``
(``conj`` may be None) and the constraint requires

    slot[n-1] * ... * slot[1] * slot[0] = e

(paths compose right to left, like the edge rule m = g k).  Whenever a
constraint has exactly one unknown it is solved and propagated.
"""
from __future__ import annotations

from .groups import FiniteGroup


class BudgetExceeded(RuntimeError):
    pass


class Budget:
    """Counts rule evaluations; raises once ``limit`` is passed."""

    def __init__(self, limit: int | None = None):
        self.limit = limit
        self.used = 0

    def spend(self, k: int = 1):
        self.used += k
        if self.limit is not None and self.used > self.limit:
            raise BudgetExceeded(f"rule-evaluation budget of {self.limit} exhausted")


def solve_flat(G: FiniteGroup, n_vars: int, constraints, fixed=None, free_order=None,
               budget: Budget | None = None):
    """Yield every assignment (list of group elements) satisfying all
    constraints and agreeing with ``fixed`` (dict var -> value)."""
    M, I, e = G.table, G.inverse, G.identity
    budget = budget or Budget()
    cons = [list(c) for c in constraints]
    by_var = [[] for _ in range(n_vars)]
    for ci, c in enumerate(cons):
        for var, _, _ in c:
            by_var[var].append(ci)
    val = [-1] * n_vars
    order = list(free_order) if free_order is not None else list(range(n_vars))

    def slot_value(var, sign, conj, x):
        y = x if sign > 0 else int(I[x])
        if conj is not None:
            y = int(M[M[conj, y], I[conj]])
        return y

    def assign(var, x, trail, queue):
        val[var] = x
        trail.append(var)
        queue.extend(by_var[var])

    def propagate(queue, trail) -> bool:
        while queue:
            ci = queue.pop()
            c = cons[ci]
            budget.spend()
            unknown = [i for i, s in enumerate(c) if val[s[0]] < 0]
            if len(unknown) > 1:
                continue
            if not unknown:
                prod = e
                for var, sign, conj in c:
                    prod = int(M[slot_value(var, sign, conj, val[var]), prod])
                if prod != e:
                    return False
                continue
            u = unknown[0]
            # value of slot u forced by s_after * s_u * s_before = e
            before = e
            for var, sign, conj in c[:u]:
                before = int(M[slot_value(var, sign, conj, val[var]), before])
            after = e
            for var, sign, conj in c[u + 1:]:
                after = int(M[slot_value(var, sign, conj, val[var]), after])
            s = int(M[I[after], I[before]])
            var, sign, conj = c[u]
            if conj is not None:
                s = int(M[M[I[conj], s], conj])
            x = s if sign > 0 else int(I[s])
            # the same variable may occur twice in one cycle
            if val[var] >= 0:
                if val[var] != x:
                    return False
                continue
            assign(var, x, trail, queue)
        return True

    def undo(trail, mark):
        while len(trail) > mark:
            val[trail.pop()] = -1

    trail = []
    queue = []
    for var, x in (fixed or {}).items():
        if val[var] >= 0 and val[var] != x:
            return
        assign(var, x, trail, queue)
    if not propagate(queue, trail):
        return
    yield from _search(G, order, 0, val, trail, assign, propagate, undo, budget)


def _search(G, order, pos, val, trail, assign, propagate, undo, budget):
    while pos < len(order) and val[order[pos]] >= 0:
        pos += 1
    if pos == len(order):
        yield list(val)
        return
    var = order[pos]
    for x in G.elements():
        budget.spend()
        mark = len(trail)
        queue = []
        assign(var, x, trail, queue)
        if propagate(queue, trail):
            yield from _search(G, order, pos + 1, val, trail, assign, propagate, undo, budget)
        undo(trail, mark)


def spanning_tree_edges(n_nodes: int, edges, root: int = 0) -> list:
    """Indices of a BFS spanning tree of the graph with the given edge list
    (pairs of node indices), or raise if it is disconnected."""
    adj = [[] for _ in range(n_nodes)]
    for i, (a, b) in enumerate(edges):
        adj[a].append((b, i))
        adj[b].append((a, i))
    seen = {root}
    tree = []
    frontier = [root]
    while frontier:
        nxt = []
        for a in frontier:
            for b, i in adj[a]:
                if b not in seen:
                    seen.add(b)
                    tree.append(i)
                    nxt.append(b)
        frontier = nxt
    if len(seen) != n_nodes:
        raise ValueError("graph is not connected")
    return tree
