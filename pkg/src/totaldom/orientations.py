"""Valid orientations: construction, enumeration, DOM_t / dom_t and the pruned
search for extremal orientations (gamma_t = n - 1)."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterator

from .domination import (
    Orientation,
    has_overdominating_set,
    is_valid,
    solve_masks,
    _check_lower_bound,
)
from .graph import (
    Graph,
    GraphError,
    bits,
    component_masks,
    in_class_c,
    is_connected,
    is_cycle,
    popcount,
)

EDGE_BUDGET = 24

RULE_IN_DEGREE = "in-degree"
RULE_OUT_DEGREE_CAP = "out-degree-cap"
RULE_COMMON_OUT_NEIGHBOR = "common-out-neighbor"
RULE_ZERO_OUT_DEGREE_CAP = "zero-out-degree-cap"
RULE_OVERDOMINATING = "overdominating"
PRUNE_RULES = (RULE_IN_DEGREE, RULE_OUT_DEGREE_CAP, RULE_COMMON_OUT_NEIGHBOR, RULE_ZERO_OUT_DEGREE_CAP)


class NotInClassCError(ValueError):
    """The graph has a tree component, so it admits no valid orientation."""


class BudgetExceededError(ValueError):
    pass


class PreconditionError(ValueError):
    pass


@dataclass
class OrientationSearchStats:
    orientations_examined: int = 0
    nodes_pruned_by_rule: dict[str, int] = field(default_factory=lambda: dict.fromkeys(PRUNE_RULES, 0))
    solver_calls: int = 0

    def merge(self, other: "OrientationSearchStats") -> None:
        self.orientations_examined += other.orientations_examined
        self.solver_calls += other.solver_calls
        for k, v in other.nodes_pruned_by_rule.items():
            self.nodes_pruned_by_rule[k] = self.nodes_pruned_by_rule.get(k, 0) + v

    def to_dict(self) -> dict:
        return {
            "orientations_examined": self.orientations_examined,
            "nodes_pruned_by_rule": dict(self.nodes_pruned_by_rule),
            "solver_calls": self.solver_calls,
        }


def construct_valid_orientation(g: Graph) -> Orientation:
    """Per component: a cycle found from a BFS tree is oriented as a circuit and
    every other vertex receives an arc from its BFS parent, away from the cycle."""
    if not in_class_c(g):
        raise NotInClassCError("graph has a tree component; no valid orientation exists")
    out = [0] * g.n
    assigned: set[tuple[int, int]] = set()

    def orient(u: int, v: int) -> None:
        out[u] |= 1 << v
        assigned.add((min(u, v), max(u, v)))

    for comp in component_masks(g):
        root = (comp & -comp).bit_length() - 1
        parent = {root: -1}
        depth = {root: 0}
        queue = deque([root])
        chord = None
        while queue:
            u = queue.popleft()
            for v in bits(g.adj[u]):
                if v not in parent:
                    parent[v] = u
                    depth[v] = depth[u] + 1
                    queue.append(v)
                elif v != parent[u] and chord is None:
                    chord = (u, v)
        a, b = chord
        # tree path a .. lca .. b, then the chord b -> a closes the circuit
        up_a, up_b = [a], [b]
        while up_a[-1] != up_b[-1]:
            if depth[up_a[-1]] >= depth[up_b[-1]]:
                up_a.append(parent[up_a[-1]])
            else:
                up_b.append(parent[up_b[-1]])
        cycle = up_a + up_b[-2::-1]
        for i in range(len(cycle)):
            orient(cycle[i], cycle[(i + 1) % len(cycle)])
        seen = set(cycle)
        queue = deque(cycle)
        while queue:
            u = queue.popleft()
            for v in bits(g.adj[u]):
                if v not in seen:
                    seen.add(v)
                    orient(u, v)
                    queue.append(v)
        for u, v in g.edges:
            if comp >> u & 1 and (u, v) not in assigned:
                orient(u, v)
    return Orientation.from_out_masks(g, out)


def _check_budget(g: Graph, budget: int) -> None:
    if g.m > budget:
        raise BudgetExceededError(f"{g.m} edges exceeds the exact-enumeration budget of {budget}")


def iter_valid_out_masks(g: Graph) -> Iterator[tuple[list[int], list[int]]]:
    """Backtracking over edges in canonical order; yields shared (out, in) mask
    lists for every valid orientation. Callers must copy what they keep."""
    edges = g.edges
    m = len(edges)
    out = [0] * g.n
    inn = [0] * g.n
    remaining = [popcount(a) for a in g.adj]

    def rec(i: int) -> Iterator[tuple[list[int], list[int]]]:
        if i == m:
            yield out, inn
            return
        u, v = edges[i]
        remaining[u] -= 1
        remaining[v] -= 1
        for a, b in ((u, v), (v, u)):
            out[a] |= 1 << b
            inn[b] |= 1 << a
            if (inn[a] or remaining[a]) and (inn[b] or remaining[b]):
                yield from rec(i + 1)
            out[a] &= ~(1 << b)
            inn[b] &= ~(1 << a)
        remaining[u] += 1
        remaining[v] += 1

    # isolated vertices can never be covered
    if any(a == 0 for a in g.adj):
        return
    yield from rec(0)


def enumerate_valid_orientations(g: Graph, *, budget: int = EDGE_BUDGET) -> Iterator[Orientation]:
    if not in_class_c(g):
        raise NotInClassCError("graph has a tree component; no valid orientation exists")
    _check_budget(g, budget)
    for out, _ in iter_valid_out_masks(g):
        yield Orientation.from_out_masks(g, out)


@dataclass
class OrientationRange:
    lower: int
    upper: int
    argmin: Orientation
    argmax: Orientation
    stats: OrientationSearchStats


def domt_range(g: Graph, *, budget: int = EDGE_BUDGET) -> OrientationRange:
    """dom_t and DOM_t in one enumeration pass.

    Each orientation is solved only as far as needed to decide whether it moves
    the running minimum or maximum.
    """
    if not in_class_c(g):
        raise NotInClassCError("graph has a tree component; no valid orientation exists")
    _check_budget(g, budget)
    stats = OrientationSearchStats()
    lower = upper = None
    arg_lo = arg_hi = None
    for out, inn in iter_valid_out_masks(g):
        stats.orientations_examined += 1
        stats.solver_calls += 1
        if lower is None:
            value, _ = solve_masks(out, inn)
            lower = upper = _check_lower_bound(value)
            arg_lo = arg_hi = tuple(out)
            continue
        value, _ = solve_masks(out, inn, lo=lower, hi=upper)
        if value < lower:
            lower, arg_lo = _check_lower_bound(value), tuple(out)
        elif value > upper:
            upper, arg_hi = value, tuple(out)
    return OrientationRange(
        lower,
        upper,
        Orientation.from_out_masks(g, arg_lo),
        Orientation.from_out_masks(g, arg_hi),
        stats,
    )


def domt_upper(g: Graph, *, budget: int = EDGE_BUDGET) -> int:
    return domt_range(g, budget=budget).upper


def domt_lower(g: Graph, *, budget: int = EDGE_BUDGET) -> int:
    return domt_range(g, budget=budget).lower


def extremal_violations(out_adj, n: int) -> list[str]:
    tags = []
    outdeg = [popcount(o) for o in out_adj]
    if any(d > 2 for d in outdeg):
        tags.append(RULE_OUT_DEGREE_CAP)
    if sum(1 for d in outdeg if d == 0) > 1:
        tags.append(RULE_ZERO_OUT_DEGREE_CAP)
    twos = [v for v in range(n) if outdeg[v] == 2]
    if any(not out_adj[a] & out_adj[b] for i, a in enumerate(twos) for b in twos[i + 1:]):
        tags.append(RULE_COMMON_OUT_NEIGHBOR)
    return tags


def verify_extremal_necessary_conditions(d: Orientation) -> list[str]:
    """Tags of the necessary conditions for gamma_t = n - 1 that ``d`` violates."""
    tags = extremal_violations(d.out_adj, d.n)
    if RULE_OUT_DEGREE_CAP in tags or has_overdominating_set(d):
        tags.append(RULE_OVERDOMINATING)
    return tags


def _search_order(g: Graph) -> list[tuple[int, int]]:
    deg = g.degrees()
    indexed = list(enumerate(g.edges))
    indexed.sort(key=lambda ie: (-max(deg[ie[1][0]], deg[ie[1][1]]), ie[0]))
    return [e for _, e in indexed]


def exists_extremal_orientation(
    g: Graph, *, require_preconditions: bool = True
) -> tuple[Orientation | None, OrientationSearchStats]:
    """Backtracking search for an orientation with gamma_t = n - 1.

    Partial assignments are cut when a finished vertex has in-degree 0, a vertex
    exceeds out-degree 2, two finished vertices end with out-degree 0, or two
    finished out-degree-2 vertices share no out-neighbour. Survivors are
    confirmed by the exact solver.
    """
    if require_preconditions:
        if not in_class_c(g):
            raise PreconditionError("graph is not in class C")
        if not is_connected(g):
            raise PreconditionError("graph is not connected")
        if is_cycle(g):
            raise PreconditionError("cycles are excluded: their DOM_t equals n")
    stats = OrientationSearchStats()
    pruned = stats.nodes_pruned_by_rule
    n = g.n
    order = _search_order(g)
    m = len(order)
    out = [0] * n
    inn = [0] * n
    remaining = [popcount(a) for a in g.adj]
    finished_zero = [0]
    finished_two: list[int] = []
    found: list[tuple[int, ...]] = []

    def finish(v: int) -> str | None:
        if not inn[v]:
            return RULE_IN_DEGREE
        d = popcount(out[v])
        if d == 0:
            if finished_zero[0] >= 1:
                return RULE_ZERO_OUT_DEGREE_CAP
        elif d == 2:
            for w in finished_two:
                if not out[w] & out[v]:
                    return RULE_COMMON_OUT_NEIGHBOR
        return None

    def rec(i: int) -> bool:
        if i == m:
            stats.orientations_examined += 1
            stats.solver_calls += 1
            size, _ = solve_masks(out, inn, stop_below=n - 1)
            if size == n - 1:
                found.append(tuple(out))
                return True
            return False
        u, v = order[i]
        remaining[u] -= 1
        remaining[v] -= 1
        for a, b in ((u, v), (v, u)):
            out[a] |= 1 << b
            inn[b] |= 1 << a
            if popcount(out[a]) > 2:
                pruned[RULE_OUT_DEGREE_CAP] += 1
            else:
                pushed: list[tuple[str, int]] = []
                reason = None
                for x in (a, b):
                    if remaining[x] == 0:
                        reason = finish(x)
                        if reason:
                            break
                        d = popcount(out[x])
                        if d == 0:
                            finished_zero[0] += 1
                            pushed.append(("zero", x))
                        elif d == 2:
                            finished_two.append(x)
                            pushed.append(("two", x))
                if reason:
                    pruned[reason] += 1
                else:
                    if rec(i + 1):
                        return True
                for kind, x in reversed(pushed):
                    if kind == "zero":
                        finished_zero[0] -= 1
                    else:
                        finished_two.pop()
            out[a] &= ~(1 << b)
            inn[b] &= ~(1 << a)
        remaining[u] += 1
        remaining[v] += 1
        return False

    if any(a == 0 for a in g.adj):
        return None, stats
    if rec(0):
        return Orientation.from_out_masks(g, found[0]), stats
    return None, stats

