"""Total domination on orientations of simple graphs.

A set S totally dominates an orientation when every vertex has an in-neighbour
in S, i.e. the union of the out-neighbourhoods of S is the whole vertex set.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph, GraphError, SizeLimitError, VertexSet, bits, popcount

ORACLE_LIMIT = 20
MINIMAL_SETS_LIMIT = 16
OVERDOMINATION_LIMIT = 20

# simple graphs: no vertex dominates itself and no two vertices dominate each other
UNIVERSAL_LOWER_BOUND = 3


class InvalidOrientationError(ValueError):
    """Some vertex has in-degree 0, so no total dominating set exists."""


class OrientationError(ValueError):
    pass


@dataclass(frozen=True)
class Orientation:
    """Direction for every edge of ``base``.

    Bit i of ``direction`` refers to ``base.edges[i] = (u, v)`` with u < v:
    0 orients it u -> v, 1 orients it v -> u.
    """

    base: Graph
    direction: int
    out_adj: tuple[int, ...]
    in_adj: tuple[int, ...]

    @classmethod
    def from_direction(cls, base: Graph, direction: int) -> "Orientation":
        out = [0] * base.n
        inn = [0] * base.n
        for i, (u, v) in enumerate(base.edges):
            if direction >> i & 1:
                u, v = v, u
            out[u] |= 1 << v
            inn[v] |= 1 << u
        return cls(base, direction, tuple(out), tuple(inn))

    @classmethod
    def from_arcs(cls, base: Graph, arcs: Iterable[Sequence[int]]) -> "Orientation":
        index = base.edge_index()
        direction = 0
        seen = set()
        for arc in arcs:
            a, b = arc
            key = (min(a, b), max(a, b))
            if key not in index:
                raise OrientationError(f"arc {a}->{b} is not an edge of the base graph")
            if key in seen:
                raise OrientationError(f"edge {key} oriented twice")
            seen.add(key)
            if a > b:
                direction |= 1 << index[key]
        if len(seen) != base.m:
            missing = [e for e in base.edges if e not in seen]
            raise OrientationError(f"edges left unoriented: {missing}")
        return cls.from_direction(base, direction)

    @classmethod
    def from_out_masks(cls, base: Graph, out_adj: Sequence[int]) -> "Orientation":
        direction = 0
        for i, (u, v) in enumerate(base.edges):
            if out_adj[v] >> u & 1:
                direction |= 1 << i
        return cls.from_direction(base, direction)

    @property
    def n(self) -> int:
        return self.base.n

    def arcs(self) -> list[list[int]]:
        """Arc list in canonical edge order."""
        out = []
        for i, (u, v) in enumerate(self.base.edges):
            out.append([v, u] if self.direction >> i & 1 else [u, v])
        return out

    def out_degree(self, v: int) -> int:
        return popcount(self.out_adj[v])

    def in_degree(self, v: int) -> int:
        return popcount(self.in_adj[v])

    def reversed(self) -> "Orientation":
        return Orientation.from_direction(self.base, self.direction ^ ((1 << self.base.m) - 1))


def is_valid(d: Orientation) -> bool:
    return all(d.in_adj)


def is_total_dominating(d: Orientation, s: VertexSet | int) -> bool:
    mask = s.mask if isinstance(s, VertexSet) else s
    covered = 0
    for v in bits(mask):
        covered |= d.out_adj[v]
    return covered == d.base.vertex_mask


def dominated_by(out_adj: Sequence[int], mask: int) -> int:
    covered = 0
    for v in bits(mask):
        covered |= out_adj[v]
    return covered


# exact solver -----------------------------------------------------------------


def _greedy(out_adj: Sequence[int], full: int) -> int:
    chosen = 0
    undominated = full
    while undominated:
        best_v, best_gain = -1, 0
        for v in range(len(out_adj)):
            gain = popcount(out_adj[v] & undominated)
            if gain > best_gain:
                best_v, best_gain = v, gain
        chosen |= 1 << best_v
        undominated &= ~out_adj[best_v]
    return chosen


def solve_masks(
    out_adj: Sequence[int],
    in_adj: Sequence[int],
    *,
    lo: int | None = None,
    hi: int | None = None,
    stop_below: int | None = None,
) -> tuple[int, int]:
    """Branch and bound for the minimum total dominating set.

    Returns ``(size, witness_mask)``. Without keyword arguments the size is
    exact. With ``lo``/``hi`` the size is exact whenever it is below ``lo`` or
    above ``hi``; otherwise the returned witness is some total dominating set
    whose size lies in [lo, hi]. With ``stop_below`` the search ends at the
    first set smaller than that value.
    """
    n = len(out_adj)
    full = (1 << n) - 1
    best_mask = _greedy(out_adj, full)
    best = popcount(best_mask)
    if lo is None or hi is None:
        lo, hi = n + 1, -1

    def bound() -> int:
        if stop_below is not None and best < stop_below:
            return 0
        if best <= hi:
            return min(best, lo)
        return best

    def search(chosen: int, size: int, undominated: int, excluded: int) -> None:
        nonlocal best, best_mask
        if not undominated:
            if size < best:
                best, best_mask = size, chosen
            return
        limit = bound()
        if size + 1 > limit - 1:
            return
        # vertex with fewest available dominators; lowest index on ties
        pick, pick_cands, pick_count = -1, 0, n + 1
        max_gain = 0
        for u in bits(undominated):
            cands = in_adj[u] & ~excluded
            c = popcount(cands)
            if c < pick_count:
                pick, pick_cands, pick_count = u, cands, c
                if c == 0:
                    return
        for v in bits(full & ~excluded & ~chosen):
            g = popcount(out_adj[v] & undominated)
            if g > max_gain:
                max_gain = g
        remaining = popcount(undominated)
        if size + -(-remaining // max_gain) >= limit:
            return
        tried = 0
        for v in bits(pick_cands):
            search(chosen | (1 << v), size + 1, undominated & ~out_adj[v], excluded | tried)
            tried |= 1 << v
            if bound() <= size + 1:
                return

    search(0, 0, full, 0)
    return best, best_mask


def _check_lower_bound(value: int) -> int:
    if value < UNIVERSAL_LOWER_BOUND:
        raise AssertionError(f"total domination number {value} below the universal bound 3")
    return value


def gamma_t_with_witness(d: Orientation) -> tuple[int, VertexSet]:
    if not is_valid(d):
        raise InvalidOrientationError("no total dominating set: some vertex has in-degree 0")
    size, mask = solve_masks(d.out_adj, d.in_adj)
    return _check_lower_bound(size), VertexSet(mask)


def gamma_t(d: Orientation) -> int:
    return gamma_t_with_witness(d)[0]


def gamma_t_oracle(d: Orientation) -> int:
    """Exhaustive search over subsets in order of increasing size."""
    if d.n > ORACLE_LIMIT:
        raise SizeLimitError(f"oracle limited to n <= {ORACLE_LIMIT}")
    if not is_valid(d):
        raise InvalidOrientationError("no total dominating set: some vertex has in-degree 0")
    full = d.base.vertex_mask
    for k in range(1, d.n + 1):
        for combo in itertools.combinations(range(d.n), k):
            covered = 0
            for v in combo:
                covered |= d.out_adj[v]
            if covered == full:
                return k
    raise AssertionError("unreachable for a valid orientation")


def _subset_cover_table(out_adj: Sequence[int]) -> list[int]:
    n = len(out_adj)
    table = [0] * (1 << n)
    for s in range(1, 1 << n):
        low = s & -s
        table[s] = table[s ^ low] | out_adj[low.bit_length() - 1]
    return table


def minimal_total_dominating_sets(d: Orientation) -> list[VertexSet]:
    if d.n > MINIMAL_SETS_LIMIT:
        raise SizeLimitError(f"minimal set enumeration limited to n <= {MINIMAL_SETS_LIMIT}")
    if not is_valid(d):
        raise InvalidOrientationError("no total dominating set: some vertex has in-degree 0")
    full = d.base.vertex_mask
    cover = _subset_cover_table(d.out_adj)
    result = []
    for s in range(1, 1 << d.n):
        if cover[s] != full:
            continue
        if all(cover[s & ~(1 << v)] != full for v in bits(s)):
            result.append(VertexSet(s))
    return result


def has_overdominating_set(d: Orientation) -> bool:
    """Whether some S has an out-neighbourhood union of size at least |S| + 2."""
    if any(popcount(o) >= 3 for o in d.out_adj):
        return True
    if d.n > OVERDOMINATION_LIMIT:
        raise SizeLimitError(f"overdomination check limited to n <= {OVERDOMINATION_LIMIT}")
    cover = _subset_cover_table(d.out_adj)
    return any(popcount(cover[s]) >= popcount(s) + 2 for s in range(1, 1 << d.n))


def witness_json(s: VertexSet) -> list[int]:
    return s.to_list()


__all__ = [
    "GraphError",
    "InvalidOrientationError",
    "Orientation",
    "OrientationError",
    "dominated_by",
    "gamma_t",
    "gamma_t_oracle",
    "gamma_t_with_witness",
    "has_overdominating_set",
    "is_total_dominating",
    "is_valid",
    "minimal_total_dominating_sets",
    "solve_masks",
]
