"""Structural families whose members admit an orientation with gamma_t = n - 1.

F   cycle with a pendant path glued at one cycle vertex
F1  unique degree-1 vertex s, path s w_1 .. w_k, optional cycle components,
    every further edge incident with w_k
F2  vertex-disjoint cycles plus a hub s carrying every further edge
F3  an F1 member with one or two extra edges at s, subject to case conditions

Witnesses keep a reference to the graph they certify so that
:func:`extremal_orientation_for` needs nothing else.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Sequence, Union

from .domination import Orientation
from .graph import (
    Graph,
    GraphError,
    bits,
    component_masks,
    cycle_order,
    is_connected,
    is_isomorphic,
    popcount,
)

CASE_SINGLE = "single-edge"
CASE_DWK4 = "dwk4"
CASE_DWK3_WK = "dwk3-via-wk"
CASE_DWK3_XY = "dwk3-via-xy"
CASE_DWK2_WK = "dwk2-via-wk"
CASE_DWK2_X = "dwk2-via-x"
CASE_TAGS = (CASE_SINGLE, CASE_DWK4, CASE_DWK3_WK, CASE_DWK3_XY, CASE_DWK2_WK, CASE_DWK2_X)

_TAG_ALIASES = {
    "single": CASE_SINGLE,
    "dwk>=4": CASE_DWK4,
    "dwk≥4": CASE_DWK4,
    "dwk=3-via-wk": CASE_DWK3_WK,
    "dwk=3-via-xy": CASE_DWK3_XY,
    "dwk=2-via-wk": CASE_DWK2_WK,
    "dwk=2-via-x": CASE_DWK2_X,
}


def normalize_case_tag(tag: str) -> str:
    t = tag.strip().lower()
    t = _TAG_ALIASES.get(t, t)
    if t not in CASE_TAGS:
        raise ValueError(f"unknown case tag {tag!r}; expected one of {', '.join(CASE_TAGS)}")
    return t


class InvalidWitnessError(ValueError):
    pass


class FamilyParameterError(ValueError):
    pass


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


# witnesses ---------------------------------------------------------------------


@dataclass(frozen=True)
class FWitness:
    graph: Graph = field(repr=False, compare=False)
    cycle: tuple[int, ...]
    path: tuple[int, ...]  # from the degree-1 end up to, not including, attach
    attach: int

    family = "F"

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "cycle": list(self.cycle),
            "path": list(self.path),
            "attach": self.attach,
        }


@dataclass(frozen=True)
class F2Witness:
    graph: Graph = field(repr=False, compare=False)
    s: int
    cycles: tuple[tuple[int, ...], ...]

    family = "F2"

    def validate(self) -> None:
        g = self.graph
        if g.degree(self.s) < 2:
            raise InvalidWitnessError("hub has degree below 2")
        covered = 1 << self.s
        for cyc in self.cycles:
            _check_cycle(g, cyc)
            if not any(g.has_edge(self.s, v) for v in cyc):
                raise InvalidWitnessError("hub misses a cycle")
            for v in cyc:
                covered |= 1 << v
        if covered != g.vertex_mask:
            raise InvalidWitnessError("hub and cycles do not cover the graph")
        for v in range(g.n):
            if v != self.s and popcount(g.adj[v] & ~(1 << self.s)) != 2:
                raise InvalidWitnessError("an edge away from the hub joins two cycles")

    def to_json(self) -> dict:
        return {"family": self.family, "s": self.s, "cycles": [list(c) for c in self.cycles]}


@dataclass(frozen=True)
class F1Witness:
    graph: Graph = field(repr=False, compare=False)
    s: int
    path: tuple[int, ...]  # w_1 .. w_k
    cycles: tuple[tuple[int, ...], ...]
    extra_edges: tuple[tuple[int, int], ...]  # (w_k, x) pairs beyond the path edge

    family = "F1"

    @property
    def k(self) -> int:
        return len(self.path)

    @property
    def wk(self) -> int:
        return self.path[-1]

    def validate(self) -> None:
        g = self.graph
        if not self.path:
            raise InvalidWitnessError("empty path")
        degs = g.degrees()
        if degs.count(1) != 1 or degs[self.s] != 1:
            raise InvalidWitnessError("s must be the unique degree-1 vertex")
        chain = (self.s,) + self.path
        for a, b in zip(chain, chain[1:]):
            if not g.has_edge(a, b):
                raise InvalidWitnessError(f"path edge {a}-{b} missing")
        wk = self.wk
        expected = {_edge(a, b) for a, b in zip(chain, chain[1:])}
        covered = 0
        for v in chain:
            covered |= 1 << v
        for cyc in self.cycles:
            _check_cycle(g, cyc)
            expected.update(_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))
            if not any(g.has_edge(wk, v) for v in cyc):
                raise InvalidWitnessError("w_k misses a cycle")
            for v in cyc:
                covered |= 1 << v
        if covered != g.vertex_mask or len(chain) + sum(map(len, self.cycles)) != g.n:
            raise InvalidWitnessError("path and cycles do not partition the vertices")
        for a, b in self.extra_edges:
            if a != wk:
                raise InvalidWitnessError("extra edge not incident with w_k")
            expected.add(_edge(a, b))
        if expected != set(g.edges):
            raise InvalidWitnessError("edge set does not match the decomposition")
        if degs[wk] < 2:
            raise InvalidWitnessError("d(w_k) < 2")

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "s": self.s,
            "path": list(self.path),
            "cycles": [list(c) for c in self.cycles],
            "extra_edges": [list(e) for e in self.extra_edges],
        }


@dataclass(frozen=True)
class F3Witness:
    graph: Graph = field(repr=False, compare=False)
    base: F1Witness
    added: tuple[tuple[int, int], ...]  # (s, other) pairs
    case_tag: str

    family = "F3"

    def validate(self) -> None:
        self.base.validate()
        s = self.base.s
        reduced = self.graph.without_edges(_edge(*e) for e in self.added)
        if reduced != self.base.graph:
            raise InvalidWitnessError("deleting the added edges does not give the base graph")
        if any(a != s for a, _ in self.added):
            raise InvalidWitnessError("added edges must start at s")
        tags = f3_case_tags(self.base, [b for _, b in self.added])
        if self.case_tag not in tags:
            raise InvalidWitnessError(f"added edges do not satisfy case {self.case_tag}")

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "base": self.base.to_json(),
            "added": [list(e) for e in self.added],
            "case_tag": self.case_tag,
        }


FamilyWitness = Union[F1Witness, F2Witness, F3Witness]


@dataclass(frozen=True)
class DisconnectedWitness:
    graph: Graph = field(repr=False, compare=False)
    cycles: tuple[tuple[int, ...], ...]
    core: tuple[int, ...]  # vertices of the non-cycle component, ascending
    core_witness: FamilyWitness  # relative to graph.subgraph(core)

    family = "cycles+core"

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "cycles": [list(c) for c in self.cycles],
            "core": list(self.core),
            "core_witness": self.core_witness.to_json(),
        }


def _check_cycle(g: Graph, cyc: Sequence[int]) -> None:
    if len(cyc) < 3 or len(set(cyc)) != len(cyc):
        raise InvalidWitnessError("cycle needs at least 3 distinct vertices")
    for i in range(len(cyc)):
        if not g.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]):
            raise InvalidWitnessError("cycle edge missing")


# recognisers -------------------------------------------------------------------


def recognize_f2(g: Graph) -> F2Witness | None:
    if not is_connected(g) or g.n < 4:
        return None
    for s in range(g.n):
        if g.degree(s) < 2:
            continue
        rest = g.vertex_mask & ~(1 << s)
        if any(popcount(g.adj[v] & rest) != 2 for v in bits(rest)):
            continue
        comps = _components_within(g, rest)
        if all(g.adj[s] & c for c in comps):
            return F2Witness(g, s, tuple(tuple(cycle_order(g, c)) for c in comps))
    return None


def _components_within(g: Graph, allowed: int) -> list[int]:
    comps = []
    left = allowed
    while left:
        start = left & -left
        comp = frontier = start
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & allowed & ~comp
            comp |= frontier
        comps.append(comp)
        left &= ~comp
    return comps


def iter_f1_witnesses(g: Graph) -> Iterator[F1Witness]:
    """Every F1 decomposition of ``g`` (s is forced; w_k ranges over candidates)."""
    if not is_connected(g):
        return
    degs = g.degrees()
    if degs.count(1) != 1:
        return
    s = degs.index(1)
    for t in range(g.n):
        if t == s or degs[t] < 2:
            continue
        rest = g.vertex_mask & ~(1 << t)
        if any(popcount(g.adj[v] & rest) > 2 for v in bits(rest)):
            continue
        path_comp = None
        cycles = []
        ok = True
        for comp in _components_within(g, rest):
            if comp >> s & 1:
                path_comp = comp
            elif all(popcount(g.adj[v] & comp) == 2 for v in bits(comp)):
                if not g.adj[t] & comp:
                    ok = False
                    break
                cycles.append(tuple(cycle_order(g, comp)))
            else:
                ok = False
                break
        if not ok or path_comp is None:
            continue
        if g.induced_edge_count(path_comp) != popcount(path_comp) - 1:
            continue
        # walk the path from s
        order = [s]
        prev = -1
        while True:
            nxt = [u for u in bits(g.adj[order[-1]] & path_comp) if u != prev]
            if not nxt:
                break
            prev = order[-1]
            order.append(nxt[0])
        if len(order) != popcount(path_comp):
            continue
        if not g.has_edge(t, order[-1]):
            continue
        if len(order) > 1 and g.has_edge(t, s):
            continue
        path = tuple(order[1:]) + (t,)
        extras = tuple((t, x) for x in bits(g.adj[t]) if x != order[-1])
        yield F1Witness(g, s, path, tuple(cycles), extras)


def recognize_f1(g: Graph) -> F1Witness | None:
    return next(iter_f1_witnesses(g), None)


def _designated(base: F1Witness, x: int) -> tuple[int, ...]:
    """Out-neighbour of x other than w_k under some extremal orientation of the base."""
    if x in base.path:
        i = base.path.index(x)
        return (base.s,) if i == 0 else (base.path[i - 1],)
    for cyc in base.cycles:
        if x in cyc:
            j = cyc.index(x)
            return (cyc[(j + 1) % len(cyc)], cyc[j - 1])
    raise InvalidWitnessError(f"vertex {x} not in the decomposition")


def _designated_pairs(base: F1Witness, x: int, y: int) -> list[set[int]]:
    """Possible {out(x), out(y)} when each cycle is one consistently directed circuit."""
    same_cycle = any(x in c and y in c for c in base.cycles)
    dx, dy = _designated(base, x), _designated(base, y)
    if same_cycle:
        # index 0 is the successor along the stored order, index 1 the predecessor
        options = [{dx[0], dy[0]}, {dx[1], dy[1]}]
    else:
        options = [{a, b} for a in dx for b in dy]
    return [o for o in options if len(o) == 2]


def degree_three_vertices(base: F1Witness) -> list[int]:
    g = base.graph
    return [v for v in range(g.n) if v != base.wk and g.degree(v) == 3]


def f3_case_tags(base: F1Witness, targets: Sequence[int]) -> list[str]:
    """Case tags under which adding edges s-t (t in targets) to the base is admitted."""
    g = base.graph
    s, wk, k = base.s, base.wk, base.k
    targets = list(targets)
    if len(set(targets)) != len(targets) or s in targets:
        return []
    if any(g.has_edge(s, t) for t in targets):
        return []
    if len(targets) == 1:
        return [CASE_SINGLE]
    if len(targets) != 2:
        return []
    dwk = g.degree(wk)
    d3 = degree_three_vertices(base)
    via_wk = k > 1 and wk in targets
    tags = []
    if dwk >= 4:
        if via_wk:
            tags.append(CASE_DWK4)
    elif dwk == 3:
        if via_wk:
            tags.append(CASE_DWK3_WK)
        if len(d3) == 2 and set(targets) in _designated_pairs(base, *d3):
            tags.append(CASE_DWK3_XY)
    elif dwk == 2:
        if via_wk:
            tags.append(CASE_DWK2_WK)
        if len(d3) == 1 and any(t in _designated(base, d3[0]) for t in targets):
            tags.append(CASE_DWK2_X)
    return tags


def recognize_f3(g: Graph) -> F3Witness | None:
    if not is_connected(g):
        return None
    for s in range(g.n):
        d = g.degree(s)
        if d not in (2, 3):
            continue
        incident = [_edge(s, u) for u in bits(g.adj[s])]
        for removed in itertools.combinations(incident, d - 1):
            reduced = g.without_edges(removed)
            if not is_connected(reduced):
                continue
            targets = [u if v == s else v for u, v in removed]
            for base in iter_f1_witnesses(reduced):
                if base.s != s:
                    break
                tags = f3_case_tags(base, targets)
                if tags:
                    base = _orient_cycles_for(base, targets, tags[0])
                    return F3Witness(g, base, tuple((s, t) for t in targets), tags[0])
    return None


def _orient_cycles_for(base: F1Witness, targets: Sequence[int], tag: str) -> F1Witness:
    """Reverse cycle orders so that every designated target is a cycle successor."""
    if tag not in (CASE_DWK3_XY, CASE_DWK2_X):
        return base
    d3 = degree_three_vertices(base)
    wanted: dict[int, set[int]] = {}
    for x in d3:
        for t in targets:
            if t in _designated(base, x):
                wanted.setdefault(x, set()).add(t)
    cycles = []
    for cyc in base.cycles:
        forward = reverse = True
        for x, ts in wanted.items():
            if x not in cyc:
                continue
            j = cyc.index(x)
            succ, pred = cyc[(j + 1) % len(cyc)], cyc[j - 1]
            forward &= succ in ts
            reverse &= pred in ts
        cycles.append(cyc if forward or not reverse else (cyc[0],) + tuple(reversed(cyc[1:])))
    return F1Witness(base.graph, base.s, base.path, tuple(cycles), base.extra_edges)


def recognize_f(g: Graph) -> FWitness | None:
    """Cycle plus pendant path: connected, unicyclic, exactly one degree-1 vertex."""
    if not is_connected(g) or g.m != g.n:
        return None
    degs = g.degrees()
    if degs.count(1) != 1:
        return None
    leaf = degs.index(1)
    path = [leaf]
    prev = -1
    while True:
        nxt = [u for u in bits(g.adj[path[-1]]) if u != prev]
        prev = path[-1]
        if len(nxt) != 1:
            break
        path.append(nxt[0])
    attach = path.pop()
    cyc_mask = g.vertex_mask & ~sum(1 << v for v in path)
    sub = Graph(g.n, tuple(a & cyc_mask if (cyc_mask >> v & 1) else 0 for v, a in enumerate(g.adj)))
    cycle = cycle_order(sub, cyc_mask)
    j = cycle.index(attach)
    return FWitness(g, tuple(cycle[j:] + cycle[:j]), tuple(path), attach)


K4 = Graph.from_edges(4, itertools.combinations(range(4), 2))
K23 = Graph.from_edges(5, [(a, b) for a in (0, 1) for b in (2, 3, 4)])
K4_MINUS_E = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
SPECIAL_GRAPHS = {"K4": K4, "K2,3": K23, "K4-e": K4_MINUS_E}


def recognize_result1_class(g: Graph) -> tuple[bool, FWitness | str | None]:
    """Membership in F or among K4, K2,3, K4-e; second item names the reason."""
    w = recognize_f(g)
    if w is not None:
        return True, w
    if g.n <= 5:
        for name, special in SPECIAL_GRAPHS.items():
            if is_isomorphic(g, special):
                return True, name
    return False, None


def recognize_theorem_class(g: Graph) -> FamilyWitness | None:
    return recognize_f1(g) or recognize_f2(g) or recognize_f3(g)


def recognize_theorem_class_disconnected(g: Graph) -> DisconnectedWitness | None:
    """All components but one are cycles and that one is in F1, F2 or F3."""
    comps = component_masks(g)
    cycles, cores = [], []
    for c in comps:
        if popcount(c) >= 3 and all(popcount(g.adj[v]) == 2 for v in bits(c)):
            cycles.append(tuple(cycle_order(g, c)))
        else:
            cores.append(c)
    if len(cores) != 1:
        return None
    core = tuple(bits(cores[0]))
    w = recognize_theorem_class(g.subgraph(core))
    if w is None:
        return None
    return DisconnectedWitness(g, tuple(cycles), core, w)


# extremal orientations -----------------------------------------------------------


def _circuit(out: list[int], cyc: Sequence[int]) -> None:
    for i in range(len(cyc)):
        out[cyc[i]] |= 1 << cyc[(i + 1) % len(cyc)]


def _f1_out(base: F1Witness) -> list[int]:
    out = [0] * base.graph.n
    chain = (base.s,) + base.path
    for a, b in zip(chain[1:], chain):
        out[a] |= 1 << b
    for cyc in base.cycles:
        _circuit(out, cyc)
    for wk, x in base.extra_edges:
        out[x] |= 1 << wk
    return out


def extremal_orientation_for(w: FamilyWitness | FWitness | DisconnectedWitness) -> Orientation:
    """Orientation with gamma_t = n - 1 built from the witness structure."""
    if isinstance(w, F2Witness):
        w.validate()
        out = [0] * w.graph.n
        for cyc in w.cycles:
            _circuit(out, cyc)
        for v in bits(w.graph.adj[w.s]):
            out[v] |= 1 << w.s
        return Orientation.from_out_masks(w.graph, out)
    if isinstance(w, F1Witness):
        w.validate()
        return Orientation.from_out_masks(w.graph, _f1_out(w))
    if isinstance(w, F3Witness):
        w.validate()
        out = _f1_out(w.base)
        for s, t in w.added:
            out[s] |= 1 << t
        return Orientation.from_out_masks(w.graph, out)
    if isinstance(w, FWitness):
        f1 = recognize_f1(w.graph)
        if f1 is None:
            raise InvalidWitnessError("F witness graph is not an F1 member")
        return extremal_orientation_for(f1)
    if isinstance(w, DisconnectedWitness):
        out = [0] * w.graph.n
        for cyc in w.cycles:
            _circuit(out, cyc)
        inner = extremal_orientation_for(w.core_witness)
        for i, v in enumerate(w.core):
            for j in bits(inner.out_adj[i]):
                out[v] |= 1 << w.core[j]
        return Orientation.from_out_masks(w.graph, out)
    raise InvalidWitnessError(f"unsupported witness type {type(w).__name__}")


# generators ----------------------------------------------------------------------


def _links_for(cycle_lengths: Sequence[int], links) -> list[tuple[int, ...]]:
    """Per-cycle attachment positions; an int count c means positions 0..c-1."""
    if links is None:
        links = [1] * len(cycle_lengths)
    if isinstance(links, int):
        links = [links] * len(cycle_lengths)
    if len(links) != len(cycle_lengths):
        raise FamilyParameterError("one link specification per cycle is required")
    result = []
    for length, want in zip(cycle_lengths, links):
        if length < 3:
            raise FamilyParameterError("cycles need at least 3 vertices")
        pos = tuple(range(want)) if isinstance(want, int) else tuple(sorted(set(want)))
        if not pos or any(not 0 <= p < length for p in pos):
            raise FamilyParameterError(f"link positions {want} invalid for a cycle of length {length}")
        result.append(pos)
    return result


def generate_f2(cycle_lengths: Sequence[int], links=None) -> tuple[Graph, F2Witness]:
    """Hub 0 joined to the chosen positions of each cycle; cycles follow in order."""
    if not cycle_lengths:
        raise FamilyParameterError("at least one cycle is required")
    positions = _links_for(cycle_lengths, links)
    if sum(map(len, positions)) < 2:
        raise FamilyParameterError("the hub needs degree at least 2")
    n = 1 + sum(cycle_lengths)
    if n > 64:
        raise FamilyParameterError("more than 64 vertices")
    edges = []
    cycles = []
    nxt = 1
    for length, pos in zip(cycle_lengths, positions):
        cyc = tuple(range(nxt, nxt + length))
        nxt += length
        cycles.append(cyc)
        edges.extend((cyc[i], cyc[(i + 1) % length]) for i in range(length))
        edges.extend((0, cyc[p]) for p in pos)
    g = Graph.from_edges(n, edges)
    return g, F2Witness(g, 0, tuple(cycles))


def generate_f1(
    k: int,
    cycle_lengths: Sequence[int] = (),
    wk_cycle_links=None,
    wk_path_chords: Sequence[int] = (),
) -> tuple[Graph, F1Witness]:
    """s = 0, w_i = i, cycles afterwards; chords join w_k to w_i for the given i."""
    if k < 1:
        raise FamilyParameterError("path length k must be at least 1")
    chords = sorted(set(wk_path_chords))
    if any(not 1 <= i <= k - 2 for i in chords):
        raise FamilyParameterError("chords must lie in 1..k-2 (w_{k-1} is already adjacent)")
    positions = _links_for(cycle_lengths, wk_cycle_links) if cycle_lengths else []
    n = 1 + k + sum(cycle_lengths)
    if n > 64:
        raise FamilyParameterError("more than 64 vertices")
    if not cycle_lengths and not chords:
        raise FamilyParameterError("a bare path has no valid orientation")
    edges = [(i, i + 1) for i in range(k)]
    extras = [(k, i) for i in chords]
    cycles = []
    nxt = k + 1
    for length, pos in zip(cycle_lengths, positions):
        cyc = tuple(range(nxt, nxt + length))
        nxt += length
        cycles.append(cyc)
        edges.extend((cyc[i], cyc[(i + 1) % length]) for i in range(length))
        extras.extend((k, cyc[p]) for p in pos)
    edges.extend(extras)
    g = Graph.from_edges(n, edges)
    if k == 1 and len(extras) < 1:
        raise FamilyParameterError("d(w_k) must be at least 2")
    return g, F1Witness(g, 0, tuple(range(1, k + 1)), tuple(cycles), tuple(extras))


def f3_admissible_additions(base: F1Witness) -> list[tuple[tuple[int, ...], list[str]]]:
    """Every target tuple (one or two vertices) admitted for ``base`` with its tags."""
    g = base.graph
    candidates = [v for v in range(g.n) if v != base.s and not g.has_edge(base.s, v)]
    result = []
    for t in candidates:
        result.append(((t,), [CASE_SINGLE]))
    for pair in itertools.combinations(candidates, 2):
        tags = f3_case_tags(base, pair)
        if tags:
            result.append((pair, tags))
    return result


def generate_f3(base: F1Witness, targets: Sequence[int], case: str | None = None) -> tuple[Graph, F3Witness]:
    """Add edges from s to ``targets`` and certify them under ``case``."""
    g = base.graph
    targets = list(targets)
    for t in targets:
        if t == base.s or not 0 <= t < g.n:
            raise FamilyParameterError(f"invalid target {t}")
        if g.has_edge(base.s, t):
            raise FamilyParameterError(f"edge s-{t} already present")
    tags = f3_case_tags(base, targets)
    if not tags:
        raise FamilyParameterError("added edges violate the case conditions")
    if case is not None:
        case = normalize_case_tag(case)
        if case not in tags:
            raise FamilyParameterError(f"added edges do not satisfy {case} (admitted: {', '.join(tags)})")
    else:
        case = tags[0]
    new = g.with_edges((base.s, t) for t in targets)
    oriented = _orient_cycles_for(base, targets, case)
    return new, F3Witness(new, oriented, tuple((base.s, t) for t in targets), case)


# fixtures ------------------------------------------------------------------------


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycles need at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def paw() -> Graph:
    return Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (1, 3)])


def fig8() -> tuple[Graph, dict[str, Orientation]]:
    """Hub 0 joined to every vertex of C3 + C4 + C4 (vertices 1-3, 4-7, 8-11)."""
    g, w = generate_f2([3, 4, 4], [3, 4, 4])
    left = extremal_orientation_for(w)
    out = [0] * g.n
    for cyc in w.cycles:
        _circuit(out, cyc)
    last = w.cycles[2]
    keep_in = last[3]  # the one spoke still pointing at the hub
    for v in range(1, g.n):
        if v == keep_in:
            out[v] |= 1
        else:
            out[0] |= 1 << v
    right = Orientation.from_out_masks(g, out)
    return g, {"left": left, "right": right, "right_gray": (0, last[2], last[3])}


def fig9(k: int) -> tuple[Graph, dict[str, Orientation]]:
    """Path s=0, w_i=i for i=1..k, chords w_i w_k for 1 <= i <= k-2."""
    if k < 3:
        raise FamilyParameterError("fig9 needs k >= 3")
    g, w = generate_f1(k, wk_path_chords=range(1, k - 1))
    left = extremal_orientation_for(w)
    out = [0] * g.n
    for i in range(1, k + 1):
        out[i] |= 1 << (i - 1)
    out[1] |= 1 << k
    for i in range(2, k - 1):
        out[k] |= 1 << i
    right = Orientation.from_out_masks(g, out)
    return g, {"left": left, "right": right, "right_gray": (1, 2, k)}


def fig7(k: int = 4) -> dict[str, tuple[Graph, F3Witness]]:
    """The two F3 extensions of one base with d(w_k) = 3 and two linked 4-cycles."""
    _, base = generate_f1(k, [4, 4], [1, 1])
    left = generate_f3(base, [base.wk, 2], CASE_DWK3_WK)
    right = generate_f3(base, [base.cycles[0][1], base.cycles[1][1]], CASE_DWK3_XY)
    return {"left": left, "right": right}


def fixture(name: str, param: int | None = None) -> Graph:
    key = name.lower().replace("-", "_")
    if key == "fig8":
        return fig8()[0]
    if key == "fig9":
        return fig9(5 if param is None else param)[0]
    if key == "fig7_left":
        return fig7(4 if param is None else param)["left"][0]
    if key == "fig7_right":
        return fig7(4 if param is None else param)["right"][0]
    if key == "k4":
        return K4
    if key in ("k23", "k2,3"):
        return K23
    if key in ("k4_minus_e", "k4_e", "diamond"):
        return K4_MINUS_E
    if key == "paw":
        return paw()
    if key == "petersen":
        return petersen()
    if key == "cycle":
        if param is None:
            raise ValueError("cycle fixture needs a length")
        return cycle_graph(param)
    raise ValueError(f"unknown fixture {name!r}")


FIXTURE_NAMES = ("fig7_left", "fig7_right", "fig8", "fig9", "k4", "k23", "k4_minus_e", "paw", "petersen", "cycle")
