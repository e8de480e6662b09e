"""Undirected simple graphs on at most 64 vertices, stored as per-vertex bit masks.

Also holds graph6 interchange, component structure and a small isomorph-free
enumerator used by the verification pipelines.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial
from typing import Callable, Iterable, Iterator, Sequence

MAX_VERTICES = 64
ISOMORPHISM_LIMIT = 10
ENUMERATION_LIMIT = 7


class GraphError(ValueError):
    pass


class Graph6Error(GraphError):
    pass


class Graph6HeaderError(Graph6Error):
    pass


class Graph6TruncatedError(Graph6Error):
    pass


class Graph6RangeError(Graph6Error):
    pass


class SizeLimitError(GraphError):
    """Input exceeds a hard brute-force limit."""


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class VertexSet:
    mask: int

    def __iter__(self) -> Iterator[int]:
        return bits(self.mask)

    def __len__(self) -> int:
        return popcount(self.mask)

    def __contains__(self, v: int) -> bool:
        return bool(self.mask >> v & 1)

    def to_list(self) -> list[int]:
        return list(bits(self.mask))

    @classmethod
    def of(cls, vertices: Iterable[int]) -> "VertexSet":
        return cls(mask_of(vertices))


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    _edges: tuple[tuple[int, int], ...] = field(default=(), init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside 1..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise GraphError(f"vertex {v} has neighbours outside 0..{self.n - 1}")
            if nb >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in bits(nb):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
        edges = tuple((u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1)))
        object.__setattr__(self, "_edges", edges)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        adj = [0] * n
        for e in edges:
            u, v = e
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if adj[u] >> v & 1:
                raise GraphError(f"parallel edge ({u}, {v})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as (u, v) with u < v, in increasing lexicographic order."""
        return self._edges

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self._edges)}

    def induced_edge_count(self, mask: int) -> int:
        return sum(popcount(self.adj[v] & mask) for v in bits(mask)) // 2

    def subgraph(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph relabelled to 0..k-1 in the given vertex order."""
        pos = {v: i for i, v in enumerate(vertices)}
        return Graph.from_edges(
            len(vertices),
            [(pos[u], pos[v]) for u, v in self._edges if u in pos and v in pos],
        )

    def without_edges(self, removed: Iterable[tuple[int, int]]) -> "Graph":
        adj = list(self.adj)
        for u, v in removed:
            if not adj[u] >> v & 1:
                raise GraphError(f"edge ({u}, {v}) not present")
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
        return Graph(self.n, tuple(adj))

    def with_edges(self, added: Iterable[tuple[int, int]]) -> "Graph":
        return Graph.from_edges(self.n, list(self._edges) + [tuple(e) for e in added])

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex v renamed to perm[v]."""
        return Graph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self._edges])

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self._edges)})"


def disjoint_union(*graphs: Graph) -> Graph:
    edges: list[tuple[int, int]] = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return Graph.from_edges(offset, edges)


# graph6 ---------------------------------------------------------------------


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))


def to_graph6(g: Graph) -> str:
    out = []
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return _encode_n(g.n) + "".join(out)


def parse_graph6(text: str) -> Graph:
    line = text.strip()
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    if not line:
        raise Graph6HeaderError("empty graph6 string")
    codes = [ord(c) - 63 for c in line]
    if any(not 0 <= c <= 63 for c in codes):
        raise Graph6HeaderError("character outside the graph6 range 63..126")
    if codes[0] < 63:
        n, pos = codes[0], 1
    elif len(codes) >= 2 and codes[1] == 63:
        raise Graph6RangeError("8-byte size headers exceed the 64-vertex limit")
    elif len(codes) >= 4:
        n, pos = (codes[1] << 12) | (codes[2] << 6) | codes[3], 4
    else:
        raise Graph6HeaderError("incomplete size header")
    if not 1 <= n <= MAX_VERTICES:
        raise Graph6RangeError(f"vertex count {n} outside 1..{MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = codes[pos:]
    if len(body) < need:
        raise Graph6TruncatedError(f"expected {need} data bytes, got {len(body)}")
    if len(body) > need:
        raise Graph6TruncatedError(f"{len(body) - need} trailing bytes after the bit block")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for raw in lines:
        line = raw.strip()
        if line.startswith(">>graph6<<"):
            line = line[len(">>graph6<<"):]
        if line:
            yield parse_graph6(line)


def parse_edge_list(text: str) -> Graph:
    """Parse 'u-v u-v ...' or 'u v, u v' style edge lists; n is max index + 1."""
    tokens = text.replace(",", " ").replace(";", " ").split()
    pairs: list[tuple[int, int]] = []
    if all("-" in t for t in tokens):
        for t in tokens:
            a, b = t.split("-", 1)
            pairs.append((int(a), int(b)))
    else:
        if len(tokens) % 2:
            raise GraphError("edge list has an odd number of endpoints")
        nums = [int(t) for t in tokens]
        pairs = list(zip(nums[::2], nums[1::2]))
    if not pairs:
        raise GraphError("empty edge list")
    n = max(max(p) for p in pairs) + 1
    return Graph.from_edges(n, pairs)


# structure --------------------------------------------------------------------


@dataclass(frozen=True)
class ComponentDecomposition:
    components: tuple[VertexSet, ...]
    edge_counts: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.components)

    def sizes(self) -> list[int]:
        return [len(c) for c in self.components]


def component_masks(g: Graph) -> list[int]:
    seen = 0
    comps = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = frontier = 1 << v
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(comp)
    return comps


def components(g: Graph) -> ComponentDecomposition:
    masks = component_masks(g)
    return ComponentDecomposition(
        tuple(VertexSet(m) for m in masks),
        tuple(g.induced_edge_count(m) for m in masks),
    )


def is_connected(g: Graph) -> bool:
    return len(component_masks(g)) == 1


def in_class_c(g: Graph) -> bool:
    """Every component contains a cycle, i.e. has at least as many edges as vertices."""
    return all(g.induced_edge_count(c) >= popcount(c) for c in component_masks(g))


def is_cycle(g: Graph) -> bool:
    return g.n >= 3 and is_connected(g) and all(d == 2 for d in g.degrees())


def is_disjoint_union_of_cycles(g: Graph) -> bool:
    # 2-regular forces every component to be a single cycle
    return all(d == 2 for d in g.degrees())


def cycle_order(g: Graph, comp: int) -> list[int]:
    """Vertices of a cycle component in traversal order from its lowest vertex."""
    start = (comp & -comp).bit_length() - 1
    order = [start]
    prev, cur = -1, start
    while True:
        nbrs = [u for u in bits(g.adj[cur] & comp) if u != prev]
        nxt = nbrs[0]
        if nxt == start:
            break
        order.append(nxt)
        prev, cur = cur, nxt
        if len(order) > popcount(comp):
            raise GraphError("component is not a cycle")
    return order


# isomorphism and canonical forms ----------------------------------------------


def _refined_classes(g: Graph) -> list[list[int]]:
    """Colour refinement from degrees; returns vertex classes in invariant order."""
    colour = [popcount(a) for a in g.adj]
    while True:
        sig = [(colour[v], tuple(sorted(colour[u] for u in bits(g.adj[v])))) for v in range(g.n)]
        ranks = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [ranks[s] for s in sig]
        if len(set(new)) == len(set(colour)):
            colour = new
            break
        colour = new
    classes: dict[int, list[int]] = {}
    for v in range(g.n):
        classes.setdefault(colour[v], []).append(v)
    return [classes[c] for c in sorted(classes)]


def _code(g: Graph, order: Sequence[int]) -> int:
    code = 0
    for j in range(1, len(order)):
        row = g.adj[order[j]]
        for i in range(j):
            code = (code << 1) | (row >> order[i] & 1)
    return code


def canonical_code(g: Graph) -> tuple[int, int]:
    """Minimal upper-triangle bit string over all invariant-respecting labellings.

    Vertex classes come from colour refinement, which is isomorphism-invariant,
    so minimising only over permutations inside each class still yields a
    complete invariant.
    """
    classes = _refined_classes(g)
    best = None
    for choice in itertools.product(*(itertools.permutations(c) for c in classes)):
        order = [v for block in choice for v in block]
        code = _code(g, order)
        if best is None or code < best:
            best = code
    return g.n, best


def canonical_code_bruteforce(g: Graph) -> tuple[int, int]:
    """Minimal upper-triangle bit string over all n! labellings."""
    return g.n, min(_code(g, p) for p in itertools.permutations(range(g.n)))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n > ISOMORPHISM_LIMIT or h.n > ISOMORPHISM_LIMIT:
        raise SizeLimitError(f"isomorphism test limited to n <= {ISOMORPHISM_LIMIT}")
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    hd = h.degrees()
    gd = g.degrees()
    edges = g.edges
    for perm in itertools.permutations(range(g.n)):
        if any(gd[v] != hd[perm[v]] for v in range(g.n)):
            continue
        if all(h.has_edge(perm[u], perm[v]) for u, v in edges):
            return True
    return False


def _from_code(n: int, code: int) -> Graph:
    nbits = n * (n - 1) // 2
    edges = []
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if code >> k & 1:
                edges.append((i, j))
            k -= 1
    return Graph.from_edges(n, edges)


@lru_cache(maxsize=None)
def _all_graphs(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, (0,)),)
    seen: dict[tuple[int, int], Graph] = {}
    for smaller in _all_graphs(n - 1):
        base = list(smaller.edges)
        for nbrs in range(1 << (n - 1)):
            g = Graph.from_edges(n, base + [(v, n - 1) for v in bits(nbrs)])
            key = canonical_code(g)
            if key not in seen:
                seen[key] = _from_code(*key)
    return tuple(seen[k] for k in sorted(seen))


def enumerate_graphs(
    n: int, predicate: Callable[[Graph], bool] | None = None, *, limit: int = ENUMERATION_LIMIT
) -> Iterator[Graph]:
    """One canonically labelled representative per isomorphism class on n vertices.

    Representatives are produced by extending every class on n-1 vertices with a
    new vertex and deduplicating by canonical code; output order is by code.
    """
    if not 1 <= n <= limit:
        raise SizeLimitError(f"built-in enumeration supports 1 <= n <= {limit}")
    for g in _all_graphs(n):
        if predicate is None or predicate(g):
            yield g


def connected_class_c(g: Graph) -> bool:
    return is_connected(g) and in_class_c(g)


def permutation_count(g: Graph) -> int:
    """Number of labellings canonical_code inspects (for diagnostics)."""
    total = 1
    for c in _refined_classes(g):
        total *= factorial(len(c))
    return total
