import random

import pytest
from hypothesis import given, settings, strategies as st

from totaldom.graph import (
    Graph,
    Graph6HeaderError,
    Graph6RangeError,
    Graph6TruncatedError,
    GraphError,
    SizeLimitError,
    canonical_code,
    canonical_code_bruteforce,
    components,
    connected_class_c,
    disjoint_union,
    enumerate_graphs,
    in_class_c,
    is_connected,
    is_disjoint_union_of_cycles,
    is_isomorphic,
    parse_edge_list,
    parse_graph6,
    read_graph6_lines,
    to_graph6,
)
from totaldom.families import K4, K4_MINUS_E, cycle_graph, paw

from _support import labelled_count_oracle, random_graph


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


@st.composite
def graphs(draw, max_n: int = 9):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph.from_edges(n, chosen)


class TestGraph6:
    def test_k4(self):
        g = parse_graph6("C~")
        assert g.n == 4 and g.m == 6
        assert to_graph6(K4) == "C~"

    def test_single_vertex(self):
        g = parse_graph6("@")
        assert (g.n, g.m) == (1, 0)
        assert to_graph6(Graph.from_edges(1, [])) == "@"

    @pytest.mark.parametrize("text", ["C~", "Cl", "EhDw", "IheA@GUAo", "D??"])
    def test_text_round_trip(self, text):
        assert to_graph6(parse_graph6(text)) == text

    def test_header_prefix_is_ignored(self):
        assert parse_graph6(">>graph6<<C~") == K4

    def test_round_trip_random(self):
        rng = random.Random(7)
        for _ in range(1000):
            g = random_graph(rng, rng.randint(1, 12), rng.random())
            assert parse_graph6(to_graph6(g)) == g

    def test_large_n_header(self):
        g = Graph.from_edges(64, [(0, 63), (10, 20)])
        text = to_graph6(g)
        assert text[0] == "~"
        assert parse_graph6(text) == g

    @pytest.mark.parametrize(
        "text, exc",
        [
            ("", Graph6HeaderError),
            ("C }", Graph6HeaderError),
            ("~?", Graph6HeaderError),
            ("C", Graph6TruncatedError),
            ("C~~", Graph6TruncatedError),
            ("?", Graph6RangeError),
            ("~?@A", Graph6RangeError),
        ],
    )
    def test_errors_are_distinct(self, text, exc):
        with pytest.raises(exc):
            parse_graph6(text)

    def test_reader_skips_blank_lines(self):
        assert list(read_graph6_lines(["C~", "", "  @  "])) == [K4, parse_graph6("@")]

    @settings(max_examples=200, deadline=None)
    @given(graphs(max_n=14))
    def test_round_trip_property(self, g):
        assert parse_graph6(to_graph6(g)) == g


class TestStructure:
    def test_rejects_loops_and_multi_edges(self):
        with pytest.raises(GraphError):
            Graph.from_edges(3, [(0, 0)])
        with pytest.raises(GraphError):
            Graph.from_edges(3, [(0, 1), (1, 0)])
        with pytest.raises(GraphError):
            Graph(2, (0b10, 0))

    def test_edge_list_forms(self):
        assert parse_edge_list("0-1 1-2 2-0") == parse_edge_list("0 1, 1 2, 2 0") == cycle_graph(3)

    def test_components(self):
        dec = components(disjoint_union(cycle_graph(3), cycle_graph(4)))
        assert sorted(zip(dec.sizes(), dec.edge_counts)) == [(3, 3), (4, 4)]
        assert len(components(K4)) == 1
        assert components(Graph.from_edges(3, [])).sizes() == [1, 1, 1]

    def test_class_c(self):
        assert in_class_c(K4)
        assert not in_class_c(path(4))
        assert not in_class_c(disjoint_union(cycle_graph(3), path(2)))

    def test_union_of_cycles(self):
        assert is_disjoint_union_of_cycles(disjoint_union(cycle_graph(3), cycle_graph(4)))
        assert is_disjoint_union_of_cycles(cycle_graph(5))
        assert not is_disjoint_union_of_cycles(K4)

    def test_isomorphism(self):
        assert is_isomorphic(K4, K4.relabel([2, 0, 3, 1]))
        assert not is_isomorphic(cycle_graph(4), K4_MINUS_E)
        claw = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
        assert not is_isomorphic(paw(), claw)
        with pytest.raises(SizeLimitError):
            is_isomorphic(cycle_graph(11), cycle_graph(11))

    @settings(max_examples=100, deadline=None)
    @given(graphs(max_n=7), st.randoms(use_true_random=False))
    def test_canonical_code_is_label_invariant(self, g, rnd):
        perm = list(range(g.n))
        rnd.shuffle(perm)
        assert canonical_code(g) == canonical_code(g.relabel(perm))


class TestEnumeration:
    @pytest.mark.parametrize("n, total, connected", [(1, 1, 1), (2, 2, 1), (3, 4, 2), (4, 11, 6), (5, 34, 21), (6, 156, 112)])
    def test_counts(self, n, total, connected):
        assert len(list(enumerate_graphs(n))) == total
        assert len(list(enumerate_graphs(n, is_connected))) == connected

    def test_class_c_small(self):
        assert len(list(enumerate_graphs(3, connected_class_c))) == 1
        found = list(enumerate_graphs(4, connected_class_c))
        expected = [paw(), cycle_graph(4), K4_MINUS_E, K4]
        assert len(found) == 4
        assert all(any(is_isomorphic(a, b) for b in found) for a in expected)

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_counts_against_relabelling_oracle(self, n):
        assert len(list(enumerate_graphs(n))) == labelled_count_oracle(n)
        assert len(list(enumerate_graphs(n, connected_class_c))) == labelled_count_oracle(n, connected_class_c)

    @pytest.mark.parametrize("n", [4, 5])
    def test_refined_canonical_form_matches_full_permutation_search(self, n):
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        refined, full = {}, {}
        for code in range(1 << len(pairs)):
            g = Graph.from_edges(n, [pairs[i] for i in range(len(pairs)) if code >> i & 1])
            refined.setdefault(canonical_code(g), set()).add(code)
            full.setdefault(canonical_code_bruteforce(g), set()).add(code)
        assert sorted(map(sorted, refined.values())) == sorted(map(sorted, full.values()))

    def test_limit(self):
        with pytest.raises(SizeLimitError):
            list(enumerate_graphs(8))


class TestAgainstNetworkx:
    """Cross-checks against an independent implementation when it is installed."""

    nx = pytest.importorskip("networkx")

    def _to_nx(self, g):
        h = self.nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.edges)
        return h

    def test_graph6_bytes_match(self):
        rng = random.Random(11)
        for _ in range(300):
            g = random_graph(rng, rng.randint(1, 20), rng.random())
            ref = self.nx.to_graph6_bytes(self._to_nx(g), header=False).decode().strip()
            assert to_graph6(g) == ref

    def test_isomorphism_matches(self):
        rng = random.Random(12)
        for _ in range(300):
            n = rng.randint(1, 7)
            g, h = random_graph(rng, n), random_graph(rng, n)
            if rng.random() < 0.3:
                perm = list(range(n))
                rng.shuffle(perm)
                h = g.relabel(perm)
            assert is_isomorphic(g, h) == self.nx.is_isomorphic(self._to_nx(g), self._to_nx(h))

    def test_connected_counts_match_atlas(self):
        from networkx.generators.atlas import graph_atlas_g

        atlas = [a for a in graph_atlas_g() if 1 <= a.number_of_nodes() <= 6]
        for n in range(1, 7):
            expected = sum(1 for a in atlas if a.number_of_nodes() == n and self.nx.is_connected(a))
            assert len(list(enumerate_graphs(n, is_connected))) == expected
