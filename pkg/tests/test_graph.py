import json
import math

import pytest

from conftest import brute_cycles, canonical_cycle, relabel
from sesquipoly import (
    Graph,
    GraphParseError,
    cycles_through_vertex,
    disjoint_union,
    enumerate_cycles,
    induced_subgraph,
    load_graph,
    parse_edge_list,
    parse_graph_json,
    vertex_deleted,
)
from sesquipoly.corpus import (
    complete_graph,
    connected_graphs_up_to,
    cycle_graph,
    empty_graph,
    path_graph,
    petersen_graph,
    star_graph,
)


class TestParsing:
    def test_single_edge(self):
        g = parse_edge_list("0 1")
        assert g.n == 2
        assert g.edges == ((0, 1),)

    def test_triangle(self):
        g = parse_edge_list("0 1\n1 2\n2 0")
        assert g == complete_graph(3)

    def test_duplicate_edges_collapse(self):
        g = parse_edge_list("0 1\n0 1\n1 0")
        assert g.edges == ((0, 1),)

    def test_header_and_comments(self):
        g = parse_edge_list("# a comment\nn 5\n0 1\n\n# more\n3 4\n")
        assert g.n == 5
        assert g.edges == ((0, 1), (3, 4))

    def test_header_allows_isolated_tail(self):
        g = parse_edge_list("n 4\n0 1")
        assert g.n == 4
        assert g.degree(3) == 0

    def test_gap_ids_become_isolated_vertices(self):
        g = parse_edge_list("0 1\n5 6")
        assert g.n == 7
        assert g.degree(3) == 0

    @pytest.mark.parametrize(
        "text,fragment",
        [
            ("0 1\n2", "line 2"),
            ("0 0", "self-loop"),
            ("0 -1", "negative"),
            ("0 x", "non-integer"),
            ("n 2\n0 5", "out of range"),
            ("0 1 2", "line 1"),
        ],
    )
    def test_errors_name_the_line(self, text, fragment):
        with pytest.raises(GraphParseError, match=fragment):
            parse_edge_list(text)

    def test_json_format(self):
        g = parse_graph_json('{"n": 3, "edges": [[0, 1], [1, 2]]}')
        assert g == path_graph(3)

    @pytest.mark.parametrize(
        "text",
        [
            "[1, 2]",
            '{"n": 2}',
            '{"n": -1, "edges": []}',
            '{"n": 2, "edges": [[0, 0]]}',
            '{"n": 2, "edges": [[0, 5]]}',
            '{"n": 2, "edges": [[0]]}',
            "{not json",
        ],
    )
    def test_json_errors(self, text):
        with pytest.raises(GraphParseError):
            parse_graph_json(text)

    def test_load_graph_sniffs_format(self, tmp_path):
        edge_file = tmp_path / "g.txt"
        edge_file.write_text("0 1\n1 2\n")
        json_file = tmp_path / "g.json"
        json_file.write_text('{"n": 3, "edges": [[0, 1], [1, 2]]}')
        assert load_graph(edge_file) == load_graph(json_file)

    def test_load_graph_error_names_path(self, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text("0 1\n1 1\n")
        with pytest.raises(GraphParseError, match="bad.txt.*line 2"):
            load_graph(bad)


class TestGraphBasics:
    def test_validation(self):
        with pytest.raises(ValueError):
            Graph(2, [(0, 0)])
        with pytest.raises(ValueError):
            Graph(2, [(0, 5)])
        with pytest.raises(ValueError):
            Graph(-1)

    def test_adjacency_sorted_and_symmetric(self, k4):
        for v in range(4):
            nbrs = k4.neighbors(v)
            assert list(nbrs) == sorted(nbrs)
            for u in nbrs:
                assert v in k4.neighbors(u)

    def test_immutability(self, k3):
        with pytest.raises(AttributeError):
            k3.n = 5

    def test_max_degree(self):
        assert complete_graph(3).max_degree() == 2
        assert star_graph(4).max_degree() == 4
        assert empty_graph(3).max_degree() == 0

    def test_hash_by_value(self):
        assert complete_graph(3) == Graph(3, [(2, 1), (0, 2), (1, 0)])
        assert hash(complete_graph(3)) == hash(Graph(3, [(2, 1), (0, 2), (1, 0)]))


class TestGirth:
    def test_named(self):
        assert complete_graph(3).girth() == 3
        assert cycle_graph(5).girth() == 5
        assert path_graph(4).girth() == math.inf
        assert petersen_graph().girth() == 5
        assert empty_graph(0).girth() == math.inf

    def test_matches_shortest_enumerated_cycle(self):
        for g in connected_graphs_up_to(6):
            cycles = enumerate_cycles(g)
            expected = min((len(c) for c in cycles), default=math.inf)
            assert g.girth() == expected


class TestCycleEnumeration:
    def test_triangle(self, k3):
        assert enumerate_cycles(k3, 3) == [(0, 1, 2)]

    def test_c4_single_hamilton(self, c4):
        assert enumerate_cycles(c4, 4) == [(0, 1, 2, 3)]

    def test_k4_count(self, k4):
        cycles = enumerate_cycles(k4, 4)
        assert len(cycles) == 7
        assert sum(1 for c in cycles if len(c) == 3) == 4
        assert sum(1 for c in cycles if len(c) == 4) == 3

    def test_max_len_filters(self, k4):
        assert all(len(c) == 3 for c in enumerate_cycles(k4, 3))

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_complete_graph_count_formula(self, n):
        cycles = enumerate_cycles(complete_graph(n), n)
        expected = sum(
            math.comb(n, k) * math.factorial(k - 1) // 2 for k in range(3, n + 1)
        )
        assert len(cycles) == expected
        assert cycles == brute_cycles(complete_graph(n))

    def test_matches_brute_force_on_small_corpus(self):
        for g in connected_graphs_up_to(6)[::5]:
            assert enumerate_cycles(g) == brute_cycles(g)

    def test_output_sorted_and_canonical(self, petersen):
        cycles = enumerate_cycles(petersen)
        assert cycles == sorted(cycles)
        assert len(set(cycles)) == len(cycles)
        for c in cycles:
            assert c == canonical_cycle(list(c))

    def test_relabel_roundtrip(self, k4):
        perm = [2, 0, 3, 1]
        inverse = [perm.index(i) for i in range(4)]
        relabeled = relabel(k4, perm)
        back = sorted(
            canonical_cycle([inverse[v] for v in c])
            for c in enumerate_cycles(relabeled)
        )
        assert back == enumerate_cycles(k4)


class TestCyclesThroughVertex:
    def test_c4(self, c4):
        assert cycles_through_vertex(c4, 0, 4) == [(0, 1, 2, 3)]

    def test_k4(self, k4):
        through = cycles_through_vertex(k4, 0, 4)
        assert sum(1 for c in through if len(c) == 3) == 3
        assert sum(1 for c in through if len(c) == 4) == 3

    def test_forest_empty(self, p4):
        assert cycles_through_vertex(p4, 1) == []

    def test_out_of_range(self, p4):
        with pytest.raises(ValueError):
            cycles_through_vertex(p4, 4)

    def test_counting_bound(self):
        graphs = list(connected_graphs_up_to(7)[::7])
        graphs += [petersen_graph(), cycle_graph(10), complete_graph(6)]
        for g in graphs:
            dmax = g.max_degree()
            if dmax < 2:
                continue
            for v in range(g.n):
                per_len = {}
                for c in cycles_through_vertex(g, v):
                    per_len[len(c)] = per_len.get(len(c), 0) + 1
                for k, cnt in per_len.items():
                    assert cnt <= dmax * (dmax - 1) ** (k - 2)


class TestSubgraphs:
    def test_induced_triangle(self, k4):
        sub, originals = induced_subgraph(k4, {0, 1, 2})
        assert sub == complete_graph(3)
        assert originals == (0, 1, 2)

    def test_induced_nonadjacent_pair(self, c4):
        sub, originals = induced_subgraph(c4, {0, 2})
        assert sub == empty_graph(2)
        assert originals == (0, 2)

    def test_induced_empty(self, k4):
        sub, originals = induced_subgraph(k4, set())
        assert sub == empty_graph(0)
        assert originals == ()

    def test_induced_out_of_range(self, k3):
        with pytest.raises(ValueError):
            induced_subgraph(k3, {0, 9})

    def test_vertex_deleted(self, k3, c4):
        assert vertex_deleted(k3, 0) == complete_graph(2)
        assert vertex_deleted(complete_graph(2), 1) == empty_graph(1)
        assert vertex_deleted(c4, 0) == path_graph(3)
        with pytest.raises(ValueError):
            vertex_deleted(k3, 3)

    def test_disjoint_union(self, k3, c4):
        g = disjoint_union(k3, c4)
        assert g.n == 7
        assert g.edge_count == k3.edge_count + c4.edge_count
        assert len(enumerate_cycles(g)) == 2
