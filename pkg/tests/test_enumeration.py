"""Connected-graph enumerator: counts, uniqueness, parallel merge, streams."""

import pytest

from edgeconn import (
    GraphError,
    Graph6Error,
    canonical_form,
    complete_graph,
    connected_level,
    ensure_level,
    enumerate_connected,
    expand_children,
    filter_free,
    path_graph,
    read_graph6_stream,
    star,
    to_graph6,
    write_graph6_stream,
)
from edgeconn.oracles import connected_class_count_oracle

EXPECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


class TestCounts:
    def test_published_sequence(self, levels7):
        for n, want in EXPECTED_COUNTS.items():
            assert len(levels7[n]) == want

    def test_against_permutation_oracle(self, levels6):
        for n in range(1, 7):
            assert len(levels6[n]) == connected_class_count_oracle(n)

    def test_no_duplicate_classes(self, levels7):
        for n in range(1, 8):
            forms = {canonical_form(g) for g in levels7[n]}
            assert len(forms) == len(levels7[n])

    def test_every_graph_connected_right_order(self, levels6):
        from edgeconn.graphs import is_connected

        for n in range(1, 7):
            for g in levels6[n]:
                assert g.n == n and is_connected(g)


class TestExpansion:
    def test_children_of_single_edge(self):
        kids = expand_children(complete_graph(2))
        assert len(kids) == 2
        forms = {canonical_form(g) for g in kids}
        assert forms == {canonical_form(path_graph(3)), canonical_form(complete_graph(3))}

    def test_levels_deterministic(self):
        a = [to_graph6(g) for g in connected_level(6)]
        b = [to_graph6(g) for g in connected_level(6)]
        assert a == b

    def test_parallel_merge_is_byte_identical(self, levels7):
        from edgeconn import enumeration

        saved = dict(enumeration._levels)
        try:
            enumeration._levels.clear()
            enumeration._levels[1] = saved[1]
            par = ensure_level(7, workers=2)
        finally:
            enumeration._levels.clear()
            enumeration._levels.update(saved)
        assert [to_graph6(g) for g in par] == [to_graph6(g) for g in levels7[7]]

    def test_range_validation(self):
        with pytest.raises(GraphError):
            connected_level(0)
        with pytest.raises(GraphError):
            connected_level(11)
        with pytest.raises(GraphError):
            ensure_level(0, workers=2)


class TestFilterFree:
    def test_claw_free_on_four_vertices(self, levels6):
        kept = list(filter_free(levels6[4], star(3)))
        assert len(kept) == 5

    def test_forbidding_a_vertex_empties(self, levels6):
        from edgeconn.graphs import Graph

        assert list(filter_free(levels6[4], Graph(1, (0,)))) == []

    def test_oversized_pattern_is_vacuous(self, levels6):
        kept = list(filter_free(levels6[5], complete_graph(7)))
        assert len(kept) == len(levels6[5])


class TestStreams:
    def test_round_trip(self, tmp_path, levels6):
        path = tmp_path / "graphs.g6"
        count = write_graph6_stream(path, levels6[5])
        assert count == 21
        back = list(read_graph6_stream(path))
        assert back == list(levels6[5])

    def test_header_and_blank_lines(self, tmp_path):
        path = tmp_path / "in.g6"
        path.write_text(">>graph6<<Bw\n\nBg\n")
        graphs = list(read_graph6_stream(path))
        assert [g.n for g in graphs] == [3, 3]
        assert [g.m for g in graphs] == [3, 2]

    def test_error_carries_line_number(self, tmp_path):
        path = tmp_path / "bad.g6"
        path.write_text("Bw\n:sparse\n")
        with pytest.raises(Graph6Error, match=r"bad\.g6:2: "):
            list(read_graph6_stream(path))

    def test_enumerate_connected_matches_level(self):
        assert list(enumerate_connected(4)) == list(connected_level(4))
