import pytest

from geodetic_games import bits
from geodetic_games.families import complete_graph, cycle_graph, family, hypercube_graph, path_graph
from geodetic_games.graph import (
    UNREACHABLE,
    GraphError,
    blocks_and_cut_vertices,
    box_product,
    corona,
    disjoint_union,
    format_graph_text,
    induced_subgraph,
    is_block_graph,
    join,
    make_graph,
    one_clique_sum,
    parse_graph_text,
    read_graph,
    simplicial_vertices,
    write_graph,
)


def test_distances_by_bfs():
    g = path_graph(4)
    assert g.dist[0] == (0, 1, 2, 3)
    assert g.diameter == 3
    assert g.is_connected


def test_duplicate_edges_collapse():
    g = make_graph(3, [(0, 1), (1, 0), (0, 1), (1, 2)])
    assert g.num_edges == 2


def test_disconnected_distance_sentinel():
    g = make_graph(3, [(0, 1)])
    assert g.dist[0][2] == UNREACHABLE
    assert not g.is_connected and g.diameter is None
    assert g.intervals[0][2] == 0b101


@pytest.mark.parametrize("edges", [[(0, 3)], [(1, 1)], [(-1, 0)]])
def test_bad_edges_rejected(edges):
    with pytest.raises(GraphError):
        make_graph(3, edges)


def test_label_count_checked():
    with pytest.raises(GraphError):
        make_graph(2, [(0, 1)], labels=["a"])


def test_vertex_cap_from_env(monkeypatch):
    monkeypatch.setenv("GGL_MAX_VERTICES", "4")
    with pytest.raises(GraphError):
        make_graph(5, [])
    monkeypatch.setenv("GGL_MAX_VERTICES", "lots")
    with pytest.raises(GraphError):
        make_graph(2, [])


def test_intervals_on_cycle():
    g = cycle_graph(6)
    assert g.intervals[0][3] == 0b111111
    assert g.intervals[0][2] == 0b000111
    assert g.intervals[1][1] == 0b10


def test_union_and_join_sizes():
    g, h = path_graph(3), cycle_graph(4)
    u = disjoint_union(g, h)
    assert (u.n, u.num_edges) == (7, 6)
    j = join(g, h)
    assert (j.n, j.num_edges) == (7, 6 + 12)


def test_box_of_edges_is_hypercube_by_index():
    # (x, y) -> x * |H| + y keeps the binary-string order of the cube
    g = path_graph(2)
    for n in range(2, 5):
        acc = g
        for _ in range(n - 1):
            acc = box_product(acc, g)
        assert acc == hypercube_graph(n)


def test_clique_sum_vertex_count():
    parts = [(cycle_graph(4), 1), (path_graph(2), 0), (complete_graph(3), 2)]
    s = one_clique_sum(parts)
    assert s.n == 1 - 3 + 4 + 2 + 3
    assert s.num_edges == 4 + 1 + 3


def test_clique_sum_examples():
    windmill = one_clique_sum([(complete_graph(3), 0)] * 3)
    assert windmill == family("windmill:3x3")
    assert one_clique_sum([(path_graph(2), 0), (path_graph(2), 0)]).dist[1][2] == 2
    pan = one_clique_sum([(cycle_graph(4), 1), (path_graph(2), 0)])
    assert sorted(pan.degree(v) for v in range(pan.n)) == [1, 2, 2, 2, 3]


def test_clique_sum_needs_two_parts():
    with pytest.raises(GraphError):
        one_clique_sum([(path_graph(2), 0)])
    with pytest.raises(GraphError):
        one_clique_sum([(path_graph(2), 5), (path_graph(2), 0)])


def test_corona_pendants():
    c = corona(cycle_graph(3))
    assert c.n == 6 and all(c.degree(3 + v) == 1 for v in range(3))
    assert simplicial_vertices(c) == 0b111000


def test_blocks_of_block_graph():
    g = family("fig-block")
    blocks, cut = blocks_and_cut_vertices(g)
    assert len(blocks) == 7 and bits.size(cut) == 6
    assert is_block_graph(g)
    assert not is_block_graph(cycle_graph(4))


def test_blocks_with_isolated_vertex():
    g = make_graph(4, [(0, 1), (1, 2)])
    blocks, cut = blocks_and_cut_vertices(g)
    assert sorted(blocks) == [0b0011, 0b0110, 0b1000]
    assert cut == 0b0010


def test_induced_subgraph_keeps_labels():
    g = family("diamond")
    sub = induced_subgraph(g, 0b0111)
    assert sub.n == 3 and sub.labels == ("v1", "v2", "v3")


def test_text_roundtrip(tmp_path):
    g = family("petersen")
    path = tmp_path / "p.graph"
    write_graph(g, path, comment="ten vertices")
    assert read_graph(path) == g
    assert parse_graph_text(format_graph_text(g)) == g


@pytest.mark.parametrize("text", ["", "3\n0 1\n", "n 3\n0\n", "n x\n", "n 2\n0 2\n"])
def test_bad_text_rejected(text):
    with pytest.raises(GraphError):
        parse_graph_text(text)
