from itertools import combinations

import pytest

from drgjacobi import (
    GraphError,
    MalformedLineError,
    NotConnectedError,
    SelfLoopError,
    bfs_distances,
    degree_k,
    diameter,
    distance_k_matrix,
    graph_from_edges,
    graph_from_name,
    isoscycle_count,
    parse_edge_list,
)


def kneser_petersen_text():
    """Independent Petersen construction: 2-subsets of {0..4}, disjointness."""
    subsets = list(combinations(range(5), 2))
    lines = []
    for i, s in enumerate(subsets):
        for j, t in enumerate(subsets):
            if i < j and not set(s) & set(t):
                lines.append(f"{i} {j}")
    return "\n".join(lines)


def test_parse_triangle():
    g = parse_edge_list("0 1\n1 2\n2 0")
    assert g.vertex_count == 3
    assert g.adjacency == ((1, 2), (0, 2), (0, 1))


def test_parse_comments_blanks_and_duplicates():
    g = parse_edge_list("# a triangle\n\n0 1\n1 2\n 2 0 \n0 1\n")
    assert g.vertex_count == 3
    assert all(g.degree(v) == 2 for v in range(3))


@pytest.mark.parametrize("text,line_no", [("0 1\n2", 2), ("0 x", 1), ("0 1\n\n1 2 3", 3), ("0 -1", 1)])
def test_parse_malformed(text, line_no):
    with pytest.raises(MalformedLineError) as err:
        parse_edge_list(text)
    assert err.value.line_no == line_no


def test_parse_self_loop():
    with pytest.raises(SelfLoopError) as err:
        parse_edge_list("0 1\n1 1")
    assert err.value.vertex == 1


def test_parse_not_connected():
    with pytest.raises(NotConnectedError) as err:
        parse_edge_list("0 1\n2 3")
    assert err.value.component == (0, 1)


def test_parse_kneser_petersen():
    g = parse_edge_list(kneser_petersen_text())
    assert g.vertex_count == 10
    assert all(g.degree(v) == 3 for v in range(10))
    assert diameter(g) == 2


def test_graph_from_edges_isolated_vertex_rejected():
    with pytest.raises(NotConnectedError):
        graph_from_edges([(0, 1)], vertex_count=3)


def test_single_vertex_rejected():
    with pytest.raises(GraphError):
        graph_from_edges([], vertex_count=1)


def test_builtin_generators():
    k4 = graph_from_name("complete:4")
    assert k4.vertex_count == 4 and all(k4.degree(v) == 3 for v in range(4))
    c6 = graph_from_name("cycle:6")
    assert c6.vertex_count == 6 and all(c6.degree(v) == 2 for v in range(6))
    q3 = graph_from_name("hypercube:3")
    assert q3.vertex_count == 8 and all(q3.degree(v) == 3 for v in range(8))
    assert diameter(q3) == 3
    k33 = graph_from_name("complete_bipartite:3")
    assert k33.vertex_count == 6 and all(k33.degree(v) == 3 for v in range(6))
    assert diameter(k33) == 2


def test_builtin_petersen_matches_kneser_construction():
    builtin = graph_from_name("petersen")
    kneser = parse_edge_list(kneser_petersen_text())
    for g in (builtin, kneser):
        assert g.vertex_count == 10
        assert sorted(g.degree(v) for v in range(10)) == [3] * 10
        assert diameter(g) == 2
        profile = sorted(bfs_distances(g, 0))
        assert profile == [0] + [1] * 3 + [2] * 6


@pytest.mark.parametrize(
    "name", ["complete:1", "cycle:2", "hypercube:0", "unknown:3", "petersen:5", "complete", "cycle:x"]
)
def test_builtin_bad_names(name):
    with pytest.raises(GraphError):
        graph_from_name(name)


def test_bfs_distances_k3_and_c6():
    assert bfs_distances(graph_from_name("complete:3"), 0) == [0, 1, 1]
    assert bfs_distances(graph_from_name("cycle:6"), 0) == [0, 1, 2, 3, 2, 1]


def test_bfs_distances_petersen_profile():
    g = graph_from_name("petersen")
    for v in range(10):
        dist = bfs_distances(g, v)
        assert sorted(dist) == [0, 1, 1, 1, 2, 2, 2, 2, 2, 2]


def test_bfs_vertex_out_of_range():
    with pytest.raises(GraphError):
        bfs_distances(graph_from_name("complete:3"), 5)


def test_distance_matrix_zero_is_identity(corpus_entry):
    _, g, _ = corpus_entry
    m = distance_k_matrix(g, 0)
    assert all(m.rows[v] == frozenset({v}) for v in range(g.vertex_count))


def test_distance_matrix_c6_antipodes():
    m = distance_k_matrix(graph_from_name("cycle:6"), 3)
    assert all(m.rows[v] == frozenset({(v + 3) % 6}) for v in range(6))


def test_distance_matrix_petersen_k2_row_sums():
    m = distance_k_matrix(graph_from_name("petersen"), 2)
    assert all(m.row_sum(v) == 6 for v in range(10))


def test_distance_matrix_beyond_diameter_is_zero(corpus_entry):
    _, g, _ = corpus_entry
    assert distance_k_matrix(g, diameter(g) + 1).is_zero


def test_distance_matrices_partition_all_pairs(corpus_entry):
    _, g, _ = corpus_entry
    n = g.vertex_count
    cover = [distance_k_matrix(g, k) for k in range(diameter(g) + 1)]
    for i in range(n):
        hit = [m.entry(i, j) for m in cover for j in range(n)]
        assert sum(hit) == n  # each (i, j) in exactly one class
        for m in cover:
            for j in m.rows[i]:
                assert m.entry(j, i) == 1  # symmetry


def test_row_sums_equal_degree_k(corpus_entry):
    _, g, _ = corpus_entry
    for k in range(diameter(g) + 2):
        m = distance_k_matrix(g, k)
        for v in range(g.vertex_count):
            assert m.row_sum(v) == degree_k(g, v, k)


def test_degree_k_sums_to_vertex_count(corpus_entry):
    _, g, _ = corpus_entry
    d = diameter(g)
    for v in range(g.vertex_count):
        assert sum(degree_k(g, v, k) for k in range(d + 1)) == g.vertex_count


def test_degree_k_examples():
    for n in (2, 5, 9):
        g = graph_from_name(f"complete:{n}")
        assert all(degree_k(g, v, 1) == n - 1 for v in range(n))
        assert all(degree_k(g, v, 0) == 1 for v in range(n))
    g = graph_from_name("petersen")
    assert all(degree_k(g, v, 2) == 6 for v in range(10))


def test_isoscycle_count_examples():
    k4 = graph_from_name("complete:4")
    assert all(isoscycle_count(k4, v, 1) == 3 for v in range(4))
    c6 = graph_from_name("cycle:6")
    assert all(isoscycle_count(c6, v, 1) == 0 for v in range(6))
    # trees carry no isoscycles at any distance
    path = parse_edge_list("0 1\n1 2\n2 3")
    star = parse_edge_list("0 1\n0 2\n0 3\n0 4")
    for tree in (path, star):
        for v in range(tree.vertex_count):
            for k in range(diameter(tree) + 2):
                assert isoscycle_count(tree, v, k) == 0


def test_isoscycle_count_integral_on_corpus(corpus_entry):
    _, g, _ = corpus_entry
    for v in range(g.vertex_count):
        for k in range(diameter(g) + 1):
            assert isoscycle_count(g, v, k) >= 0  # raises if the pair count is odd


def test_diameter_examples():
    assert diameter(graph_from_name("complete:7")) == 1
    assert diameter(graph_from_name("cycle:6")) == 3
    assert diameter(graph_from_name("petersen")) == 2
