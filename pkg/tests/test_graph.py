import pytest

from h1graph.errors import GraphParseError, InputDomainError
from h1graph.edgelist import format_edge_list, parse_edge_list
from h1graph.graph import Edge, Graph, box_product, connected_components, from_edge_list


def test_from_edge_list_deduplicates_and_drops_loops():
    g = from_edge_list(4, [(0, 1), (1, 0), (0, 1), (2, 2), (1, 3)])
    assert g.n == 4
    assert g.m == 2
    assert list(g.edges()) == [(0, 1), (1, 3)]


def test_adjacency_is_symmetric_and_sorted():
    g = from_edge_list(5, [(3, 1), (4, 1), (0, 1)])
    assert g.neighbors(1) == (0, 3, 4)
    for u in range(5):
        for v in g.neighbors(u):
            assert u in g.neighbors(v)
    assert g.m == sum(len(g.neighbors(u)) for u in range(5)) // 2


def test_adjacent_is_reflexive_without_stored_loops():
    g = from_edge_list(3, [(0, 1)])
    for v in range(3):
        assert g.adjacent(v, v)
        assert v not in g.neighbors(v)
    assert g.adjacent(0, 1) and g.adjacent(1, 0)
    assert not g.adjacent(0, 2)


def test_adjacent_rejects_out_of_range():
    g = from_edge_list(3, [(0, 1)])
    with pytest.raises(InputDomainError):
        g.adjacent(0, 3)
    with pytest.raises(InputDomainError):
        g.adjacent(-1, 0)


def test_edge_requires_canonical_order():
    assert Edge(0, 5).u == 0
    with pytest.raises(InputDomainError):
        Edge(5, 0)
    with pytest.raises(InputDomainError):
        Edge(2, 2)


def test_edges_iterate_in_lexicographic_order():
    g = from_edge_list(4, [(2, 3), (0, 3), (0, 1), (1, 2)])
    assert list(g.edges()) == [(0, 1), (0, 3), (1, 2), (2, 3)]


def test_degree_and_equality():
    g1 = from_edge_list(3, [(0, 1), (1, 2)])
    g2 = from_edge_list(3, [(1, 2), (0, 1)])
    assert g1 == g2
    assert hash(g1) == hash(g2)
    assert g1.degree(1) == 2
    assert g1 != from_edge_list(3, [(0, 1)])


def test_from_edge_list_rejects_bad_vertices():
    with pytest.raises(InputDomainError):
        from_edge_list(3, [(0, 3)])
    with pytest.raises(InputDomainError):
        from_edge_list(-1, [])


def test_box_product_of_two_edges_is_a_square():
    k2 = from_edge_list(2, [(0, 1)])
    sq = box_product(k2, k2)
    assert (sq.n, sq.m) == (4, 4)
    # vertices (a,b) -> 2a+b; steps move in exactly one coordinate
    assert sq.adjacent(0, 1) and sq.adjacent(0, 2)
    assert not sq.adjacent(0, 3)


def test_box_product_rejects_oversized_result():
    big = from_edge_list(3000, [])
    with pytest.raises(InputDomainError):
        box_product(big, big)


def test_connected_components_counts_and_labels():
    g = from_edge_list(6, [(0, 1), (1, 2), (3, 4)])
    count, labels = connected_components(g)
    assert count == 3
    assert labels[0] == labels[1] == labels[2]
    assert labels[3] == labels[4]
    assert labels[0] != labels[3] != labels[5]


def test_edge_list_round_trip():
    g = from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    text = format_edge_list(g)
    assert text.splitlines()[0] == "5 5"
    assert text.endswith("\n")
    assert parse_edge_list(text) == g


def test_parse_ignores_comments_and_blank_lines():
    text = "# a 5-cycle\n5 5\n\n0 1\n1 2\n# middle\n2 3\n3 4\n0 4\n"
    g = parse_edge_list(text)
    assert (g.n, g.m) == (5, 5)


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("", "header"),
        ("3\n", "line 1"),
        ("a 3\n", "line 1"),
        ("3 1\n0 5\n", "line 2"),
        ("3 2\n0 1\n", "2 edge"),
        ("3 1\n0 1\n1 2\n", "line 3"),
        ("-2 0\n", "line 1"),
        ("3 1\n0 x\n", "line 2"),
    ],
)
def test_parse_errors_name_the_line(text, fragment):
    with pytest.raises(GraphParseError) as excinfo:
        parse_edge_list(text)
    assert fragment in str(excinfo.value)


def test_parse_error_is_input_domain_error():
    with pytest.raises(InputDomainError):
        parse_edge_list("bogus\n")
