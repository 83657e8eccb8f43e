import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from h1graph.cycles import SimpleCycle, canonicalize, simple_four_cycles, triangles
from h1graph.errors import InputDomainError
from h1graph.generators import GenSpec, erdos_renyi, named
from h1graph.graph import from_edge_list

from oracles import brute_four_cycles, brute_triangles


def _tri_tuples(g):
    return {c.verts for c in triangles(g)}


def _quad_tuples(g, **kw):
    return {c.verts for c in simple_four_cycles(g, **kw)}


def test_canonicalize_picks_least_rotation_or_reflection():
    assert canonicalize((2, 0, 1)).verts == (0, 1, 2)
    assert canonicalize((3, 2, 1, 0)).verts == (0, 1, 2, 3)
    assert canonicalize((1, 0, 3, 2)).verts == (0, 1, 2, 3)
    # reflection matters: 0-2-1-3 is a different 4-cycle than 0-1-2-3
    assert canonicalize((2, 0, 3, 1)).verts == (0, 2, 1, 3)


def test_canonicalize_rejects_bad_input():
    with pytest.raises(InputDomainError):
        canonicalize((0, 1))
    with pytest.raises(InputDomainError):
        canonicalize((0, 1, 1))
    with pytest.raises(InputDomainError):
        canonicalize((0, 1, 2, 3, 4))


def test_cycle_edges_wrap_around():
    assert SimpleCycle((0, 1, 2)).edges() == [(0, 1), (1, 2), (0, 2)]
    assert SimpleCycle((0, 1, 2, 3)).edges() == [(0, 1), (1, 2), (2, 3), (0, 3)]


def test_triangle_counts_on_known_graphs():
    k4 = named(GenSpec("complete", (4,)))
    assert _tri_tuples(k4) == {(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)}
    c4 = named(GenSpec("cycle", (4,)))
    assert _tri_tuples(c4) == set()
    petersen = named(GenSpec("petersen"))
    assert triangles(petersen) == []


def test_four_cycle_counts_on_known_graphs():
    c4 = named(GenSpec("cycle", (4,)))
    assert _quad_tuples(c4) == {(0, 1, 2, 3)}
    # K4: every 4-cycle is chorded
    k4 = named(GenSpec("complete", (4,)))
    assert _quad_tuples(k4) == set()
    assert len(_quad_tuples(k4, chordless=False)) == 3
    petersen = named(GenSpec("petersen"))
    assert simple_four_cycles(petersen) == []
    q3 = named(GenSpec("hypercube", (3,)))
    assert len(_quad_tuples(q3)) == 6  # the six faces


def test_results_are_sorted_and_duplicate_free():
    g = erdos_renyi(14, 0.4, 99)
    tris = triangles(g)
    quads = simple_four_cycles(g)
    assert tris == sorted(tris) and len(set(tris)) == len(tris)
    assert quads == sorted(quads) and len(set(quads)) == len(quads)


def test_matches_brute_force_on_100_seeded_graphs():
    checked = 0
    for seed in range(100):
        n = 5 + (seed % 8)  # 5..12
        p = 0.15 + 0.05 * (seed % 7)
        g = erdos_renyi(n, p, seed * 131 + 7)
        assert _tri_tuples(g) == brute_triangles(g)
        assert _quad_tuples(g) == brute_four_cycles(g, chordless=True)
        assert _quad_tuples(g, chordless=False) == brute_four_cycles(g, chordless=False)
        checked += 1
    assert checked == 100


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 10), st.integers(0, 2**32 - 1))
def test_property_matches_brute_force(n, seed):
    g = erdos_renyi(n, 0.45, seed)
    assert _tri_tuples(g) == brute_triangles(g)
    assert _quad_tuples(g) == brute_four_cycles(g)


def test_thread_count_does_not_change_output():
    g = erdos_renyi(40, 0.2, 5)
    base = simple_four_cycles(g, threads=1)
    assert simple_four_cycles(g, threads=4) == base
    assert simple_four_cycles(g, threads=0) == base  # auto
    assert simple_four_cycles(g, chordless=False, threads=3) == simple_four_cycles(
        g, chordless=False
    )


def test_triangle_free_graph_with_squares():
    # grid(k) is the box product of two k-edge paths: (k+1)^2 vertices
    grid = named(GenSpec("grid", (4,)))
    assert grid.n == 25
    assert triangles(grid) == []
    assert len(simple_four_cycles(grid)) == 16  # 4x4 unit squares


def test_empty_and_tiny_graphs():
    assert triangles(from_edge_list(0, [])) == []
    assert simple_four_cycles(from_edge_list(0, [])) == []
    assert triangles(from_edge_list(2, [(0, 1)])) == []
    assert simple_four_cycles(from_edge_list(2, [(0, 1)])) == []
