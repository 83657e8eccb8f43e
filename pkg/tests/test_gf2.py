import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from h1graph.errors import InputDomainError
from h1graph.gf2 import GF2Matrix
from h1graph.graph import from_edge_list, connected_components
from h1graph.generators import erdos_renyi

from oracles import naive_rank


def test_assemble_accumulates_mod_2():
    m = GF2Matrix.assemble(2, 3, [(0, 1), (0, 1), (0, 2), (1, 0), (1, 0), (1, 0)])
    assert m.to_lists() == [[0, 0, 1], [1, 0, 0]]


def test_assemble_rejects_out_of_range():
    with pytest.raises(InputDomainError):
        GF2Matrix.assemble(2, 2, [(2, 0)])
    with pytest.raises(InputDomainError):
        GF2Matrix.assemble(2, 2, [(0, 2)])


def test_zeros_entry_and_column_weight():
    m = GF2Matrix.zeros(3, 4)
    assert m.rank() == 0
    assert all(m.entry(i, j) == 0 for i in range(3) for j in range(4))
    m2 = GF2Matrix.assemble(3, 4, [(0, 2), (1, 2), (2, 0)])
    assert m2.column_weight(2) == 2
    assert m2.column_weight(1) == 0


def test_rank_identity_and_duplicates():
    ident = GF2Matrix.assemble(4, 4, [(i, i) for i in range(4)])
    assert ident.rank() == 4
    dup = GF2Matrix.assemble(3, 4, [(0, 1), (0, 3), (1, 1), (1, 3), (2, 0)])
    assert dup.rank() == 2


def test_rank_matches_naive_oracle_on_random_matrices():
    rng = random.Random(20240816)
    for _ in range(500):
        rows = rng.randint(0, 32)
        cols = rng.randint(1, 32)
        triplets = []
        for i in range(rows):
            for j in range(cols):
                if rng.random() < 0.3:
                    triplets.append((i, j))
        m = GF2Matrix.assemble(rows, cols, triplets)
        assert m.rank() == naive_rank(m.to_lists())


def test_transpose_preserves_rank_and_entries():
    rng = random.Random(7)
    triplets = [(i, j) for i in range(10) for j in range(17) if rng.random() < 0.25]
    m = GF2Matrix.assemble(10, 17, triplets)
    t = m.transposed()
    assert (t.rows, t.cols) == (17, 10)
    assert all(m.entry(i, j) == t.entry(j, i) for i in range(10) for j in range(17))
    assert m.rank() == t.rank()


def test_column_block_extracts_submatrix():
    m = GF2Matrix.assemble(4, 6, [(0, 0), (0, 5), (1, 2), (2, 3), (3, 5)])
    b = m.column_block((1, 4), (2, 6))
    assert (b.rows, b.cols) == (3, 4)
    assert b.to_lists() == [
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 0, 1],
    ]
    with pytest.raises(InputDomainError):
        m.column_block((0, 5), (0, 2))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**40 - 1), st.integers(1, 12), st.integers(1, 12))
def test_rank_properties_random(seed, rows, cols):
    rng = random.Random(seed)
    triplets = [(i, j) for i in range(rows) for j in range(cols) if rng.random() < 0.4]
    m = GF2Matrix.assemble(rows, cols, triplets)
    r = m.rank()
    assert 0 <= r <= min(rows, cols)
    assert r == naive_rank(m.to_lists())
    # duplicating every row cannot change the rank
    doubled = GF2Matrix.assemble(2 * rows, cols, triplets + [(i + rows, j) for i, j in triplets])
    assert doubled.rank() == r


def test_incidence_rank_is_n_minus_components():
    # rank of the vertex-edge incidence matrix over GF(2) is n - c
    for n, p, seed in ((8, 0.2, 1), (12, 0.15, 2), (20, 0.08, 3), (9, 0.5, 4)):
        g = erdos_renyi(n, p, seed)
        triplets = []
        for k, (u, v) in enumerate(g.edges()):
            triplets.append((u, k))
            triplets.append((v, k))
        inc = GF2Matrix.assemble(g.n, g.m, triplets) if g.m else GF2Matrix.zeros(g.n, 1)
        c, _ = connected_components(g)
        assert inc.rank() == g.n - c


def test_empty_matrix_rank():
    assert GF2Matrix.assemble(0, 5, []).rank() == 0
    assert GF2Matrix.assemble(5, 1, []).rank() == 0
