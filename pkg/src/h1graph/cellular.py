"""Cellular H1: glue a 2-cell into every simple 3- and 4-cycle.

The boundary matrix M packs the first two differentials of that complex:
rows are vertices then edges, columns are (reserved vertex slots,) edges,
then cycles.  dim H1 = m - rank(M1) - rank(M2), where M1 is the vertex x
edge block and M2 the edge x cycle block.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from .cycles import SimpleCycle, simple_four_cycles, triangles
from .errors import InternalConsistencyError
from .gf2 import GF2Matrix
from .graph import Graph


@dataclass(frozen=True)
class ColumnTable:
    """Row/column layout of the boundary matrix plus the edge lookup."""

    vertex_rows: range
    edge_rows: range
    edge_cols: range
    cycle_cols: range
    edge_index: Dict[Tuple[int, int], int]  # canonical (u, v) -> edge offset


@dataclass(frozen=True)
class BoundaryMatrix:
    matrix: GF2Matrix
    table: ColumnTable

    def vertex_edge_block(self) -> GF2Matrix:
        """M1: vertex rows x edge columns."""
        t = self.table
        return self.matrix.column_block(
            (t.vertex_rows.start, t.vertex_rows.stop), (t.edge_cols.start, t.edge_cols.stop)
        )

    def edge_cycle_block(self) -> GF2Matrix:
        """M2: edge rows x cycle columns."""
        t = self.table
        return self.matrix.column_block(
            (t.edge_rows.start, t.edge_rows.stop), (t.cycle_cols.start, t.cycle_cols.stop)
        )


def build_boundary_matrix(
    g: Graph, tris: Sequence[SimpleCycle], quads: Sequence[SimpleCycle]
) -> BoundaryMatrix:
    """Assemble M of shape (n+m) x (n+m+S) for S = len(tris) + len(quads).

    The first n columns stay identically zero (vertices have no boundary);
    edge column k has ones at its endpoint vertex rows; cycle columns have
    ones at the edge rows of their constituent edges.  Column order is
    edges, then triangles, then 4-cycles, each in canonical sort order.
    """
    n, m = g.n, g.m
    edges = list(g.edges())
    edge_index = {e: k for k, e in enumerate(edges)}
    cells = len(tris) + len(quads)
    trips: List[Tuple[int, int]] = []
    for k, (u, v) in enumerate(edges):
        col = n + k
        trips.append((u, col))
        trips.append((v, col))
    for k, cyc in enumerate([*tris, *quads]):
        col = n + m + k
        for e in cyc.edges():
            idx = edge_index.get(e)
            if idx is None:
                raise InternalConsistencyError(f"cycle {cyc.verts} uses non-edge {e}")
            trips.append((n + idx, col))
    matrix = GF2Matrix.assemble(n + m, n + m + cells, trips)
    table = ColumnTable(
        vertex_rows=range(0, n),
        edge_rows=range(n, n + m),
        edge_cols=range(n, n + m),
        cycle_cols=range(n + m, n + m + cells),
        edge_index=edge_index,
    )
    return BoundaryMatrix(matrix, table)


def h1_cellular(g: Graph, *, threads: int = 1) -> int:
    """dim H1 over Z/2 via the short-cycle cell complex.

    Disconnected input is fine: rank(M1) = n - c, so the result is the sum
    of the component-wise dimensions.
    """
    tris = triangles(g)
    quads = simple_four_cycles(g, threads=threads)
    bm = build_boundary_matrix(g, tris, quads)
    return g.m - bm.vertex_edge_block().rank() - bm.edge_cycle_block().rank()
