"""Edge-graph H1: unordered-edge 1-chains plus locally enumerated squares.

The square search walks each vertex's neighborhood with the reflexive
convention (a vertex neighbors itself), which also produces the degenerate,
triangle-shaped squares needed to kill triangle classes.  The edge graph
itself is never materialized.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from .gf2 import GF2Matrix
from .graph import Graph


@dataclass(frozen=True)
class Square:
    """An ordered square (v, w, v', w'): v ~ w, v ~ v', w ~ w', v' ~ w'
    under the reflexive convention."""

    v: int
    w: int
    vp: int
    wp: int

    def faces(self) -> List[Tuple[int, int]]:
        """The four unordered faces; loops (x, x) are possible."""
        v, w, vp, wp = self.v, self.w, self.vp, self.wp
        return [
            (v, w) if v <= w else (w, v),
            (vp, wp) if vp <= wp else (wp, vp),
            (w, wp) if w <= wp else (wp, w),
            (v, vp) if v <= vp else (vp, v),
        ]

    def boundary_edges(self) -> List[Tuple[int, int]]:
        """Non-loop faces with odd multiplicity (the Z/2 boundary)."""
        counts: Dict[Tuple[int, int], int] = {}
        for f in self.faces():
            if f[0] != f[1]:
                counts[f] = counts.get(f, 0) + 1
        return sorted(f for f, k in counts.items() if k & 1)


def enumerate_squares(g: Graph) -> List[Square]:
    """All squares found by the local 2-path search, deterministic order.

    For each v, each w > v and v' > w in N(v), and each w' >= v in the
    reflexive neighborhoods' intersection N+(w) & N+(v'), two squares are
    emitted: (v, w, v', w') and (v, v', w, w').
    """
    bits = g.adj_bits
    radj = [bits[x] | (1 << x) for x in range(g.n)]
    out: List[Square] = []
    for v in range(g.n):
        nb = g.neighbors(v)
        deg = len(nb)
        low_mask = (1 << v) - 1  # w' >= v
        for i in range(deg):
            w = nb[i]
            if w <= v:
                continue
            for j in range(i + 1, deg):
                vp = nb[j]
                common = (radj[w] & radj[vp]) & ~low_mask
                while common:
                    lowbit = common & -common
                    wp = lowbit.bit_length() - 1
                    out.append(Square(v, w, vp, wp))
                    out.append(Square(v, vp, w, wp))
                    common ^= lowbit
    return out


def square_boundary_matrix(g: Graph, squares: List[Square]) -> GF2Matrix:
    """m x len(squares) matrix; column j is square j's face sum mod 2."""
    edge_index = {e: k for k, e in enumerate(g.edges())}
    trips = []
    for j, sq in enumerate(squares):
        for f in sq.faces():
            if f[0] != f[1]:
                trips.append((edge_index[f], j))
    return GF2Matrix.assemble(g.m, len(squares), trips)


def h1_edge_graph(g: Graph) -> int:
    """dim H1 over Z/2 via the edge-graph method."""
    n, m = g.n, g.m
    incidence = GF2Matrix.assemble(
        n, m, (t for k, (u, v) in enumerate(g.edges()) for t in ((u, k), (v, k)))
    )
    squares = enumerate_squares(g)
    m2 = square_boundary_matrix(g, squares)
    return m - incidence.rank() - m2.rank()
