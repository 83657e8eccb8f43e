"""Cubical H1: chains on non-degenerate singular 1- and 2-cubes.

A 1-cube is an ordered reflexively-adjacent pair; a 2-cube is built by
stacking two 1-cubes whose corresponding endpoints are adjacent.  Constant
1-cubes take part in the pairing (that is what makes reversed edges
homologous) but are quotiented out of the chain bases.
"""

from __future__ import annotations

from typing import List, NamedTuple

from .gf2 import GF2Matrix
from .graph import Graph


class Cube1(NamedTuple):
    a: int
    b: int

    @property
    def degenerate(self) -> bool:
        return self.a == self.b


class Cube2(NamedTuple):
    """Corners a=(0,0), b=(1,0), c=(0,1), d=(1,1); rows (a,b),(c,d),
    columns (a,c),(b,d)."""

    a: int
    b: int
    c: int
    d: int

    def faces(self) -> List[Cube1]:
        """The two columns then the two rows."""
        return [Cube1(self.a, self.c), Cube1(self.b, self.d), Cube1(self.a, self.b), Cube1(self.c, self.d)]


def singular_one_cubes(g: Graph) -> List[Cube1]:
    """All n constant cubes, then all 2m ordered adjacent pairs, sorted."""
    out = [Cube1(v, v) for v in range(g.n)]
    for a in range(g.n):
        for b in g.neighbors(a):
            out.append(Cube1(a, b))
    return out


def pair_to_two_cubes(g: Graph, cubes: List[Cube1]) -> List[Cube2]:
    """Every ordered pair (bottom, top) of 1-cubes forming a valid
    non-degenerate 2-cube: endpoints adjacent under the reflexive
    convention, rows differing, and columns differing."""
    bits = g.adj_bits
    radj = [bits[x] | (1 << x) for x in range(g.n)]
    out: List[Cube2] = []
    for a, b in cubes:
        ra = radj[a]
        rb = radj[b]
        constant_bottom = a == b
        for c, d in cubes:
            if (ra >> c) & 1 and (rb >> d) & 1:
                if a == c and b == d:
                    continue  # equal rows
                if constant_bottom and c == d:
                    continue  # equal columns
                out.append(Cube2(a, b, c, d))
    return out


def h1_cubical(g: Graph) -> int:
    """dim H1 over Z/2 = dim ker(d1) - rank(d2) on the normalized complex."""
    n, m = g.n, g.m
    cubes = singular_one_cubes(g)
    nondeg = [c for c in cubes if not c.degenerate]
    index1 = {c: k for k, c in enumerate(nondeg)}
    d1 = GF2Matrix.assemble(
        n, len(nondeg), (t for k, c in enumerate(nondeg) for t in ((c.a, k), (c.b, k)))
    )
    ker_dim = 2 * m - d1.rank()
    two_cubes = pair_to_two_cubes(g, cubes)
    trips = []
    for j, sq in enumerate(two_cubes):
        for f in sq.faces():
            if f.a != f.b:
                trips.append((index1[f], j))
    d2 = GF2Matrix.assemble(len(nondeg), len(two_cubes), trips)
    return ker_dim - d2.rank()
