"""Immutable simple undirected graphs with a reflexive adjacency convention.

Self-loops are never stored.  Every vertex counts as adjacent to itself at
query time (``Graph.adjacent``), so the edge count ``m`` stays the number of
proper unordered edges, which is what all the homology formulas use.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Tuple

from .errors import InputDomainError

# Guard for box products; n*m vertex counts beyond this are almost certainly
# a caller mistake and would exhaust memory downstream anyway.
MAX_PRODUCT_VERTICES = 1 << 22


@dataclass(frozen=True, order=True)
class Edge:
    """Canonical unordered vertex pair, u < v."""

    u: int
    v: int

    def __post_init__(self) -> None:
        if self.u >= self.v:
            raise InputDomainError(f"edge ({self.u}, {self.v}) is not canonical (need u < v)")


class Graph:
    """Simple undirected graph on vertices 0..n-1.

    Immutable after construction and safe to share across workers.
    ``adj_bits[u]`` is the neighbor set of u as an int bitset (bit v set iff
    u ~ v as a stored edge; the reflexive bit is never set).
    """

    __slots__ = ("n", "m", "_adj", "adj_bits")

    def __init__(self, n: int, adj: List[List[int]]):
        # Internal constructor: `adj` must already be normalized
        # (symmetric, strictly sorted, no self-loops). Use from_edge_list().
        self.n = n
        self._adj: Tuple[Tuple[int, ...], ...] = tuple(tuple(nb) for nb in adj)
        self.m = sum(len(nb) for nb in self._adj) // 2
        bits = []
        for nb in self._adj:
            x = 0
            for v in nb:
                x |= 1 << v
            bits.append(x)
        self.adj_bits: Tuple[int, ...] = tuple(bits)

    def adjacent(self, u: int, v: int) -> bool:
        """Reflexive adjacency: true iff u == v or {u, v} is an edge."""
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise InputDomainError(f"vertex pair ({u}, {v}) out of range for n={self.n}")
        return u == v or (self.adj_bits[u] >> v) & 1 == 1

    def neighbors(self, u: int) -> Tuple[int, ...]:
        """Sorted proper neighbors of u (u itself is never listed)."""
        if not 0 <= u < self.n:
            raise InputDomainError(f"vertex {u} out of range for n={self.n}")
        return self._adj[u]

    def degree(self, u: int) -> int:
        return len(self.neighbors(u))

    def edges(self) -> Iterator[Tuple[int, int]]:
        """All edges as (u, v) with u < v, in lexicographic order."""
        for u in range(self.n):
            for v in self._adj[u]:
                if v > u:
                    yield (u, v)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def from_edge_list(n: int, pairs: Iterable[Tuple[int, int]]) -> Graph:
    """Build a Graph from vertex pairs.

    Self-loops are dropped (reflexivity is implicit), duplicates and reversed
    pairs collapse to one edge. Vertex ids must lie in [0, n).
    """
    if n < 0:
        raise InputDomainError(f"vertex count must be non-negative, got {n}")
    seen = [0] * n
    for u, v in pairs:
        if not (0 <= u < n and 0 <= v < n):
            raise InputDomainError(f"vertex pair ({u}, {v}) out of range for n={n}")
        if u == v:
            continue
        seen[u] |= 1 << v
        seen[v] |= 1 << u
    adj: List[List[int]] = []
    for u in range(n):
        x = seen[u]
        nb = []
        while x:
            low = x & -x
            nb.append(low.bit_length() - 1)
            x ^= low
        adj.append(nb)
    return Graph(n, adj)


def box_product(g: Graph, h: Graph) -> Graph:
    """Box product: (a,b) ~ (a',b') iff one coordinate is equal and the
    other is adjacent.  Vertex (a, b) is encoded as a * h.n + b."""
    if g.n * h.n > MAX_PRODUCT_VERTICES:
        raise InputDomainError(
            f"box product would have {g.n * h.n} vertices (limit {MAX_PRODUCT_VERTICES})"
        )
    hn = h.n
    pairs: List[Tuple[int, int]] = []
    for a in range(g.n):
        base = a * hn
        for b, bp in h.edges():
            pairs.append((base + b, base + bp))
    for a, ap in g.edges():
        for b in range(hn):
            pairs.append((a * hn + b, ap * hn + b))
    return from_edge_list(g.n * hn, pairs)


def connected_components(g: Graph) -> Tuple[int, List[int]]:
    """Component count and a per-vertex label in 0..count-1."""
    labels = [-1] * g.n
    count = 0
    for start in range(g.n):
        if labels[start] != -1:
            continue
        labels[start] = count
        stack = [start]
        while stack:
            u = stack.pop()
            for v in g.neighbors(u):
                if labels[v] == -1:
                    labels[v] = count
                    stack.append(v)
        count += 1
    return count, labels
