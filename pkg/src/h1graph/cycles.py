"""Enumeration of simple 3-cycles (triangles) and simple 4-cycles.

A simple 4-cycle is chordless: its two diagonals are non-edges.  Results are
canonicalized (lexicographically least over rotations and reflections) and
returned sorted, so output is deterministic regardless of worker count.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from .errors import InputDomainError
from .graph import Graph


@dataclass(frozen=True, order=True)
class SimpleCycle:
    """A simple 3- or 4-cycle in canonical vertex order."""

    verts: Tuple[int, ...]

    def edges(self) -> List[Tuple[int, int]]:
        """Constituent edges as canonical (min, max) pairs."""
        vs = self.verts
        k = len(vs)
        out = []
        for i in range(k):
            a, b = vs[i], vs[(i + 1) % k]
            out.append((a, b) if a < b else (b, a))
        return out


def canonicalize(verts: Sequence[int]) -> SimpleCycle:
    """Least tuple over all rotations and reflections of the cycle."""
    k = len(verts)
    if k not in (3, 4):
        raise InputDomainError(f"cycle length must be 3 or 4, got {k}")
    if len(set(verts)) != k:
        raise InputDomainError(f"cycle vertices must be distinct, got {tuple(verts)}")
    vs = tuple(verts)
    rev = vs[::-1]
    best = vs
    for seq in (vs, rev):
        for r in range(k):
            cand = seq[r:] + seq[:r]
            if cand < best:
                best = cand
    return SimpleCycle(best)


def triangles(g: Graph) -> List[SimpleCycle]:
    """All triangles, one canonical entry each, sorted.

    For every edge (u, v) with u < v, common neighbors w > v are found by
    intersecting the two neighbor bitsets, so each triangle is reported once
    with u < v < w (already canonical).
    """
    bits = g.adj_bits
    out: List[SimpleCycle] = []
    for u in range(g.n):
        bu = bits[u]
        for v in g.neighbors(u):
            if v <= u:
                continue
            common = (bu & bits[v]) & ~((1 << (v + 1)) - 1)
            while common:
                low = common & -common
                out.append(SimpleCycle((u, v, low.bit_length() - 1)))
                common ^= low
    return out


def _bucket_two_paths(g: Graph) -> Dict[Tuple[int, int], List[int]]:
    # Key (u, w) with u < w; value: middles v of 2-paths u - v - w, ascending.
    buckets: Dict[Tuple[int, int], List[int]] = {}
    for v in range(g.n):
        nb = g.neighbors(v)
        deg = len(nb)
        for i in range(deg):
            u = nb[i]
            for j in range(i + 1, deg):
                key = (u, nb[j])
                got = buckets.get(key)
                if got is None:
                    buckets[key] = [v]
                else:
                    got.append(v)
    return buckets


def _cycles_from_buckets(
    g: Graph,
    items: Sequence[Tuple[Tuple[int, int], List[int]]],
    chordless: bool,
) -> List[SimpleCycle]:
    bits = g.adj_bits
    out: List[SimpleCycle] = []
    for (u, w), mids in items:
        if chordless and (bits[u] >> w) & 1:
            continue
        k = len(mids)
        for i in range(k):
            x = mids[i]
            if x <= u:
                # Only emit where u is the least cycle vertex; the same cycle
                # is otherwise reachable from its other diagonal's bucket.
                continue
            bx = bits[x]
            for j in range(i + 1, k):
                y = mids[j]
                if chordless and (bx >> y) & 1:
                    continue
                out.append(SimpleCycle((u, x, w, y)))
    return out


def simple_four_cycles(g: Graph, *, chordless: bool = True, threads: int = 1) -> List[SimpleCycle]:
    """All 4-cycles (chordless by default), one canonical entry each, sorted.

    Enumerates 2-paths bucketed by endpoint pair; two distinct middles in a
    bucket close a 4-cycle.  With ``chordless=False`` the simplicity filter
    is skipped and chorded 4-cycles are reported too (their boundaries are
    Z/2 sums of two triangles, which the rank-invariance tests rely on).

    Buckets may be partitioned across ``threads`` workers (0 = one per CPU);
    the merged result is sorted either way, so output is worker-independent.
    """
    items = sorted(_bucket_two_paths(g).items())
    if threads <= 0:
        threads = os.cpu_count() or 1
    if threads == 1 or len(items) < 2 * threads:
        out = _cycles_from_buckets(g, items, chordless)
    else:
        chunk = (len(items) + threads - 1) // threads
        slices = [items[k : k + chunk] for k in range(0, len(items), chunk)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = pool.map(lambda part: _cycles_from_buckets(g, part, chordless), slices)
            out = [c for part in parts for c in part]
    out.sort()
    return out
