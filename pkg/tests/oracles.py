"""Independent brute-force oracles used by the tests.

Everything here is deliberately naive and shares no code with the package:
list-of-list elimination, subset enumeration, cycle-space arithmetic.
"""

from itertools import combinations, permutations
from typing import List, Sequence, Set, Tuple

from h1graph.graph import Graph


def naive_rank(rows: Sequence[Sequence[int]]) -> int:
    """Textbook GF(2) Gaussian elimination on dense 0/1 lists."""
    mat = [list(r) for r in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    pivot_row = 0
    for col in range(ncols):
        sel = None
        for r in range(pivot_row, len(mat)):
            if mat[r][col]:
                sel = r
                break
        if sel is None:
            continue
        mat[pivot_row], mat[sel] = mat[sel], mat[pivot_row]
        for r in range(len(mat)):
            if r != pivot_row and mat[r][col]:
                mat[r] = [a ^ b for a, b in zip(mat[r], mat[pivot_row])]
        pivot_row += 1
        rank += 1
        if pivot_row == len(mat):
            break
    return rank


def brute_triangles(g: Graph) -> Set[Tuple[int, int, int]]:
    out = set()
    for a, b, c in combinations(range(g.n), 3):
        if g.adjacent(a, b) and g.adjacent(b, c) and g.adjacent(a, c):
            out.add((a, b, c))
    return out


def _canon4(cycle: Tuple[int, int, int, int]) -> Tuple[int, int, int, int]:
    best = None
    seq = list(cycle)
    for rot in range(4):
        for cand in (seq[rot:] + seq[:rot], list(reversed(seq[rot:] + seq[:rot]))):
            t = tuple(cand)
            if best is None or t < best:
                best = t
    return best  # type: ignore[return-value]


def brute_four_cycles(g: Graph, *, chordless: bool = True) -> Set[Tuple[int, int, int, int]]:
    """All 4-vertex subsets, all cyclic arrangements, optional chord filter."""
    out = set()
    for quad in combinations(range(g.n), 4):
        for perm in permutations(quad):
            a, b, c, d = perm
            if not (g.adjacent(a, b) and g.adjacent(b, c) and g.adjacent(c, d) and g.adjacent(d, a)):
                continue
            if chordless and (g.adjacent(a, c) or g.adjacent(b, d)):
                continue
            out.add(_canon4(perm))
    return out


def cycle_space_h1(g: Graph) -> int:
    """dim H1 computed independently: cycle-space dimension m - n + c minus
    the rank of the span of all simple 3- and 4-cycle boundaries, using the
    naive eliminator and brute-force enumeration throughout."""
    edges = sorted((min(u, v), max(u, v)) for u, v in _edge_pairs(g))
    index = {e: i for i, e in enumerate(edges)}
    m = len(edges)

    seen = [False] * g.n
    components = 0
    for s in range(g.n):
        if seen[s]:
            continue
        components += 1
        stack = [s]
        seen[s] = True
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)

    rows: List[List[int]] = []
    for a, b, c in brute_triangles(g):
        row = [0] * m
        for e in ((a, b), (b, c), (a, c)):
            row[index[(min(e), max(e))]] ^= 1
        rows.append(row)
    for a, b, c, d in brute_four_cycles(g, chordless=True):
        row = [0] * m
        for e in ((a, b), (b, c), (c, d), (a, d)):
            row[index[(min(e), max(e))]] ^= 1
        rows.append(row)
    return (m - g.n + components) - naive_rank(rows)


def _edge_pairs(g: Graph):
    for u in range(g.n):
        for v in g.neighbors(u):
            if u < v:
                yield (u, v)
