"""Seeded random and named graph families.

Randomness comes from SplitMix64 (Steele, Lea, Flood 2014): a 64-bit
counter-based mixer with no platform-dependent state, so a (family, params,
seed) triple yields the same edge list everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Tuple

from .errors import InputDomainError
from .graph import Graph, box_product, from_edge_list

_MASK64 = (1 << 64) - 1

FAMILIES = ("erdos_renyi", "cycle", "path", "complete", "hypercube", "grid", "petersen", "box_product")


class SplitMix64:
    """SplitMix64 stream: state advances by the golden-gamma constant and
    each output is a finalizing mix of the new state."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def uniform(self, lo: float, hi: float) -> float:
        """Uniform float in [lo, hi)."""
        return lo + (hi - lo) * (self.next_u64() / 2.0**64)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform int in [lo, hi]; modulo reduction (bias is negligible
        for ranges far below 2**64)."""
        if hi < lo:
            raise InputDomainError(f"empty integer range [{lo}, {hi}]")
        return lo + self.next_u64() % (hi - lo + 1)


@dataclass(frozen=True)
class GenSpec:
    """Recipe for one generated graph."""

    family: str
    params: Tuple[int, ...] = field(default_factory=tuple)
    p: Optional[float] = None
    seed: int = 0


def erdos_renyi(n: int, p: float, seed: int) -> Graph:
    """G(n, p): each of the C(n, 2) pairs included independently.

    Pairs are visited in the fixed order (0,1), (0,2), ..., (n-2, n-1) with
    one SplitMix64 draw each, so equal (n, p, seed) always yields the same
    graph.
    """
    if not 0.0 <= p <= 1.0:
        raise InputDomainError(f"edge probability must be in [0, 1], got {p}")
    if n < 0:
        raise InputDomainError(f"vertex count must be non-negative, got {n}")
    threshold = int(p * 2.0**64)
    rng = SplitMix64(seed)
    pairs = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.next_u64() < threshold:
                pairs.append((u, v))
    return from_edge_list(n, pairs)


def _cycle(k: int) -> Graph:
    if k < 3:
        raise InputDomainError(f"cycle graph needs at least 3 vertices, got {k}")
    return from_edge_list(k, [(i, (i + 1) % k) for i in range(k)])


def _path(k: int) -> Graph:
    # The k-step path: vertices 0..k, edges (i, i+1).
    if k < 1:
        raise InputDomainError(f"path length must be positive, got {k}")
    return from_edge_list(k + 1, [(i, i + 1) for i in range(k)])


def _complete(k: int) -> Graph:
    if k < 1:
        raise InputDomainError(f"complete graph needs a positive vertex count, got {k}")
    return from_edge_list(k, [(u, v) for u in range(k) for v in range(u + 1, k)])


def _hypercube(d: int) -> Graph:
    if d < 1:
        raise InputDomainError(f"hypercube dimension must be positive, got {d}")
    g = _path(1)
    for _ in range(d - 1):
        g = box_product(g, _path(1))
    return g


def _petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(10, outer + spokes + inner)


def named(spec: GenSpec) -> Graph:
    """Produce the graph a GenSpec describes."""
    fam = spec.family
    if fam not in FAMILIES:
        raise InputDomainError(f"unknown family {fam!r}; expected one of {FAMILIES}")
    params = tuple(spec.params)
    if fam == "erdos_renyi":
        if len(params) != 1:
            raise InputDomainError("erdos_renyi takes one parameter (vertex count)")
        if spec.p is None:
            raise InputDomainError("erdos_renyi requires an edge probability p")
        return erdos_renyi(params[0], spec.p, spec.seed)
    if spec.p is not None:
        raise InputDomainError(f"family {fam!r} does not take an edge probability")
    if fam == "petersen":
        if params:
            raise InputDomainError("petersen takes no parameters")
        return _petersen()
    if fam == "box_product":
        # Product of two cycle graphs (a discrete torus).
        if len(params) != 2:
            raise InputDomainError("box_product takes two parameters (cycle lengths)")
        return box_product(_cycle(params[0]), _cycle(params[1]))
    if len(params) != 1:
        raise InputDomainError(f"family {fam!r} takes exactly one parameter")
    k = params[0]
    if fam == "cycle":
        return _cycle(k)
    if fam == "path":
        return _path(k)
    if fam == "complete":
        return _complete(k)
    if fam == "hypercube":
        return _hypercube(k)
    if fam == "grid":
        return box_product(_path(k), _path(k))
    raise AssertionError(fam)
