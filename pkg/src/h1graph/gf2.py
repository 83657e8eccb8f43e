"""Bit-packed matrices over Z/2 with triplet assembly and rank.

Each row is stored as one Python int used as a bitset (bit j = column j),
so row elimination is a single word-wide XOR.  This is the cost-dominant
kernel shared by all three homology algorithms.
"""

from __future__ import annotations

from typing import Iterable, List, Sequence, Tuple

from .errors import InputDomainError

# (row, col) entries; duplicates allowed and accumulate mod 2.
Triplets = Iterable[Tuple[int, int]]


class GF2Matrix:
    """Immutable rows x cols matrix over Z/2."""

    __slots__ = ("rows", "cols", "_bits")

    def __init__(self, rows: int, cols: int, bits: Sequence[int]):
        # Internal constructor; use assemble()/zeros(). `bits` must have no
        # bit at column index >= cols.
        self.rows = rows
        self.cols = cols
        self._bits: Tuple[int, ...] = tuple(bits)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "GF2Matrix":
        return cls(rows, cols, [0] * rows)

    @classmethod
    def assemble(cls, rows: int, cols: int, triplets: Triplets) -> "GF2Matrix":
        """Entry (i, j) is 1 iff (i, j) occurs an odd number of times."""
        per_row: List[List[int]] = [[] for _ in range(rows)]
        for i, j in triplets:
            if not (0 <= i < rows and 0 <= j < cols):
                raise InputDomainError(f"triplet ({i}, {j}) out of range for {rows}x{cols}")
            per_row[i].append(j)
        nbytes = (cols + 7) // 8
        bits: List[int] = []
        for cs in per_row:
            if not cs:
                bits.append(0)
                continue
            cs.sort()
            buf = bytearray(nbytes)
            k = 0
            total = len(cs)
            while k < total:
                j = cs[k]
                run = k + 1
                while run < total and cs[run] == j:
                    run += 1
                if (run - k) & 1:
                    buf[j >> 3] |= 1 << (j & 7)
                k = run
            bits.append(int.from_bytes(buf, "little"))
        return cls(rows, cols, bits)

    def entry(self, i: int, j: int) -> int:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise InputDomainError(f"entry ({i}, {j}) out of range for {self.rows}x{self.cols}")
        return (self._bits[i] >> j) & 1

    def row_bits(self, i: int) -> int:
        """Row i as an int bitset (bit j = column j)."""
        return self._bits[i]

    def to_lists(self) -> List[List[int]]:
        """Dense 0/1 lists; intended for tests and small matrices."""
        return [[(r >> j) & 1 for j in range(self.cols)] for r in self._bits]

    def column_weight(self, j: int) -> int:
        return sum((r >> j) & 1 for r in self._bits)

    def transposed(self) -> "GF2Matrix":
        nbytes = (self.rows + 7) // 8
        bufs = [bytearray(nbytes) for _ in range(self.cols)]
        for i, row in enumerate(self._bits):
            x = row
            byte, bit = i >> 3, 1 << (i & 7)
            while x:
                low = x & -x
                bufs[low.bit_length() - 1][byte] |= bit
                x ^= low
        return GF2Matrix(self.cols, self.rows, [int.from_bytes(b, "little") for b in bufs])

    def rank(self) -> int:
        """Rank over Z/2; the matrix itself is never mutated.

        Elimination runs on whichever orientation has the fewer rows, so the
        work is bounded by the smaller dimension.  Pivots are lowest set bits.
        """
        if self.cols < self.rows:
            work: Sequence[int] = self.transposed()._bits
        else:
            work = self._bits
        pivots: dict[int, int] = {}
        rank = 0
        for row in work:
            while row:
                low = row & -row
                other = pivots.get(low)
                if other is None:
                    pivots[low] = row
                    rank += 1
                    break
                row ^= other
        return rank

    def column_block(self, row_range: Tuple[int, int], col_range: Tuple[int, int]) -> "GF2Matrix":
        """Copy of the contiguous submatrix rows [r0, r1) x cols [c0, c1)."""
        r0, r1 = row_range
        c0, c1 = col_range
        if not (0 <= r0 <= r1 <= self.rows and 0 <= c0 <= c1 <= self.cols):
            raise InputDomainError(
                f"block rows [{r0}, {r1}) cols [{c0}, {c1}) invalid for {self.rows}x{self.cols}"
            )
        mask = (1 << (c1 - c0)) - 1
        return GF2Matrix(r1 - r0, c1 - c0, [(self._bits[i] >> c0) & mask for i in range(r0, r1)])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GF2Matrix):
            return NotImplemented
        return (self.rows, self.cols, self._bits) == (other.rows, other.cols, other._bits)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._bits))

    def __repr__(self) -> str:
        return f"GF2Matrix({self.rows}x{self.cols})"
