"""Bit-packed linear algebra over GF(2).

Rows are stored as Python integers (arbitrary precision, so a row is a
sequence of machine words under the hood); bit ``i`` of the integer is
column ``i``.  Everything here is pure: inputs are never mutated.
"""

from __future__ import annotations

from typing import Iterable, Sequence


class BitVector:
    """A fixed-length vector over GF(2), packed into a Python int."""

    __slots__ = ("value", "length")

    def __init__(self, value: int, length: int):
        if length < 0:
            raise ValueError("length must be nonnegative")
        if value < 0 or value >> length:
            raise ValueError("value has bits outside the declared length")
        self.value = value
        self.length = length

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> "BitVector":
        value = 0
        for i, b in enumerate(bits):
            if b & 1:
                value |= 1 << i
        return cls(value, len(bits))

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(i)
        return (self.value >> i) & 1

    def __len__(self) -> int:
        return self.length

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BitVector)
            and self.value == other.value
            and self.length == other.length
        )

    def __hash__(self) -> int:
        return hash((self.value, self.length))

    def __xor__(self, other: "BitVector") -> "BitVector":
        if self.length != other.length:
            raise ValueError("length mismatch")
        return BitVector(self.value ^ other.value, self.length)

    def weight(self) -> int:
        return self.value.bit_count()

    def to_bits(self) -> list[int]:
        return [(self.value >> i) & 1 for i in range(self.length)]

    def __repr__(self) -> str:
        return f"BitVector({''.join(str(b) for b in self.to_bits())})"


class BitMatrix:
    """A list of equal-length BitVector rows."""

    __slots__ = ("rows", "n_cols")

    def __init__(self, rows: Iterable[BitVector], n_cols: int | None = None):
        self.rows = list(rows)
        if n_cols is None:
            if not self.rows:
                raise ValueError("n_cols required for a matrix with no rows")
            n_cols = self.rows[0].length
        for r in self.rows:
            if r.length != n_cols:
                raise ValueError("row length mismatch")
        self.n_cols = n_cols

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], n_cols: int | None = None) -> "BitMatrix":
        if rows:
            return cls([BitVector.from_bits(r) for r in rows])
        return cls([], n_cols=0 if n_cols is None else n_cols)

    @classmethod
    def from_ints(cls, values: Sequence[int], n_cols: int) -> "BitMatrix":
        return cls([BitVector(v, n_cols) for v in values], n_cols=n_cols)

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    def row_ints(self) -> list[int]:
        return [r.value for r in self.rows]

    def to_lists(self) -> list[list[int]]:
        return [r.to_bits() for r in self.rows]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BitMatrix)
            and self.n_cols == other.n_cols
            and self.rows == other.rows
        )

    def __repr__(self) -> str:
        return f"BitMatrix({self.n_rows}x{self.n_cols})"


def _eliminate(values: Iterable[int]) -> dict[int, int]:
    """Forward elimination; returns {pivot bit mask: reduced row}.

    Pivots on the lowest set bit of each incoming row, reducing against
    previously found pivots first.
    """
    pivots: dict[int, int] = {}
    for row in values:
        while row:
            low = row & -row
            other = pivots.get(low)
            if other is None:
                pivots[low] = row
                break
            row ^= other
    return pivots


def rank_f2(m: BitMatrix) -> int:
    """Dimension of the row space of ``m`` over GF(2)."""
    return len(_eliminate(m.row_ints()))


def rank_of_ints(values: Iterable[int]) -> int:
    """rank_f2 for raw integer rows (internal fast path)."""
    return len(_eliminate(values))


def rref_f2(m: BitMatrix) -> tuple[BitMatrix, list[int]]:
    """Reduced row-echelon form of ``m`` and its pivot columns.

    The returned matrix has the same row space as ``m``; zero rows are
    dropped.  Pivot columns are strictly increasing.
    """
    pivots = _eliminate(m.row_ints())
    # Back-substitution: clear every pivot bit from the other rows.
    masks = sorted(pivots)
    for low in masks:
        row = pivots[low]
        for other_low in masks:
            if other_low != low and pivots[other_low] & low:
                pivots[other_low] ^= row
    reduced = [pivots[low] for low in sorted(pivots)]
    pivot_cols = [low.bit_length() - 1 for low in sorted(pivots)]
    return BitMatrix.from_ints(reduced, m.n_cols), pivot_cols


def in_row_space(m: BitMatrix, v: BitVector) -> bool:
    """True iff ``v`` is a GF(2) linear combination of the rows of ``m``."""
    if v.length != m.n_cols:
        raise ValueError(f"vector length {v.length} != column count {m.n_cols}")
    pivots = _eliminate(m.row_ints())
    row = v.value
    while row:
        low = row & -row
        other = pivots.get(low)
        if other is None:
            return False
        row ^= other
    return True


def reduce_against(pivots: dict[int, int], row: int) -> int:
    """Reduce an integer row against a pivot table from ``_eliminate``."""
    while row:
        low = row & -row
        other = pivots.get(low)
        if other is None:
            return row
        row ^= other
    return 0


def pivot_table(values: Iterable[int]) -> dict[int, int]:
    """Expose the elimination table for repeated membership tests."""
    return _eliminate(values)


def kernel_f2(m: BitMatrix) -> BitMatrix:
    """Basis of the right null space { x : m @ x = 0 (mod 2) }.

    Returns one basis vector per row; row count is n_cols - rank(m).
    """
    n = m.n_cols
    reduced, pivot_cols = rref_f2(m)
    pivot_set = set(pivot_cols)
    free_cols = [c for c in range(n) if c not in pivot_set]
    basis: list[int] = []
    rows = reduced.row_ints()
    for f in free_cols:
        vec = 1 << f
        for row, p in zip(rows, pivot_cols):
            if (row >> f) & 1:
                vec |= 1 << p
        basis.append(vec)
    return BitMatrix.from_ints(basis, n)
