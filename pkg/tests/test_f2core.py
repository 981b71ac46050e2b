import random

import pytest

from ccten import (
    BitMatrix,
    BitVector,
    in_row_space,
    kernel_f2,
    rank_f2,
    rref_f2,
)
from ccten.f2core import pivot_table, rank_of_ints, reduce_against


def test_bitvector_roundtrip():
    bits = [1, 0, 1, 1, 0]
    v = BitVector.from_bits(bits)
    assert v.to_bits() == bits
    assert len(v) == 5
    assert v.weight() == 3
    assert v[0] == 1 and v[1] == 0


def test_bitvector_validation():
    with pytest.raises(ValueError):
        BitVector(8, 3)  # bit outside declared length
    with pytest.raises(IndexError):
        BitVector(1, 2)[2]


def test_bitvector_xor():
    a = BitVector.from_bits([1, 1, 0])
    b = BitVector.from_bits([0, 1, 1])
    assert (a ^ b).to_bits() == [1, 0, 1]
    with pytest.raises(ValueError):
        a ^ BitVector(0, 2)


def test_bitmatrix_constructors():
    m = BitMatrix.from_rows([[1, 0], [0, 1]])
    assert m.n_rows == 2 and m.n_cols == 2
    assert m == BitMatrix.from_ints([1, 2], 2)
    assert m.row_ints() == [1, 2]
    empty = BitMatrix.from_ints([], 4)
    assert empty.n_rows == 0 and empty.n_cols == 4


def test_rank_simple():
    m = BitMatrix.from_rows([[1, 1, 0], [0, 1, 1], [1, 0, 1]])
    assert rank_f2(m) == 2  # third row is the sum of the first two
    assert rank_f2(BitMatrix.from_ints([0, 0], 3)) == 0


def test_rank_random_invariance_under_row_ops():
    rng = random.Random(5)
    for _ in range(50):
        n = rng.randint(1, 12)
        rows = [rng.getrandbits(n) for _ in range(rng.randint(1, 12))]
        r = rank_of_ints(rows)
        assert 0 <= r <= min(len(rows), n)
        # adding a row from the span never raises the rank
        combo = 0
        for row in rows:
            if rng.random() < 0.5:
                combo ^= row
        assert rank_of_ints(rows + [combo]) == r
        # row swaps and XOR updates preserve rank
        shuffled = list(rows)
        rng.shuffle(shuffled)
        if len(shuffled) >= 2:
            shuffled[0] ^= shuffled[1]
        assert rank_of_ints(shuffled) == r


def test_rref_properties():
    rng = random.Random(11)
    for _ in range(30):
        n = rng.randint(1, 10)
        m = BitMatrix.from_ints(
            [rng.getrandbits(n) for _ in range(rng.randint(1, 10))], n
        )
        red, pivot_cols = rref_f2(m)
        assert red.n_rows == rank_f2(m) == len(pivot_cols)
        assert pivot_cols == sorted(pivot_cols)
        # each pivot column has exactly one 1, in its own row
        for i, c in enumerate(pivot_cols):
            col = [row[c] for row in red.rows]
            assert sum(col) == 1 and col[i] == 1
        # same row space
        for row in red.rows:
            assert in_row_space(m, row)
        for row in m.rows:
            assert in_row_space(red, row)


def test_in_row_space():
    m = BitMatrix.from_rows([[1, 1, 0], [0, 1, 1]])
    assert in_row_space(m, BitVector.from_bits([1, 0, 1]))
    assert not in_row_space(m, BitVector.from_bits([1, 0, 0]))
    with pytest.raises(ValueError):
        in_row_space(m, BitVector(0, 2))


def test_kernel_f2():
    rng = random.Random(3)
    for _ in range(30):
        n = rng.randint(1, 10)
        m = BitMatrix.from_ints(
            [rng.getrandbits(n) for _ in range(rng.randint(1, 10))], n
        )
        ker = kernel_f2(m)
        assert ker.n_rows == n - rank_f2(m)
        if ker.n_rows:
            assert rank_f2(ker) == ker.n_rows  # basis is independent
        for k in ker.rows:
            for row in m.rows:
                assert (row.value & k.value).bit_count() % 2 == 0


def test_pivot_table_and_reduce_against():
    rows = [0b011, 0b110]
    table = pivot_table(rows)
    assert reduce_against(table, 0b101) == 0  # in the span
    assert reduce_against(table, 0b100) != 0  # not in the span
