import random

import pytest
from hypothesis import given, strategies as st

from sdcodes.gf2 import (
    BitMatrix,
    BitVector,
    dot,
    kernel_basis,
    mu,
    rank,
    rref,
    weight,
)

from oracles import o_dot, o_mu, o_orthogonal_all, o_rank, o_rref, o_weight, to_bits


@st.composite
def bitvector(draw, max_length=96):
    n = draw(st.integers(1, max_length))
    return BitVector(n, draw(st.integers(0, (1 << n) - 1)))


@st.composite
def bitvector_pair(draw, max_length=96):
    n = draw(st.integers(1, max_length))
    return (
        BitVector(n, draw(st.integers(0, (1 << n) - 1))),
        BitVector(n, draw(st.integers(0, (1 << n) - 1))),
    )


@st.composite
def bitvector_triple(draw, max_length=96):
    n = draw(st.integers(1, max_length))
    return tuple(
        BitVector(n, draw(st.integers(0, (1 << n) - 1))) for _ in range(3)
    )


@st.composite
def bitmatrix(draw, max_length=24, max_rows=8):
    n = draw(st.integers(1, max_length))
    nrows = draw(st.integers(0, max_rows))
    rows = [BitVector(n, draw(st.integers(0, (1 << n) - 1))) for _ in range(nrows)]
    return BitMatrix(rows, ncols=n)


class TestBitVector:
    def test_construction_bounds(self):
        with pytest.raises(ValueError):
            BitVector(0, 0)
        with pytest.raises(ValueError):
            BitVector(4, 16)
        with pytest.raises(ValueError):
            BitVector(4, -1)
        with pytest.raises(ValueError):
            BitVector(1 << 17, 0)

    def test_factories(self):
        assert BitVector.zeros(5).to01() == "00000"
        assert BitVector.ones(3).to01() == "111"
        v = BitVector.from_string("10110")
        assert v.to01() == "10110"
        assert v.support() == (0, 2, 3)
        assert BitVector.from_support(5, [0, 2, 3]) == v
        with pytest.raises(ValueError):
            BitVector.from_string("10a")
        with pytest.raises(ValueError):
            BitVector.from_support(3, [5])

    def test_indexing_and_iteration(self):
        v = BitVector.from_string("0110")
        assert [v[i] for i in range(4)] == [0, 1, 1, 0]
        assert len(v) == 4

    def test_xor_and_and(self):
        a = BitVector.from_string("1100")
        b = BitVector.from_string("0110")
        assert (a ^ b).to01() == "1010"
        assert (a + b) == (a ^ b)
        assert (a & b).to01() == "0100"
        with pytest.raises(ValueError, match="length mismatch"):
            a ^ BitVector.from_string("110")

    def test_hash_and_eq(self):
        a = BitVector.from_string("101")
        assert a == BitVector(3, 0b101)
        assert a != BitVector(4, 0b101)
        assert len({a, BitVector(3, 0b101), BitVector(3, 0b001)}) == 2

    @given(bitvector())
    def test_weight_matches_oracle(self, v):
        assert weight(v) == v.weight() == o_weight(to_bits(v))

    @given(bitvector_pair())
    def test_mu_and_dot_match_oracle(self, pair):
        a, b = pair
        assert mu(a, b) == o_mu(to_bits(a), to_bits(b))
        assert dot(a, b) == o_dot(to_bits(a), to_bits(b))

    @given(bitvector_pair())
    def test_weight_sum_formula(self, pair):
        a, b = pair
        assert weight(a + b) == weight(a) + weight(b) - 2 * mu(a, b)

    @given(bitvector_triple())
    def test_overlap_addition_identity(self, triple):
        a, b, c = triple
        assert mu(a + b, c) == mu(b, c) + mu(a, b + c) - mu(a, b)

    @given(bitvector())
    def test_support_round_trip(self, v):
        assert BitVector.from_support(v.length, v.support()) == v


class TestBitMatrix:
    def test_from_strings_and_identity(self):
        m = BitMatrix.from_strings(["110", "011"])
        assert m.nrows == 2 and m.ncols == 3
        assert BitMatrix.identity(3).rows == (
            BitVector.from_string("100"),
            BitVector.from_string("010"),
            BitVector.from_string("001"),
        )

    def test_ragged_rejected(self):
        with pytest.raises(ValueError):
            BitMatrix.from_strings(["110", "01"])

    def test_empty_needs_ncols(self):
        with pytest.raises(ValueError):
            BitMatrix([])
        m = BitMatrix([], ncols=4)
        assert m.nrows == 0 and m.ncols == 4

    @given(bitmatrix())
    def test_rank_matches_oracle(self, m):
        assert rank(m) == o_rank([to_bits(r) for r in m.rows])

    @given(bitmatrix())
    def test_rref_idempotent_and_canonical(self, m):
        r, rk, pivots = rref(m)
        assert rk == r.nrows == len(pivots)
        assert list(pivots) == sorted(pivots)
        r2, rk2, pivots2 = rref(r)
        assert r2 == r and rk2 == rk and pivots2 == pivots

    @given(bitmatrix())
    def test_rref_matches_oracle(self, m):
        r, _, _ = rref(m)
        expected = o_rref([to_bits(row) for row in m.rows])
        assert [to_bits(row) for row in r.rows] == expected

    @given(bitmatrix())
    def test_kernel_is_orthogonal_complement(self, m):
        kb = kernel_basis(m)
        assert rank(m) + kb.nrows == m.ncols
        assert rank(kb) == kb.nrows
        original = [to_bits(r) for r in m.rows]
        for v in kb.rows:
            assert o_orthogonal_all(original, to_bits(v))

    def test_kernel_of_identity_is_empty(self):
        assert kernel_basis(BitMatrix.identity(5)).nrows == 0

    def test_kernel_of_zero_map_is_everything(self):
        m = BitMatrix([BitVector.zeros(4)], ncols=4)
        assert kernel_basis(m).nrows == 4


def test_randomized_rref_row_space_preserved():
    rng = random.Random(5)
    for _ in range(50):
        n = rng.randrange(1, 20)
        rows = [BitVector(n, rng.getrandbits(n)) for _ in range(rng.randrange(1, 7))]
        m = BitMatrix(rows, ncols=n)
        r, _, _ = rref(m)
        original = [to_bits(v) for v in rows]
        reduced = [to_bits(v) for v in r.rows]
        assert o_rank(original) == o_rank(reduced)
        assert o_rank(original + reduced) == o_rank(original)
