"""Packed GF(2) linear algebra and the rank certificates."""

import math
import random

import pytest

from hypercover import (
    GF2Matrix,
    SubsetIndex,
    adjacency_cube_matrix,
    disjointness_matrix,
    disjointness_matrix_upto,
    gf2_rank,
    matrix_from_text,
    matrix_to_text,
    partition_lower_bound,
    pi_partition,
    rank_bound_from_cover,
)


class TestRank:
    def test_zero_matrix(self):
        assert gf2_rank(GF2Matrix(4, 4, (0, 0, 0, 0))) == 0

    def test_identity(self):
        assert gf2_rank(GF2Matrix(5, 5, tuple(1 << i for i in range(5)))) == 5

    def test_dependent_rows(self):
        assert gf2_rank(GF2Matrix(3, 3, (0b011, 0b101, 0b110))) == 2

    def test_permutation_invariance(self):
        rng = random.Random(7)
        m = disjointness_matrix(5, 2)
        base = gf2_rank(m)
        rows = list(m.data)
        for _ in range(5):
            rng.shuffle(rows)
            perm = list(range(m.cols))
            rng.shuffle(perm)
            shuffled = tuple(
                sum(((row >> j) & 1) << perm[j] for j in range(m.cols))
                for row in rows
            )
            assert gf2_rank(GF2Matrix(m.rows, m.cols, shuffled)) == base

    def test_transpose_preserves_rank(self):
        m = adjacency_cube_matrix(4, 1)
        assert gf2_rank(m.transpose()) == gf2_rank(m)


class TestSubsetIndex:
    def test_colex_order_small(self):
        idx = SubsetIndex(4, 2)
        assert list(idx.subsets()) == [
            (0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3),
        ]

    @pytest.mark.parametrize("n,k", [(5, 2), (6, 3), (7, 1), (4, 4)])
    def test_bijection(self, n, k):
        idx = SubsetIndex(n, k)
        seen = set()
        for i in range(idx.size):
            s = idx.unrank(i)
            assert idx.rank(s) == i
            seen.add(s)
        assert len(seen) == math.comb(n, k)

    def test_rank_rejects_bad_input(self):
        idx = SubsetIndex(5, 2)
        with pytest.raises(ValueError):
            idx.rank((1, 1))
        with pytest.raises(ValueError):
            idx.rank((3, 5))


class TestDisjointnessMatrix:
    def test_d21(self):
        m = disjointness_matrix(2, 1)
        assert [[m.entry(i, j) for j in range(2)] for i in range(2)] == [[0, 1], [1, 0]]
        assert gf2_rank(m) == 2

    def test_d42_full_rank(self):
        m = disjointness_matrix(4, 2)
        assert m.rows == 6
        assert gf2_rank(m) == 6

    def test_d63_full_rank(self):
        m = disjointness_matrix(6, 3)
        assert m.rows == 20
        assert gf2_rank(m) == 20

    def test_exact_size_not_always_full(self):
        # the exact-k matrix is only a permutation matrix when n = 2k; for
        # n = 5, k = 2 it is the Petersen adjacency, singular over GF(2)
        assert gf2_rank(disjointness_matrix(5, 2)) < 10

    @pytest.mark.parametrize("n", range(1, 9))
    def test_upto_full_rank(self, n):
        for k in range(0, min(3, n) + 1):
            m = disjointness_matrix_upto(n, k)
            assert m.rows == sum(math.comb(n, i) for i in range(k + 1))
            assert gf2_rank(m) == m.rows

    def test_symmetry(self):
        m = disjointness_matrix(5, 2)
        for i in range(m.rows):
            for j in range(m.cols):
                assert m.entry(i, j) == m.entry(j, i)


class TestAdjacencyCube:
    def test_r4_m1_structure(self):
        m = adjacency_cube_matrix(4, 1)
        assert m.rows == 10
        idx = SubsetIndex(5, 2)
        i = idx.rank((0, 1))
        j = idx.rank((2, 3))
        assert m.entry(i, j) == 1  # union is the unique edge {0,1,2,3}
        assert m.entry(i, idx.rank((1, 2))) == 0  # overlapping subsets

    def test_r4_m1_rank(self):
        assert gf2_rank(adjacency_cube_matrix(4, 1)) >= 6

    def test_symmetric_and_zero_when_subsets_intersect(self):
        m = adjacency_cube_matrix(4, 1)
        idx = SubsetIndex(5, 2)
        subs = list(idx.subsets())
        for i, a in enumerate(subs):
            for j, b in enumerate(subs):
                assert m.entry(i, j) == m.entry(j, i)
                if set(a) & set(b):
                    assert m.entry(i, j) == 0

    def test_odd_r_rejected(self):
        with pytest.raises(ValueError):
            adjacency_cube_matrix(3, 1)
        with pytest.raises(ValueError):
            adjacency_cube_matrix(2, 1)


class TestPartitionBounds:
    def test_even_values(self):
        assert partition_lower_bound(4, 1) == 1
        assert partition_lower_bound(4, 2) == 8

    def test_odd_uses_r_minus_one(self):
        assert partition_lower_bound(3, 2) == 4
        assert partition_lower_bound(3, 1) == 1

    def test_rank_budget(self):
        assert rank_bound_from_cover(1, 4) == 6
        assert rank_bound_from_cover(0, 4) == 0
        assert rank_bound_from_cover(8, 4) == 48
        with pytest.raises(ValueError):
            rank_bound_from_cover(1, 3)

    def test_partition_rank_subadditivity(self):
        # any d-block partition forces adjacency rank <= d * C(r, r/2)
        for m in (1, 2):
            rank = gf2_rank(adjacency_cube_matrix(4, m))
            blocks = len(pi_partition(4, m).blocks)
            assert rank <= rank_bound_from_cover(blocks, 4)


class TestDumpFormat:
    def test_round_trip(self):
        m = disjointness_matrix(5, 2)
        text = matrix_to_text(m)
        head = text.splitlines()[0]
        assert head == "10 10"
        back = matrix_from_text(text)
        assert back == m

    def test_fixed_width_rows(self):
        m = GF2Matrix(2, 9, (1, 256))
        lines = matrix_to_text(m).splitlines()
        assert lines[1:] == ["001", "100"]
