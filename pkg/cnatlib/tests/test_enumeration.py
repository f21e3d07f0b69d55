# Copyright 2024 The cnatlib authors.

# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at

#     http://www.apache.org/licenses/LICENSE-2.0

# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Tests for the enumeration and counting functions"""
# pylint: disable=no-self-use
import io
from math import factorial

import pytest

from cnatlib import Permutation, associated_permutation, parse_matrix
from cnatlib import enumeration
from cnatlib.enumeration import (
    CountTable,
    all_cnms,
    b_table,
    construction_step,
    constructive_cnats,
    count_all_cnats,
    count_cnats_with_leaf_matrix,
    count_table,
    det_parity_counts,
    enumerate_cnats_with_leaf_matrix,
    extend_leaf_matrix,
    irreducible_permutations,
    lower_bound_holds,
    max_cnat_permutations,
    resolve_jobs,
    write_cnms,
)
from cnatlib.fixtures import b_table as golden_b_table
from cnatlib.fixtures import data_table

SIZE5 = Permutation([3, 5, 1, 2, 4])


class TestFixedLeafMatrix:
    """Tests for the CNMs sharing one leaf matrix"""

    def test_size5(self, size5_cnm):
        """Three CNMs share the leaf matrix (13)(254)"""
        cnms = enumerate_cnats_with_leaf_matrix(SIZE5)
        assert len(cnms) == 3
        assert size5_cnm in cnms
        assert all(associated_permutation(c) == SIZE5 for c in cnms)

    def test_count_matches(self):
        """The counting pass agrees with the enumeration"""
        for p in irreducible_permutations(5):
            assert count_cnats_with_leaf_matrix(p) == len(enumerate_cnats_with_leaf_matrix(p))

    def test_reducible(self):
        """A reducible permutation has no CNM"""
        p = Permutation([2, 1, 3])
        assert enumerate_cnats_with_leaf_matrix(p) == []
        assert count_cnats_with_leaf_matrix(p) == 0

    def test_size_one(self):
        """The only CNM of size one is the root"""
        (c,) = enumerate_cnats_with_leaf_matrix(Permutation([1]))
        assert c.key == "1"

    @pytest.mark.parametrize("n, expected", [(2, 1), (3, 2), (4, 6), (5, 24), (6, 120)])
    def test_reversal(self, n, expected):
        """The anti-diagonal leaf matrix carries (n-1)! CNMs"""
        assert count_cnats_with_leaf_matrix(Permutation.reversal(n)) == expected

    def test_leaf_matrix_preserved(self):
        """Every CNM has the requested leaf matrix"""
        for p in irreducible_permutations(4):
            for c in enumerate_cnats_with_leaf_matrix(p):
                assert associated_permutation(c) == p


class TestConstruction:
    """Tests for the constructive existence argument"""

    def test_step(self):
        """The rightmost and bottom-most leaves meet at p"""
        step = construction_step(SIZE5.cells())
        assert step.l_x == (4, 5)
        assert step.l_y == (5, 2)
        assert step.p == (4, 2)
        assert step.enclosed == ()

    def test_step_single_leaf(self):
        """No step exists once a single leaf is left"""
        assert construction_step([(1, 1)]) is None

    def test_size5_subset(self):
        """The construction reaches two of the three CNMs"""
        reached = [c for c, _ in constructive_cnats(SIZE5)]
        assert len(reached) == 2
        assert set(reached) <= set(enumerate_cnats_with_leaf_matrix(SIZE5))

    def test_steps_recorded(self):
        """Each reached CNM records its steps with one choice per enclosed leaf"""
        for c, steps in constructive_cnats(SIZE5):
            assert 1 <= len(steps) <= c.n - 1
            assert steps[0].p == (4, 2)
            assert all(len(s.choices) == len(s.enclosed) for s in steps)
            assert all(c.kind(s.p) == "internal" for s in steps)

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_existence(self, n):
        """Every irreducible permutation has a constructed CNM"""
        for p in irreducible_permutations(n):
            reached = {c for c, _ in constructive_cnats(p)}
            assert reached
            assert reached <= set(enumerate_cnats_with_leaf_matrix(p))


class TestExtension:
    """Tests for the size-increasing extensions"""

    def test_reversal_2(self):
        """The 2x2 reversal extends to 231 and 312"""
        first, second = extend_leaf_matrix(Permutation([2, 1]))
        assert first == Permutation([2, 3, 1])
        assert second == Permutation([3, 1, 2])

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_counts_preserved(self, n):
        """Both extensions carry as many CNMs as the original"""
        for p in irreducible_permutations(n):
            k = count_cnats_with_leaf_matrix(p)
            first, second = extend_leaf_matrix(p)
            assert first != second
            assert count_cnats_with_leaf_matrix(first) == k
            assert count_cnats_with_leaf_matrix(second) == k

    def test_reducible(self):
        """Reducible permutations cannot be extended"""
        with pytest.raises(ValueError):
            extend_leaf_matrix(Permutation([1, 2]))


class TestCountTable:
    """Tests for the aggregated counts"""

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 7])
    def test_data_table(self, n):
        """T(n) and the determinant split match the golden table"""
        T, A, B = data_table()[n]
        table = count_table(n, jobs=1)
        assert table.total == T
        assert (table.det_plus, table.det_minus) == (A, B)

    @pytest.mark.slow
    def test_data_table_slow(self):
        """T(8), its determinant split and b(8, k)"""
        T, A, B = data_table()[8]
        table = count_table(8, force=True)
        assert (table.total, table.det_plus, table.det_minus) == (T, A, B)
        assert all(table.b(k) == b for k, b in golden_b_table()[8].items())

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7])
    def test_b_table(self, n):
        """b(n, k) matches the golden table"""
        table = b_table(n, jobs=1)
        for k, b in golden_b_table()[n].items():
            assert table.b(k) == b

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_weighted_sum(self, n):
        """Summing k b(n, k) gives T(n)"""
        table = count_table(n, jobs=1)
        assert sum(k * b for k, b in table.by_k.items()) == table.total
        assert table.irreducible == sum(1 for _ in irreducible_permutations(n))

    def test_against_stream(self):
        """The counts agree with the streamed CNMs"""
        assert count_all_cnats(4, jobs=1) == sum(1 for _ in all_cnms(4))

    def test_det_parity(self):
        """A - B is reported with A and B"""
        assert det_parity_counts(6, jobs=1) == (4728, 4732, -4)

    def test_sharding_is_invariant(self):
        """Splitting the work over shards does not change the table"""
        serial = count_table(6, jobs=1)
        sharded = count_table(6, jobs=3, scheduler="synchronous")
        assert serial == sharded

    def test_merge(self):
        """Merging is commutative"""
        a = enumeration.count_shard(5, 0, 2)
        b = enumeration.count_shard(5, 1, 2)
        assert a + b == b + a == count_table(5, jobs=1)

    def test_merge_sizes(self):
        """Tables of different sizes cannot be merged"""
        with pytest.raises(ValueError):
            _ = CountTable(3) + CountTable(4)

    def test_to_rows(self):
        """Rows include zero entries up to k_max"""
        rows = count_table(4, jobs=1).to_rows()
        assert rows == [(4, 1, 4), (4, 2, 4), (4, 3, 1), (4, 4, 3), (4, 5, 0), (4, 6, 1)]

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_lower_bound(self, n):
        """b(n+1, k) >= 2 b(n, k)"""
        assert lower_bound_holds(count_table(n, jobs=1), count_table(n + 1, jobs=1))

    def test_max(self):
        """The most CNMs on one leaf matrix of size four is six, on a single permutation"""
        best, winners = max_cnat_permutations(4)
        assert best == 6
        assert len(winners) == 1

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_max_is_reversal(self, n):
        """Only the reversal attains (n-1)! CNMs"""
        best, winners = max_cnat_permutations(n)
        assert best == factorial(n - 1)
        assert winners == [Permutation.reversal(n)]

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_second_column_shift(self, n):
        """b(n, 2) = b(n+1, 3)"""
        assert count_table(n, jobs=1).b(2) == count_table(n + 1, jobs=1).b(3)

    def test_warning(self, monkeypatch):
        """Sizes above the feasible range warn unless forced"""
        monkeypatch.setattr(enumeration, "FEASIBLE_COUNT_SIZE", 2)
        with pytest.warns(UserWarning):
            count_table(3, jobs=1)

    def test_invalid_size(self):
        """Sizes must be positive"""
        with pytest.raises(ValueError):
            count_table(0)


class TestJobs:
    """Tests for the worker count"""

    def test_explicit(self):
        """An explicit count wins"""
        assert resolve_jobs(3) == 3

    def test_environment(self, monkeypatch):
        """The environment variable is used when no count is given"""
        monkeypatch.setenv("CNATLIB_JOBS", "2")
        assert resolve_jobs() == 2

    def test_invalid(self):
        """Counts must be positive"""
        with pytest.raises(ValueError):
            resolve_jobs(0)


class TestWrite:
    """Tests for streaming CNMs"""

    def test_blocks(self):
        """Matrices are separated by blank lines"""
        stream = io.StringIO()
        count = write_cnms(all_cnms(3), stream)
        assert count == 4
        blocks = stream.getvalue().split("\n\n")
        assert len(blocks) == 4
        assert all(parse_matrix(b).shape == (3, 3) for b in blocks)
