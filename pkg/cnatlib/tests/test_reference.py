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
"""Tests for the reference generators"""
# pylint: disable=no-self-use
from math import factorial

import pytest

from cnatlib.bijections import is_ud_ftt, permutation_to_udftt
from cnatlib.enumeration import all_cnms
from cnatlib.fixtures import data_table
from cnatlib.reference import brute_force_cnms, brute_force_ud_ftts, labeled_trees
from cnatlib import all_permutations


class TestBruteForce:
    """Tests for the brute-force CNM generator"""

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_counts(self, n):
        """The brute force finds T(n) matrices"""
        assert len(brute_force_cnms(n)) == data_table()[n][0]

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_same_set(self, n):
        """The brute force and the row sweep produce the same matrices"""
        brute = [c.key for c in brute_force_cnms(n)]
        swept = sorted(c.key for c in all_cnms(n))
        assert brute == swept

    def test_limit(self):
        """Sizes above five are refused"""
        with pytest.raises(ValueError):
            brute_force_cnms(6)


class TestTrees:
    """Tests for the labelled tree generators"""

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_cayley(self, n):
        """There are n^(n-2) labelled trees"""
        trees = list(labeled_trees(n))
        assert len(trees) == (n ** (n - 2) if n > 1 else 1)
        assert len({frozenset(map(tuple, map(sorted, t))) for t in trees}) == len(trees)

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_ud_ftts(self, n):
        """The brute-force upper-diagonal FTTs are the images of all permutations"""
        brute = set(brute_force_ud_ftts(n))
        assert len(brute) == factorial(n - 1)
        assert brute == {permutation_to_udftt(p) for p in all_permutations(n - 1)}
        assert all(is_ud_ftt(t) for t in brute)
