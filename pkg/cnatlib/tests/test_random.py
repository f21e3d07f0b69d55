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
"""Tests for the random generators"""
# pylint: disable=no-self-use
from collections import Counter

import numpy as np
import pytest

from cnatlib import Permutation, associated_permutation, is_cnm, is_irreducible
from cnatlib.enumeration import enumerate_cnats_with_leaf_matrix
from cnatlib.random import random_cnm, random_irreducible_permutation


class TestRandomPermutation:
    """Tests for random irreducible permutations"""

    @pytest.mark.parametrize("n", [1, 2, 5, 9])
    def test_irreducible(self, n):
        """Samples are irreducible permutations of the right size"""
        for seed in range(20):
            p = random_irreducible_permutation(n, seed=seed)
            assert p.n == n
            assert is_irreducible(p)

    def test_seeded(self):
        """The same seed gives the same permutation"""
        assert random_irreducible_permutation(8, seed=3) == random_irreducible_permutation(8, seed=3)

    def test_generator(self):
        """A numpy generator can be passed instead of a seed"""
        rng = np.random.default_rng(5)
        assert is_irreducible(random_irreducible_permutation(6, seed=rng))

    def test_invalid_size(self):
        """Sizes must be positive"""
        with pytest.raises(ValueError):
            random_irreducible_permutation(0)


class TestRandomCnm:
    """Tests for random CNMs"""

    @pytest.mark.parametrize("n", [1, 2, 4, 7, 10])
    def test_valid(self, n):
        """Samples are CNMs of the right size"""
        for seed in range(10):
            c = random_cnm(n, seed=seed)
            assert c.n == n
            assert is_cnm(c.cells)

    def test_fixed_leaf_matrix(self):
        """A given permutation fixes the leaf matrix"""
        p = Permutation([3, 5, 1, 2, 4])
        c = random_cnm(5, seed=1, p=p)
        assert associated_permutation(c) == p

    def test_reducible(self):
        """A reducible permutation has no CNM to sample"""
        with pytest.raises(ValueError):
            random_cnm(3, p=Permutation([1, 3, 2]))

    def test_wrong_size(self):
        """The permutation must have n letters"""
        with pytest.raises(ValueError):
            random_cnm(4, p=Permutation([3, 5, 1, 2, 4]))

    def test_covers_all(self):
        """Sampling on a fixed leaf matrix reaches every CNM roughly uniformly"""
        p = Permutation.reversal(4)
        counts = Counter(random_cnm(4, seed=seed, p=p) for seed in range(600))
        assert set(counts) == set(enumerate_cnats_with_leaf_matrix(p))
        assert min(counts.values()) > 50
