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
"""Tests for the golden fixture files"""
# pylint: disable=no-self-use
import pytest

from cnatlib import fixtures


class TestFixtures:
    """Tests for loading and cross-checking the fixtures"""

    @pytest.mark.parametrize("name", ["data_table", "b_table", "binomial_transform"])
    def test_provenance(self, name):
        """Every fixture records where its values come from"""
        fixture = fixtures.load(name)
        assert any(line.startswith("source:") for line in fixture.provenance)
        reproduce = [line for line in fixture.provenance if line.startswith("reproduce:")]
        assert len(reproduce) == 1 and "cnat " in reproduce[0]
        assert fixture.rows

    def test_missing(self):
        """Unknown fixtures raise"""
        with pytest.raises(OSError):
            fixtures.load("no_such_table")

    def test_data_table(self):
        """T = A + B in every row"""
        table = fixtures.data_table()
        assert sorted(table) == list(range(1, 9))
        assert all(T == A + B for T, A, B in table.values())
        assert table[8] == (10643745, 5321889, 5321856)

    def test_b_table_consistent(self):
        """The published b(n, k) never exceed the number of irreducible permutations"""
        irreducible = {2: 1, 3: 3, 4: 13, 5: 71, 6: 461, 7: 3447, 8: 29093}
        for n, row in fixtures.b_table().items():
            assert sum(row.values()) <= irreducible[n]
            assert sum(k * b for k, b in row.items()) <= fixtures.data_table()[n][0]

    def test_unique_leaf_column(self):
        """b(n, 1) = 2^(n-2)"""
        assert all(row[1] == 2 ** (n - 2) for n, row in fixtures.b_table().items())

    def test_transform_targets(self):
        """The transformed columns are the recorded sequences"""
        targets = fixtures.binomial_transform_targets()
        assert targets[2] == list(range(7))
        assert targets[4] == [m * m + 2 * m for m in range(6)]
        assert targets[6] == [m * m for m in range(6)]
        assert targets[7] == [2 * m for m in range(5)]
