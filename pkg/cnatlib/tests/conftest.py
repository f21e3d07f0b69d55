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
"""Shared fixtures for the cnatlib tests"""
# pylint: disable=redefined-outer-name
import pytest

from cnatlib import parse_matrix, validate_cnm

# three CNMs share this leaf matrix; the permutation is (13)(254)
SIZE5_ROWS = ["11100", "10010", "10000", "01001", "01000"]

# reduces to upper-diagonal form with two row swaps followed by four column swaps
SWAP_EXAMPLE_ROWS = ["101001", "110000", "100100", "100000", "001010", "001000"]

# upper-diagonal CNM of size 7 and its tree-like tableau
UD7_ROWS = ["1000101", "1010010", "0000100", "0011000", "0010000", "1100000", "1000000"]
UD7_TABLEAU = ["*.*", "**.", ".*", "*"]


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run slow tests")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: size 8 counts and long random runs, skipped without --runslow")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


def _cnm(rows):
    return validate_cnm(parse_matrix("\n".join(rows) + "\n"))


@pytest.fixture
def size5_cnm():
    """A 5x5 CNM whose leaf matrix carries three CNMs"""
    return _cnm(SIZE5_ROWS)


@pytest.fixture
def swap_example():
    """A 6x6 CNM whose reduction uses both row and column swaps"""
    return _cnm(SWAP_EXAMPLE_ROWS)


@pytest.fixture
def ud7_cnm():
    """An upper-diagonal CNM of size 7"""
    return _cnm(UD7_ROWS)


@pytest.fixture
def matrix_file(tmp_path):
    """Writes matrix rows to a file and returns its path"""

    def _wrapper(rows, name="m.txt"):
        path = tmp_path / name
        path.write_text("\n".join(rows) + "\n")
        return str(path)

    return _wrapper
