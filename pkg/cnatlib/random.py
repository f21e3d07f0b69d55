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
"""
Random objects
==============

.. currentmodule:: cnatlib.random

This submodule provides seeded generators of random permutations and CNMs.

.. autosummary::
    random_irreducible_permutation
    random_cnm

"""
import numpy as np
from repoze.lru import lru_cache

from ._matrices import Permutation, is_irreducible, validate_cnm
from .enumeration import _leaf_columns, _row_moves, _rows_to_matrix


def _rng(seed):
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def random_irreducible_permutation(n, seed=None):
    """Uniformly random irreducible permutation of ``n`` letters.

    Args:
        n (int): number of letters
        seed (int or numpy.random.Generator): seed or generator

    Returns:
        Permutation: the permutation
    """
    if n < 1:
        raise ValueError(f"Size must be positive, got n={n}.")
    rng = _rng(seed)
    while True:
        p = Permutation(rng.permutation(n) + 1)
        if is_irreducible(p):
            return p


@lru_cache(maxsize=100000)
def _completions(leaf_cols, row, open_cols):
    """Number of ways to finish the row sweep from ``row`` with ``open_cols`` open."""
    if row == len(leaf_cols):
        return 1 if open_cols == 0 else 0
    return sum(
        _completions(leaf_cols, row + 1, open_after)
        for open_after, _ in _row_moves(row, open_cols, leaf_cols)
    )


def random_cnm(n, seed=None, p=None):
    """Random CNM of size ``n``.

    The leaf matrix is a uniformly random irreducible permutation unless ``p`` is
    given; the CNM is then uniform among those with that leaf matrix.

    Args:
        n (int): size
        seed (int or numpy.random.Generator): seed or generator
        p (Permutation): fixes the leaf matrix

    Returns:
        Cnm: the CNM
    """
    rng = _rng(seed)
    if p is None:
        p = random_irreducible_permutation(n, rng)
    elif p.n != n:
        raise ValueError(f"Permutation {p} does not have {n} letters.")
    elif not is_irreducible(p):
        raise ValueError(f"{p} is reducible and has no CNM.")

    leaf_cols = _leaf_columns(p)
    rows, open_cols = [], 0
    for row in range(p.n):
        moves = list(_row_moves(row, open_cols, leaf_cols))
        weights = np.array(
            [_completions(leaf_cols, row + 1, after) for after, _ in moves], dtype=float
        )
        pick = rng.choice(len(moves), p=weights / weights.sum())
        open_cols, content = moves[pick]
        rows.append(content)
    return validate_cnm(_rows_to_matrix(rows, p.n))
