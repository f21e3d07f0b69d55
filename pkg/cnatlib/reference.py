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
Reference implementations
=========================

.. currentmodule:: cnatlib.reference

This submodule provides pure-Python reference generators that share no search
logic with :mod:`cnatlib.enumeration`. They are slow, and serve as oracles.

Reference functions
-------------------

.. autosummary::
    brute_force_cnms
    labeled_trees
    brute_force_ud_ftts

Details
^^^^^^^
"""
from itertools import product

import numpy as np
from sympy.combinatorics.prufer import Prufer

from ._matrices import validate_cnm
from .bijections.tiered_trees import FullyTieredTree, ftt_weight

MAX_BRUTE_FORCE_SIZE = 5


def brute_force_cnms(n):
    r"""Returns every CNM of size ``n`` by filling the matrix cell by cell.

    Cells are decided in row-major order. A 1 is placed only where exactly one of
    "a vertex to the left" and "a vertex above" holds, and never below a column's
    leaf. When a row is complete its last vertex becomes the leaf of its column
    and every other vertex of the row still needs a vertex further down.

    Args:
        n (int): size, at most 5

    Returns:
        list[Cnm]: the CNMs in lexicographic order of their row-major bit strings
    """
    if n < 1:
        raise ValueError(f"Size must be positive, got n={n}.")
    if n > MAX_BRUTE_FORCE_SIZE:
        raise ValueError(f"Brute-force generation is limited to n <= {MAX_BRUTE_FORCE_SIZE}.")

    M = np.zeros((n, n), dtype=np.int8)
    used = [False] * n
    closed = [False] * n
    pending = [False] * n
    found = []

    def fill(cell):
        if cell == n * n:
            if all(used) and not any(pending):
                found.append(validate_cnm(M.copy()))
            return

        i, j = divmod(cell, n)
        left = bool(M[i, :j].any())
        bits = (1,) if cell == 0 else (0, 1)

        for bit in bits:
            if bit and cell and (closed[j] or left == used[j]):
                continue
            M[i, j] = bit
            if j == n - 1:
                end_row(i, cell)
            else:
                fill(cell + 1)
            M[i, j] = 0

    def end_row(i, cell):
        row = [int(c) for c in np.nonzero(M[i])[0]]
        if not row:
            return
        saved = (used[:], closed[:], pending[:])
        for c in row:
            used[c] = True
            pending[c] = True
        pending[row[-1]] = False
        closed[row[-1]] = True
        fill(cell + 1)
        used[:], closed[:], pending[:] = saved

    fill(0)
    return sorted(found, key=lambda c: c.key)


def labeled_trees(n):
    """Generates the edge lists of all :math:`n^{n-2}` labelled trees on ``1..n`` via Prüfer codes.

    Args:
        n (int): number of vertices

    Yields:
        list[tuple[int, int]]: the edges, 1-based
    """
    if n < 1:
        raise ValueError(f"Number of vertices must be positive, got n={n}.")
    if n == 1:
        yield []
        return
    if n == 2:
        yield [(1, 2)]
        return
    for code in product(range(n), repeat=n - 2):
        yield [(u + 1, v + 1) for u, v in Prufer.to_tree(list(code))]


def brute_force_ud_ftts(n):
    """Returns every upper-diagonal FTT on ``n`` vertices by filtering all labelled trees.

    With the identity tiering every labelled tree is fully tiered, so only the
    weight has to be checked.

    Args:
        n (int): number of vertices

    Returns:
        list[FullyTieredTree]: trees with identity tiering and weight zero
    """
    trees = (FullyTieredTree(n, edges) for edges in labeled_trees(n))
    return [t for t in trees if ftt_weight(t) == 0]
