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
Upper-diagonal CNMs and tree-like tableaux.

Deleting the leaves of an upper-diagonal CNM of size :math:`n`, then every row and
column left without a vertex, gives a tree-like tableau of size :math:`n-1`. For each
:math:`i` exactly one of row :math:`i` and column :math:`n+1-i` survives, so the
tableau's boundary, read as a word in rows and columns, tells where to put the
deleted lines back.
"""
import numpy as np

from .._matrices import InvariantError, is_upper_diagonal, validate_cnm
from .tableaux import TreeLikeTableau, occupied_corners


def second_diagonal(c):
    """Returns the entries ``(1, n-1), (2, n-2), ..., (n-1, 1)`` of a CNM in that order."""
    n = c.n
    return tuple(int(c.cells[i - 1, n - i - 1]) for i in range(1, n))


def leading_zero_run(bits):
    """Number of zeros before the first one; the length of ``bits`` if there is no one."""
    for k, bit in enumerate(bits):
        if bit:
            return k
    return len(bits)


def _kept_lines(c):
    n = c.n
    above = np.array(
        [[c.cells[i, j] if i + j < n - 1 else 0 for j in range(n)] for i in range(n)], dtype=np.int8
    )
    rows = [i for i in range(n) if above[i].any()]
    cols = [j for j in range(n) if above[:, j].any()]
    return above, rows, cols


def udcnm_to_tlt(c):
    """Maps an upper-diagonal CNM of size ``n`` to a tree-like tableau of size ``n - 1``.

    The pointed cells are exactly the internal vertices, with empty rows and
    columns removed.

    Args:
        c (Cnm): an upper-diagonal CNM with ``n >= 2``

    Returns:
        TreeLikeTableau: the tableau
    """
    if not is_upper_diagonal(c):
        raise ValueError("CNM is not upper-diagonal.")
    if c.n < 2:
        raise ValueError("Upper-diagonal CNMs of size 1 have no tableau.")

    n = c.n
    above, rows, cols = _kept_lines(c)
    shape = [sum(1 for j in cols if i + j < n - 1) for i in rows]
    pointed = [
        (a + 1, b + 1)
        for a, i in enumerate(rows)
        for b, j in enumerate(cols)
        if above[i, j]
    ]
    return TreeLikeTableau(shape, pointed)


def _boundary_word(t):
    """Row/column word of length ``rows + columns``: ``"R"`` where a CNM row survives."""
    word = []
    a = b = 0
    for _ in range(t.rows + t.columns):
        if a < t.rows and t.shape[a] == t.columns - b:
            word.append("R")
            a += 1
        else:
            word.append("C")
            b += 1
    return word


def tlt_to_udcnm(t):
    """Maps a tree-like tableau of size ``n - 1`` back to its upper-diagonal CNM of size ``n``.

    Args:
        t (TreeLikeTableau): the tableau

    Returns:
        Cnm: the upper-diagonal CNM

    Raises:
        InvariantError: if the rebuilt matrix is not a CNM
    """
    word = _boundary_word(t)
    n = len(word)

    row_of = [i for i, x in enumerate(word, start=1) if x == "R"]
    col_of = sorted(n + 1 - i for i, x in enumerate(word, start=1) if x == "C")

    M = np.zeros((n, n), dtype=np.int8)
    for i in range(1, n + 1):
        M[i - 1, n - i] = 1
    for a, b in t.pointed:
        M[row_of[a - 1] - 1, col_of[b - 1] - 1] = 1

    try:
        c = validate_cnm(M)
    except ValueError as e:
        raise InvariantError(f"tableau {t!r} did not rebuild to a CNM: {e}") from e
    return c


def corner_correspondence(c):
    """Maps every second-diagonal vertex of an upper-diagonal CNM to its tableau cell.

    The image is exactly the set of occupied corners of :func:`udcnm_to_tlt`.

    Args:
        c (Cnm): an upper-diagonal CNM with ``n >= 2``

    Returns:
        dict[tuple[int, int], tuple[int, int]]: second-diagonal cell to tableau cell
    """
    if not is_upper_diagonal(c):
        raise ValueError("CNM is not upper-diagonal.")
    n = c.n
    _, rows, cols = _kept_lines(c)
    out = {}
    for i, bit in enumerate(second_diagonal(c), start=1):
        if bit:
            out[(i, n - i)] = (rows.index(i - 1) + 1, cols.index(n - i - 1) + 1)
    return out


def count_occupied_corners(c):
    """Number of occupied corners of the tableau of an upper-diagonal CNM."""
    return len(occupied_corners(udcnm_to_tlt(c)))
