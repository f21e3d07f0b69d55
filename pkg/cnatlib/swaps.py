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
Row and column swaps
====================

.. currentmodule:: cnatlib.swaps

This submodule reduces any CNM to an upper-diagonal one by a sequence of row and
column swaps, each of which produces a valid CNM.

The reduction has three phases:

1. the row holding the leaf of column 1 is moved to the bottom by adjacent row swaps;
2. the subtrees hanging off the right of the internal vertices of column 1 use
   pairwise disjoint rows and columns, so each is flattened to a smaller CNM,
   reduced recursively, and its swaps are applied to the corresponding lines;
3. the columns are interleaved by adjacent swaps so that the leaf of row
   :math:`t` lands in column :math:`n+1-t`, for :math:`t=n-1,\\dots,1`.

Neither row 1 nor column 1 of any subproblem is ever moved. Every swap changes
the sign of the associated permutation.

.. autosummary::
    Swap
    SwapResult
    SwapTrace
    apply_swap
    reduce_to_upper_diagonal
    replay_trace
    parse_trace
    format_trace

Code details
------------
"""
import logging
from typing import List, NamedTuple, Optional

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from ._matrices import InvariantError, binary_matrix, check_axioms, is_upper_diagonal, validate_cnm

logger = logging.getLogger(__name__)

ROW = "R"
COLUMN = "C"


class Swap(NamedTuple):
    """Exchange of rows (``kind="R"``) or columns (``kind="C"``) ``i`` and ``j``, 1-based."""

    kind: str
    i: int
    j: int

    def __str__(self):
        return f"{self.kind} {self.i} {self.j}"


class SwapResult(NamedTuple):
    """The matrix after a swap, and the axioms it violates (empty when it is a CNM)."""

    cells: np.ndarray
    violations: list

    @property
    def valid(self):
        return not self.violations


class SwapTrace(NamedTuple):
    """Swaps in the order they are applied, with the matrix after each one when recorded."""

    steps: List[Swap]
    snapshots: Optional[List[np.ndarray]] = None

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)


def _swapped(cells, kind, i, j):
    M = np.array(cells, dtype=np.int8)
    if kind == ROW:
        M[[i - 1, j - 1]] = M[[j - 1, i - 1]]
    elif kind == COLUMN:
        M[:, [i - 1, j - 1]] = M[:, [j - 1, i - 1]]
    else:
        raise ValueError(f"Swap kind must be 'R' or 'C', got {kind!r}.")
    return M


def apply_swap(cells, kind, i, j):
    """Exchanges two rows or two columns and reports whether the result is a CNM.

    Args:
        cells (array or Cnm): the matrix
        kind (str): ``"R"`` for rows, ``"C"`` for columns
        i (int): first index, 1-based
        j (int): second index, 1-based

    Returns:
        SwapResult: the new matrix and its axiom violations
    """
    A = binary_matrix(getattr(cells, "cells", cells))
    n = A.shape[0]
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"Swap indices must lie in 1..{n}, got ({i}, {j}).")
    M = _swapped(A, kind, i, j)
    return SwapResult(binary_matrix(M), check_axioms(M))


class _Reducer:
    """Applies the reduction to a mutable copy, recording and checking every swap."""

    def __init__(self, cells, check=True, snapshots=False):
        self.M = np.array(cells, dtype=np.int8)
        self.check = check
        self.steps = []
        self.snapshots = [] if snapshots else None

    def swap(self, kind, i, j):
        """Swaps 0-based lines ``i`` and ``j`` of the full matrix."""
        self.M = _swapped(self.M, kind, i + 1, j + 1)
        step = Swap(kind, min(i, j) + 1, max(i, j) + 1)
        self.steps.append(step)

        if self.check:
            violations = check_axioms(self.M)
            if violations:
                raise InvariantError(f"swap {step} produced an invalid matrix: {violations}")
        if self.snapshots is not None:
            snapshot = self.M.copy()
            snapshot.flags.writeable = False
            self.snapshots.append(snapshot)

    def reduce(self, rows, cols):
        """Reduces the sub-CNM on the given full-grid rows and columns (sorted, 0-based)."""
        size = len(rows)
        if size == 1:
            return

        def sub():
            return self.M[np.ix_(rows, cols)]

        # leaf of column 1 to the bottom
        leaf_row = int(np.nonzero(sub()[:, 0])[0][-1])
        for a in range(leaf_row, size - 1):
            self.swap(ROW, rows[a], rows[a + 1])

        # rows are nodes 0..size-1, column c is node size + c; column 1 is left out
        S = sub()
        r_idx, c_idx = np.nonzero(S[:, 1:])
        graph = coo_matrix(
            (np.ones(len(r_idx)), (r_idx, c_idx + 1 + size)), shape=(2 * size, 2 * size)
        )
        _, labels = connected_components(graph, directed=False)

        for a in range(size - 1):
            if not S[a, 0]:
                continue
            label = labels[a]
            sub_rows = [rows[r] for r in range(size) if labels[r] == label]
            sub_cols = [cols[c] for c in range(1, size) if labels[size + c] == label]
            if len(sub_rows) != len(sub_cols):
                raise InvariantError(f"subtree at row {rows[a] + 1} is not square")
            self.reduce(sub_rows, sub_cols)

        # interleave the columns
        for t in range(size - 2, -1, -1):
            target = size - 1 - t
            c = int(np.nonzero(sub()[t])[0][-1])
            if c < target:
                raise InvariantError(f"leaf of row {rows[t] + 1} left of its target column")
            while c > target:
                self.swap(COLUMN, cols[c - 1], cols[c])
                c -= 1


def reduce_to_upper_diagonal(c, snapshots=False, check=True):
    r"""Reduces a CNM to an upper-diagonal CNM by row and column swaps.

    Every intermediate matrix is a CNM and the trace has at most :math:`n^2/2` swaps.

    Args:
        c (Cnm): the CNM
        snapshots (bool): whether to record the matrix after each swap
        check (bool): whether to validate the matrix after each swap

    Returns:
        tuple[SwapTrace, Cnm]: the swaps and the upper-diagonal result

    Raises:
        InvariantError: if a swap produces a matrix that is not a CNM
    """
    n = c.n
    reducer = _Reducer(c.cells, check=check, snapshots=snapshots)
    reducer.reduce(list(range(n)), list(range(n)))

    result = validate_cnm(reducer.M)
    if not is_upper_diagonal(result):
        raise InvariantError("reduction did not end in an upper-diagonal CNM")

    logger.debug("reduced n=%d CNM with %d swaps", n, len(reducer.steps))
    return SwapTrace(reducer.steps, reducer.snapshots), result


def replay_trace(cells, trace):
    """Re-applies a trace and validates every intermediate matrix.

    Args:
        cells (array or Cnm): the starting matrix
        trace (Iterable[Swap]): the swaps

    Returns:
        list[SwapResult]: the result of every swap, in order
    """
    results = []
    current = getattr(cells, "cells", cells)
    for step in trace:
        res = apply_swap(current, step.kind, step.i, step.j)
        results.append(res)
        current = res.cells
    return results


def parse_trace(text):
    """Parses trace text: one ``R i j`` or ``C i j`` line per swap."""
    steps = []
    for number, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        parts = line.split()
        if len(parts) != 3 or parts[0] not in (ROW, COLUMN):
            raise ValueError(f"Malformed swap at line {number}: {line!r}")
        try:
            steps.append(Swap(parts[0], int(parts[1]), int(parts[2])))
        except ValueError as e:
            raise ValueError(f"Malformed swap at line {number}: {line!r}") from e
    return steps


def format_trace(trace):
    """Returns the trace text format (newline-terminated, empty for an empty trace)."""
    return "".join(f"{step}\n" for step in trace)
