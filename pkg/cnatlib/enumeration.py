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
r"""
Enumeration
===========

.. currentmodule:: cnatlib.enumeration

This submodule generates and counts complete non-ambiguous matrices (CNMs), either
all those sharing a fixed leaf matrix or all those of a given size, and aggregates
the counts into the tables :math:`T(n)`, determinant parity and :math:`b(n,k)`.

The search sweeps the rows from top to bottom. In a CNM every row is a chain
ending in its leaf and every column is a chain ending in its leaf, so while
sweeping each column is either *empty*, *open* (it has a vertex but its leaf
lies further down) or *closed*. A row whose leaf lies in column :math:`\ell` is
either the leaf alone, below an open column :math:`\ell`, or starts in an open
column :math:`c<\ell` and continues with any subset of the empty columns between
:math:`c` and :math:`\ell`. Every CNM is produced by exactly one such sequence of
row choices.

Fixed leaf matrix
-----------------

.. autosummary::
    cnats_with_leaf_matrix
    enumerate_cnats_with_leaf_matrix
    count_cnats_with_leaf_matrix
    construction_step
    constructive_cnats
    extend_leaf_matrix

All sizes
---------

.. autosummary::
    irreducible_permutations
    all_cnms
    write_cnms
    CountTable
    count_shard
    count_table
    count_all_cnats
    det_parity_counts
    b_table
    max_cnat_permutations
    lower_bound_holds

Code details
------------
"""
# pylint: disable=too-many-arguments
import logging
import os
import warnings
from itertools import combinations
from typing import NamedTuple, Tuple

import dask
import numpy as np

from ._matrices import (
    Cell,
    InvariantError,
    Permutation,
    all_permutations,
    format_matrix,
    is_irreducible,
    validate_cnm,
)

logger = logging.getLogger(__name__)

FEASIBLE_COUNT_SIZE = 7


# ------------------------------------------------------------------------
# Row sweep                                                              |
# ------------------------------------------------------------------------


def _leaf_columns(p):
    """0-based leaf column of every row."""
    return tuple(j - 1 for j in p.inverse().images)


def _subsets(mask):
    """All sub-masks of ``mask``, the empty one first."""
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask


def _bits(mask):
    return [b for b in range(mask.bit_length()) if mask >> b & 1]


def _row_moves(row, open_cols, leaf_cols):
    """Yields every admissible content of ``row`` as ``(open_after, columns)``.

    Args:
        row (int): 0-based row index
        open_cols (int): bit mask of open columns before the row
        leaf_cols (tuple[int]): 0-based leaf column of every row

    Yields:
        tuple[int, int]: open columns after the row, bit mask of the row's vertices
    """
    leaf = leaf_cols[row]
    leaf_bit = 1 << leaf
    n = len(leaf_cols)

    if row == 0:
        if n == 1:
            yield 0, 1
        elif leaf > 0:
            between = ((1 << leaf) - 1) & ~1
            for extra in _subsets(between):
                yield 1 | extra, 1 | extra | leaf_bit
        return

    if open_cols & leaf_bit:
        yield open_cols & ~leaf_bit, leaf_bit
        return

    closed = 0
    for r in range(row):
        closed |= 1 << leaf_cols[r]
    empty = ~(open_cols | closed | leaf_bit) & ((1 << n) - 1)

    for first in _bits(open_cols & (leaf_bit - 1)):
        between = empty & (leaf_bit - 1) & ~((2 << first) - 1)
        for extra in _subsets(between):
            yield open_cols | extra, (1 << first) | extra | leaf_bit


def _rows_to_matrix(rows, n):
    M = np.zeros((n, n), dtype=np.int8)
    for i, mask in enumerate(rows):
        for j in _bits(mask):
            M[i, j] = 1
    return M


def cnats_with_leaf_matrix(p):
    """Generates the CNMs whose leaf matrix is the permutation matrix of ``p``.

    Each CNM is validated before it is yielded. The generator is empty exactly
    when ``p`` is reducible.

    Args:
        p (Permutation): the leaf permutation (column to row)

    Yields:
        Cnm: the CNMs, in depth-first order of the row sweep
    """
    n = p.n
    leaf_cols = _leaf_columns(p)
    rows = [0] * n
    seen = set()

    def descend(row, open_cols):
        if row == n:
            if open_cols == 0:
                yield _rows_to_matrix(rows, n)
            return
        for open_after, content in _row_moves(row, open_cols, leaf_cols):
            rows[row] = content
            yield from descend(row + 1, open_after)

    for M in descend(0, 0):
        c = validate_cnm(M)
        if c.key in seen:
            raise InvariantError(f"row sweep produced {c.key} twice")
        seen.add(c.key)
        yield c


def enumerate_cnats_with_leaf_matrix(p):
    """Returns the complete, duplicate-free list of CNMs with leaf matrix ``p``.

    Args:
        p (Permutation): the leaf permutation (column to row)

    Returns:
        list[Cnm]: all such CNMs, empty iff ``p`` is reducible
    """
    return list(cnats_with_leaf_matrix(p))


def count_cnats_with_leaf_matrix(p):
    """Counts the CNMs with leaf matrix ``p`` without building them.

    A forward pass over the rows keeps, for every set of open columns, the
    number of ways to reach it.

    Args:
        p (Permutation): the leaf permutation (column to row)

    Returns:
        int: the number of CNMs
    """
    if not is_irreducible(p):
        return 0

    leaf_cols = _leaf_columns(p)
    states = {0: 1}
    for row in range(p.n):
        nxt = {}
        for open_cols, ways in states.items():
            for open_after, _ in _row_moves(row, open_cols, leaf_cols):
                nxt[open_after] = nxt.get(open_after, 0) + ways
        states = nxt
    return states.get(0, 0)


# ------------------------------------------------------------------------
# Construction from the existence argument                               |
# ------------------------------------------------------------------------


class ConstructionStep(NamedTuple):
    """One step of the constructive existence argument.

    The rightmost leaf ``l_x`` and the bottom-most leaf ``l_y`` are joined through
    the new internal vertex ``p``; every enclosed leaf hangs off ``p``'s row (``"up"``)
    or ``p``'s column (``"left"``).
    """

    l_x: Cell
    l_y: Cell
    p: Cell
    enclosed: Tuple[Cell, ...]
    choices: Tuple[str, ...] = ()


def construction_step(leaves):
    """Returns the :class:`ConstructionStep` for a set of active leaves, without choices.

    Args:
        leaves (Iterable[tuple[int, int]]): the active leaf cells; they occupy
            distinct rows and columns

    Returns:
        ConstructionStep: the step, or ``None`` if the rightmost and bottom-most
        leaves coincide
    """
    leaves = list(leaves)
    l_x = max(leaves, key=lambda v: v[1])
    l_y = max(leaves, key=lambda v: v[0])
    if l_x == l_y:
        return None
    p = (l_x[0], l_y[1])
    enclosed = tuple(sorted(v for v in leaves if v[0] > p[0] and v[1] > p[1]))
    return ConstructionStep(l_x, l_y, p, enclosed)


def constructive_cnats(p):
    """Generates the CNMs reachable through the left/up choices of the existence argument.

    These form a non-empty subset of :func:`enumerate_cnats_with_leaf_matrix` for
    every irreducible ``p``; in general not every CNM is reachable.

    Args:
        p (Permutation): the leaf permutation (column to row)

    Yields:
        tuple[Cnm, tuple[ConstructionStep]]: each distinct reachable CNM and the
        steps with the choices that produced it
    """
    n = p.n
    seen = set()

    def descend(active, internal, steps):
        if len(active) == 1:
            if active == [(1, 1)]:
                yield internal, steps
            return
        step = construction_step(active)
        if step is None:
            return
        rest = [v for v in active if v not in (step.l_x, step.l_y) and v not in step.enclosed]
        k = len(step.enclosed)
        for up in range(1 << k):
            choices = tuple("up" if up >> b & 1 else "left" for b in range(k))
            added = [
                (step.p[0], v[1]) if choice == "up" else (v[0], step.p[1])
                for v, choice in zip(step.enclosed, choices)
            ]
            yield from descend(
                rest + [step.p],
                internal + [step.p] + added,
                steps + (step._replace(choices=choices),),
            )

    for internal, steps in descend(list(p.cells()), [], ()):
        M = np.zeros((n, n), dtype=np.int8)
        for i, j in list(p.cells()) + internal:
            M[i - 1, j - 1] = 1
        try:
            c = validate_cnm(M)
        except ValueError:
            logger.debug("construction %s did not give a CNM", steps)
            continue
        if c.key not in seen:
            seen.add(c.key)
            yield c, steps


def extend_leaf_matrix(p):
    r"""Returns the two size :math:`n+1` extensions of an irreducible permutation.

    The first turns the rightmost leaf into an internal vertex with its two leaves
    in the new last column and the new last row; the second does the same for the
    bottom-most leaf. Each extension has exactly as many CNMs as ``p``.

    Args:
        p (Permutation): an irreducible permutation with :math:`n\geq 2`

    Returns:
        tuple[Permutation, Permutation]: the two distinct extensions
    """
    if p.n < 2 or not is_irreducible(p):
        raise ValueError(f"Can only extend irreducible permutations of size n >= 2, got {p}.")

    n = p.n
    r1 = p(n)
    c1 = p.inverse()(n)

    first = list(p.images) + [r1]
    first[n - 1] = n + 1

    second = list(p.images) + [n]
    second[c1 - 1] = n + 1
    return Permutation(first), Permutation(second)


# ------------------------------------------------------------------------
# Counting over all permutations                                         |
# ------------------------------------------------------------------------


def irreducible_permutations(n):
    """Generates the irreducible permutations of ``n`` letters in lexicographic order."""
    return (p for p in all_permutations(n) if is_irreducible(p))


def all_cnms(n):
    """Generates every CNM of size ``n``, grouped by leaf matrix in lexicographic order."""
    for p in irreducible_permutations(n):
        yield from cnats_with_leaf_matrix(p)


def write_cnms(cnms, stream):
    """Streams CNMs as matrix text blocks separated by blank lines.

    Args:
        cnms (Iterable[Cnm]): the matrices
        stream (io.TextIOBase): a writable text stream

    Returns:
        int: the number of matrices written
    """
    count = 0
    for c in cnms:
        if count:
            stream.write("\n")
        stream.write(format_matrix(c.cells))
        count += 1
    return count


class CountTable:
    """Aggregated CNM counts for one size.

    ``by_k[k]`` is :math:`b(n,k)`, the number of permutations that are the leaf matrix
    of exactly ``k`` CNMs. Tables for the same size merge with ``+``, which is
    commutative and associative.

    Args:
        n (int): size
        by_k (dict[int, int]): histogram of CNM counts per permutation
        det_plus (int): number of CNMs with determinant ``+1``
        det_minus (int): number of CNMs with determinant ``-1``
    """

    def __init__(self, n, by_k=None, det_plus=0, det_minus=0):
        self.n = n
        self.by_k = dict(by_k or {})
        self.det_plus = det_plus
        self.det_minus = det_minus

    @property
    def total(self):
        """:math:`T(n)`, the number of CNMs."""
        return self.det_plus + self.det_minus

    @property
    def irreducible(self):
        """Number of permutations with at least one CNM."""
        return sum(self.by_k.values())

    def add(self, p, k):
        """Records that permutation ``p`` carries ``k`` CNMs."""
        if k == 0:
            return
        self.by_k[k] = self.by_k.get(k, 0) + 1
        if p.sign() == 1:
            self.det_plus += k
        else:
            self.det_minus += k

    def __add__(self, other):
        if self.n != other.n:
            raise ValueError(f"Cannot merge tables of sizes {self.n} and {other.n}.")
        by_k = dict(self.by_k)
        for k, b in other.by_k.items():
            by_k[k] = by_k.get(k, 0) + b
        return CountTable(
            self.n, by_k, self.det_plus + other.det_plus, self.det_minus + other.det_minus
        )

    def __eq__(self, other):
        if not isinstance(other, CountTable):
            return NotImplemented
        return (self.n, self.by_k, self.det_plus, self.det_minus) == (
            other.n,
            other.by_k,
            other.det_plus,
            other.det_minus,
        )

    def __repr__(self):
        return f"CountTable(n={self.n}, total={self.total}, by_k={dict(sorted(self.by_k.items()))})"

    def b(self, k):
        """:math:`b(n,k)`, zero when absent."""
        return self.by_k.get(k, 0)

    def to_rows(self, k_max=None):
        """Returns ``(n, k, b)`` rows for ``k = 1..k_max``, including zero entries.

        Args:
            k_max (int): last ``k``; defaults to the largest ``k`` present

        Returns:
            list[tuple[int, int, int]]: the rows
        """
        if k_max is None:
            k_max = max(self.by_k, default=0)
        return [(self.n, k, self.b(k)) for k in range(1, k_max + 1)]

    def to_dict(self):
        """Structured form used by the JSON reports."""
        return {
            "n": self.n,
            "total": self.total,
            "det_plus": self.det_plus,
            "det_minus": self.det_minus,
            "by_k": {str(k): b for k, b in sorted(self.by_k.items())},
        }


def count_shard(n, shard, shards):
    """Counts the irreducible permutations ``shard, shard + shards, ...`` of size ``n``.

    Args:
        n (int): size
        shard (int): index of this shard, ``0 <= shard < shards``
        shards (int): number of shards

    Returns:
        CountTable: the partial table
    """
    logger.debug("shard %d/%d of n=%d started", shard, shards, n)
    table = CountTable(n)
    for index, p in enumerate(irreducible_permutations(n)):
        if index % shards == shard:
            table.add(p, count_cnats_with_leaf_matrix(p))
    logger.debug("shard %d/%d of n=%d finished: %r", shard, shards, n, table)
    return table


def resolve_jobs(jobs=None):
    """Number of workers: ``jobs``, else ``CNATLIB_JOBS``, else the CPU count."""
    if jobs is None:
        jobs = os.environ.get("CNATLIB_JOBS") or os.cpu_count() or 1
    jobs = int(jobs)
    if jobs < 1:
        raise ValueError(f"Number of jobs must be positive, got {jobs}.")
    return jobs


def count_table(n, jobs=None, scheduler="processes", force=False):
    """Computes the full :class:`CountTable` of size ``n``.

    Work is split round-robin over the irreducible permutations in lexicographic
    order; the result does not depend on the number of shards.

    Args:
        n (int): size
        jobs (int): number of shards; ``None`` uses :func:`resolve_jobs` and ``1`` runs serially
        scheduler (str): ``dask`` scheduler used when ``jobs > 1``
        force (bool): suppresses the warning for sizes above 7

    Returns:
        CountTable: the table
    """
    if n < 1:
        raise ValueError(f"Size must be positive, got n={n}.")
    if n > FEASIBLE_COUNT_SIZE and not force:
        warnings.warn(f"Counting CNMs of size {n} may take a long time.", UserWarning)

    jobs = resolve_jobs(jobs)
    if jobs == 1 or n < 5:
        table = count_shard(n, 0, 1)
    else:
        compute_list = []
        for shard in range(jobs):
            compute_list.append(dask.delayed(count_shard)(n, shard, jobs))
        results = dask.compute(*compute_list, scheduler=scheduler)
        table = CountTable(n)
        for part in results:
            table = table + part

    logger.info("n=%d: T=%d, A=%d, B=%d", n, table.total, table.det_plus, table.det_minus)
    return table


def count_all_cnats(n, **kwargs):
    """Returns :math:`T(n)`, the number of CNMs of size ``n``.

    Keyword arguments are passed to :func:`count_table`.
    """
    return count_table(n, **kwargs).total


def det_parity_counts(n, **kwargs):
    """Returns ``(A, B, A - B)``, the numbers of CNMs with determinant ``+1`` and ``-1``.

    Keyword arguments are passed to :func:`count_table`.
    """
    table = count_table(n, **kwargs)
    return table.det_plus, table.det_minus, table.det_plus - table.det_minus


def b_table(n, **kwargs):
    """Returns the :class:`CountTable` holding :math:`b(n,k)`.

    Keyword arguments are passed to :func:`count_table`.
    """
    return count_table(n, **kwargs)


def max_cnat_permutations(n):
    """Returns the largest number of CNMs sharing one leaf matrix, and the permutations attaining it.

    Args:
        n (int): size

    Returns:
        tuple[int, list[Permutation]]: the maximum and its maximisers in lexicographic order
    """
    best, winners = 0, []
    for p in irreducible_permutations(n):
        k = count_cnats_with_leaf_matrix(p)
        if k > best:
            best, winners = k, [p]
        elif k == best:
            winners.append(p)
    return best, winners


def lower_bound_holds(table, larger):
    """Checks :math:`b(n+1,k) \\geq 2 b(n,k)` for every ``k`` present in ``table``.

    Args:
        table (CountTable): the table of size ``n``
        larger (CountTable): the table of size ``n + 1``

    Returns:
        bool: whether the bound holds
    """
    if larger.n != table.n + 1:
        raise ValueError(f"Expected tables of sizes n and n+1, got {table.n} and {larger.n}.")
    return all(larger.b(k) >= 2 * b for k, b in table.by_k.items())
