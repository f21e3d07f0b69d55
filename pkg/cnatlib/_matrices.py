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
Complete non-ambiguous matrices
"""
from itertools import permutations as _permutations
from typing import NamedTuple, Tuple

import numba
import numpy as np
from sympy.combinatorics import Permutation as _SympyPermutation

Cell = Tuple[int, int]

ROOT = "root"
NON_AMBIGUITY = "non-ambiguity"
MINIMALITY = "minimality"
COMPLETENESS = "completeness"


class MatrixFormatError(ValueError):
    """Raised when matrix text cannot be parsed.

    Args:
        message (str): description of the problem
        line (int): 1-based line of the offending character
        column (int): 1-based column of the offending character, or ``None``
    """

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column})" if column is not None else ")")
        super().__init__(message + where)


class AxiomViolation(NamedTuple):
    """A single failed axiom, with the cells that witness the failure."""

    code: str
    cells: Tuple[Cell, ...]
    message: str


class InvalidCnmError(ValueError):
    """Raised by :func:`validate_cnm`; ``violations`` lists every failed axiom."""

    def __init__(self, violations):
        self.violations = tuple(violations)
        codes = ", ".join(sorted({v.code for v in self.violations}))
        super().__init__(f"Matrix is not a complete non-ambiguous matrix ({codes}).")


class InvariantError(RuntimeError):
    """Raised when a result that is guaranteed by a theorem fails to hold."""


# ------------------------------------------------------------------------
# Binary matrices                                                        |
# ------------------------------------------------------------------------


def binary_matrix(cells):
    r"""Returns a read-only ``int8`` copy of a square 0/1 array.

    Args:
        cells (array or Sequence): a square array-like of zeros and ones

    Returns:
        array: an :math:`n\times n` read-only ``np.int8`` array
    """
    A = np.array(cells, dtype=np.int64)

    if A.ndim != 2:
        raise ValueError("Input matrix must be two-dimensional.")

    if A.shape[0] != A.shape[1]:
        raise ValueError("Input matrix must be square.")

    if A.shape[0] == 0:
        raise ValueError("Input matrix must not be empty.")

    if np.any((A != 0) & (A != 1)):
        raise ValueError("Input matrix must only contain zeros and ones.")

    A = A.astype(np.int8)
    A.flags.writeable = False
    return A


def parse_matrix(text):
    """Parses the matrix text format: one line per row, characters ``0``/``1``.

    Line 1 of the text is row 1 of the matrix. A single trailing newline is allowed.

    Args:
        text (str): the matrix text

    Returns:
        array: the parsed read-only binary matrix

    Raises:
        MatrixFormatError: for ragged lines, non-square input or illegal characters
    """
    lines = text.splitlines()
    while lines and lines[-1].strip() == "":
        lines.pop()

    if not lines:
        raise MatrixFormatError("Matrix text is empty.")

    width = len(lines[0])
    for i, line in enumerate(lines, start=1):
        for j, ch in enumerate(line, start=1):
            if ch not in "01":
                raise MatrixFormatError(f"Illegal character {ch!r}", line=i, column=j)
        if len(line) != width:
            raise MatrixFormatError(
                f"Ragged lines: expected {width} characters, found {len(line)}", line=i
            )

    if width != len(lines):
        raise MatrixFormatError(
            f"Matrix is not square: {len(lines)} lines of {width} characters", line=len(lines)
        )

    return binary_matrix([[int(ch) for ch in line] for line in lines])


def format_matrix(cells):
    """Returns the matrix text format of a binary matrix (newline-terminated)."""
    return "".join("".join(str(int(x)) for x in row) + "\n" for row in np.asarray(cells))


def matrix_key(cells):
    """Canonical row-major bit string of a binary matrix, used for hashing and deduplication."""
    return "".join(str(int(x)) for x in np.asarray(cells).ravel())


@numba.jit(nopython=True)
def _neighbour_flags(cells):  # pragma: no cover
    """For every cell, whether a vertex lies to its left, above, to its right and below.

    Args:
        cells (array): square integer array

    Returns:
        tuple[array, array, array, array]: boolean arrays ``left, above, right, below``
    """
    n = cells.shape[0]
    left = np.zeros((n, n), dtype=np.bool_)
    above = np.zeros((n, n), dtype=np.bool_)
    right = np.zeros((n, n), dtype=np.bool_)
    below = np.zeros((n, n), dtype=np.bool_)

    for i in range(n):
        seen = False
        for j in range(n):
            left[i, j] = seen
            if cells[i, j] != 0:
                seen = True
        seen = False
        for j in range(n - 1, -1, -1):
            right[i, j] = seen
            if cells[i, j] != 0:
                seen = True

    for j in range(n):
        seen = False
        for i in range(n):
            above[i, j] = seen
            if cells[i, j] != 0:
                seen = True
        seen = False
        for i in range(n - 1, -1, -1):
            below[i, j] = seen
            if cells[i, j] != 0:
                seen = True

    return left, above, right, below


def _cells(mask):
    """1-based (row, column) tuples of the true entries of a boolean mask, row-major."""
    return tuple((int(i) + 1, int(j) + 1) for i, j in zip(*np.nonzero(mask)))


def check_axioms(cells):
    r"""Returns every axiom a binary matrix violates; an empty list means it is a CNM.

    The parent of a vertex is its nearest vertex above or to the left, so a row or
    column read left to right (top to bottom) is a chain of right (down) edges. Under
    that reading a vertex has one child per non-empty direction, and completeness is
    the statement that a vertex has a vertex to its right exactly when it has one below.

    Args:
        cells (array): a square 0/1 array

    Returns:
        list[AxiomViolation]: the violations, grouped by axiom
    """
    A = binary_matrix(cells)
    left, above, right, below = _neighbour_flags(A)
    vertex = A == 1
    violations = []

    if not vertex[0, 0]:
        violations.append(AxiomViolation(ROOT, ((1, 1),), "cell (1,1) must be a vertex"))

    non_root = vertex.copy()
    non_root[0, 0] = False
    ambiguous = non_root & (left == above)
    if ambiguous.any():
        both = _cells(ambiguous & left)
        neither = _cells(ambiguous & ~left)
        if neither:
            violations.append(
                AxiomViolation(NON_AMBIGUITY, neither, "vertices without a precursor")
            )
        if both:
            violations.append(
                AxiomViolation(NON_AMBIGUITY, both, "vertices with two possible precursors")
            )

    empty_rows = tuple(int(i) + 1 for i in np.nonzero(~vertex.any(axis=1))[0])
    empty_cols = tuple(int(j) + 1 for j in np.nonzero(~vertex.any(axis=0))[0])
    if empty_rows or empty_cols:
        witness = tuple((i, 0) for i in empty_rows) + tuple((0, j) for j in empty_cols)
        violations.append(
            AxiomViolation(
                MINIMALITY,
                witness,
                f"empty rows {list(empty_rows)} and columns {list(empty_cols)}",
            )
        )

    one_child = vertex & (right != below)
    if one_child.any():
        violations.append(
            AxiomViolation(COMPLETENESS, _cells(one_child), "vertices with exactly one child")
        )

    return violations


class Cnm:
    r"""A validated complete non-ambiguous matrix.

    Instances are immutable and compare equal when their matrices are equal.
    Use :func:`validate_cnm` to construct one.

    Args:
        cells (array): the read-only binary matrix
        parents (dict): maps every non-root vertex to its parent vertex
        leaves (tuple): the leaves, sorted by row
    """

    __slots__ = ("cells", "parents", "leaves", "_key")

    def __init__(self, cells, parents, leaves):
        self.cells = cells
        self.parents = parents
        self.leaves = leaves
        self._key = matrix_key(cells)

    @property
    def n(self):
        """Side length of the matrix."""
        return self.cells.shape[0]

    @property
    def vertices(self):
        """All vertices in row-major order."""
        return _cells(self.cells == 1)

    @property
    def internal(self):
        """Internal vertices in row-major order."""
        leaves = set(self.leaves)
        return tuple(v for v in self.vertices if v not in leaves)

    def kind(self, cell):
        """Returns ``"leaf"``, ``"internal"`` or ``None`` for a cell."""
        i, j = cell
        if not self.cells[i - 1, j - 1]:
            return None
        return "leaf" if cell in self.leaves else "internal"

    def children(self, cell):
        """Children of a vertex, right child first."""
        return tuple(v for v, p in sorted(self.parents.items(), key=lambda x: -x[0][1]) if p == cell)

    @property
    def key(self):
        """Canonical row-major bit string."""
        return self._key

    def __eq__(self, other):
        if not isinstance(other, Cnm):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"Cnm(n={self.n}, key={self._key!r})"

    def __str__(self):
        return format_matrix(self.cells)


def validate_cnm(cells):
    """Validates a binary matrix against the four axioms and returns the :class:`Cnm`.

    Args:
        cells (array): a square 0/1 array

    Returns:
        Cnm: the validated matrix with its parent relation and leaves

    Raises:
        InvalidCnmError: if any axiom fails; ``violations`` holds every failure
    """
    A = binary_matrix(cells)
    violations = check_axioms(A)
    if violations:
        raise InvalidCnmError(violations)

    n = A.shape[0]
    left, above, right, below = _neighbour_flags(A)
    parents = {}
    for i, j in _cells(A == 1):
        if (i, j) == (1, 1):
            continue
        if left[i - 1, j - 1]:
            k = max(c for c in range(j - 1) if A[i - 1, c])
            parents[(i, j)] = (i, k + 1)
        else:
            k = max(r for r in range(i - 1) if A[r, j - 1])
            parents[(i, j)] = (k + 1, j)

    leaves = _cells((A == 1) & ~right & ~below)

    if len(leaves) != n or len(parents) != 2 * n - 2:
        raise InvariantError(f"{len(leaves)} leaves and {len(parents) + 1} vertices for n={n}")

    return Cnm(A, parents, leaves)


def is_cnm(cells):
    """Returns ``True`` if the square 0/1 array satisfies all four axioms."""
    return not check_axioms(cells)


# ------------------------------------------------------------------------
# Permutations                                                           |
# ------------------------------------------------------------------------


class Permutation:
    r"""A permutation of :math:`\{1,\dots,n\}` stored in one-line form.

    ``images[j - 1] = i`` means that the unique 1 of column :math:`j` of the
    permutation matrix lies in row :math:`i`.

    Args:
        images (Sequence[int]): the one-line images, 1-based
    """

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{len(images)}.")
        self.images = images

    @classmethod
    def identity(cls, n):
        """The identity permutation on ``n`` letters."""
        return cls(range(1, n + 1))

    @classmethod
    def reversal(cls, n):
        """The reversal :math:`(n, n-1, \\dots, 1)`; its matrix is anti-diagonal."""
        return cls(range(n, 0, -1))

    @classmethod
    def from_matrix(cls, P):
        """Reads the permutation off a permutation matrix (column to row)."""
        P = np.asarray(P)
        if not (np.all(P.sum(axis=0) == 1) and np.all(P.sum(axis=1) == 1)):
            raise ValueError("Input matrix is not a permutation matrix.")
        return cls(int(np.argmax(P[:, j])) + 1 for j in range(P.shape[1]))

    @classmethod
    def parse(cls, text):
        """Parses one line of space- or comma-separated images."""
        return cls(int(x) for x in text.replace(",", " ").split())

    @property
    def n(self):
        """Number of letters."""
        return len(self.images)

    def __call__(self, j):
        return self.images[j - 1]

    def __iter__(self):
        return iter(self.images)

    def __len__(self):
        return len(self.images)

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __lt__(self, other):
        return self.images < other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({list(self.images)})"

    def __str__(self):
        return " ".join(str(x) for x in self.images)

    def matrix(self):
        """The permutation matrix as a read-only ``int8`` array."""
        P = np.zeros((self.n, self.n), dtype=np.int8)
        for j, i in enumerate(self.images):
            P[i - 1, j] = 1
        P.flags.writeable = False
        return P

    def cells(self):
        """The 1-based cells ``(row, column)`` of the permutation matrix, sorted by column."""
        return tuple((i, j) for j, i in enumerate(self.images, start=1))

    def inverse(self):
        """The inverse permutation (row to column)."""
        inv = [0] * self.n
        for j, i in enumerate(self.images, start=1):
            inv[i - 1] = j
        return Permutation(inv)

    def _sympy(self):
        return _SympyPermutation([i - 1 for i in self.images])

    def sign(self):
        """Sign of the permutation, ``+1`` or ``-1``."""
        return self._sympy().signature()

    def cycles(self):
        """Cycle notation with fixed points omitted, e.g. ``(13)(254)``.

        Letters are separated by spaces when :math:`n \\geq 10`.
        """
        sep = " " if self.n >= 10 else ""
        cycles = [c for c in self._sympy().cyclic_form]
        if not cycles:
            return "()"
        return "".join("(" + sep.join(str(x + 1) for x in c) + ")" for c in cycles)


def all_permutations(n):
    """Generates every permutation of ``n`` letters in lexicographic order."""
    for images in _permutations(range(1, n + 1)):
        yield Permutation(images)


# ------------------------------------------------------------------------
# Leaf matrices and determinants                                         |
# ------------------------------------------------------------------------


def leaf_matrix(c):
    """Returns the leaf matrix of a CNM: every internal vertex set to zero.

    Args:
        c (Cnm): a validated CNM

    Returns:
        array: a read-only permutation matrix
    """
    P = np.zeros_like(c.cells)
    for i, j in c.leaves:
        P[i - 1, j - 1] = 1
    P.flags.writeable = False
    return P


def associated_permutation(c):
    """Returns the permutation encoded by the leaf matrix (column to row).

    Args:
        c (Cnm): a validated CNM

    Returns:
        Permutation: the associated permutation
    """
    images = [0] * c.n
    for i, j in c.leaves:
        images[j - 1] = i
    return Permutation(images)


def is_upper_diagonal(c):
    """Returns ``True`` if the leaf matrix of the CNM is anti-diagonal."""
    return associated_permutation(c) == Permutation.reversal(c.n)


def clear_to_leaf_matrix(c):
    r"""Reduces a CNM to its leaf matrix with determinant-preserving eliminations.

    Each leaf is alone in its row or alone in its column. A leaf alone in its row
    is subtracted from every other row with a vertex in the leaf's column; a leaf
    alone in its column is subtracted from every other column with a vertex in
    its row. After all leaves are processed only the leaf matrix remains.

    Args:
        c (Cnm): a validated CNM

    Returns:
        array: the cleared integer matrix
    """
    M = np.array(c.cells, dtype=np.int64)
    for i, j in c.leaves:
        r, k = i - 1, j - 1
        if M[r].sum() == 1:
            for row in np.nonzero(M[:, k])[0]:
                if row != r:
                    M[row] -= M[r]
        elif M[:, k].sum() == 1:
            for col in np.nonzero(M[r])[0]:
                if col != k:
                    M[:, col] -= M[:, k]
        else:
            raise InvariantError(f"leaf {(i, j)} shares both its row and its column")
    return M


def determinant_sign(c):
    r"""Returns :math:`\det(M)` of a CNM, which is the sign of its associated permutation.

    The value is obtained twice: by clearing the matrix down to its leaf matrix
    and reading the sign of the result, and from the parity of the associated
    permutation. The two must agree.

    Args:
        c (Cnm): a validated CNM

    Returns:
        int: ``+1`` or ``-1``

    Raises:
        InvariantError: if the two computations disagree
    """
    cleared = clear_to_leaf_matrix(c)
    if not np.array_equal(cleared, leaf_matrix(c)):
        raise InvariantError("clearing did not terminate at the leaf matrix")

    by_clearing = Permutation.from_matrix(cleared).sign()
    by_parity = associated_permutation(c).sign()
    if by_clearing != by_parity:
        raise InvariantError(f"determinant {by_clearing} differs from sign {by_parity}")
    return by_parity


# ------------------------------------------------------------------------
# Irreducibility and L-subsets                                           |
# ------------------------------------------------------------------------


def is_irreducible(p, lower=1):
    r"""Returns ``True`` if no prefix :math:`\{1,\dots,j\}` with ``lower`` :math:`\leq j < n`
    is mapped to itself.

    With the default ``lower=1`` these are the irreducible permutations counted by
    OEIS A003319, exactly the leaf matrices of at least one CNM. ``lower=2`` skips
    the prefix :math:`\{1\}`, which makes every permutation of :math:`n \leq 2` irreducible.

    Args:
        p (Permutation): the permutation
        lower (int): smallest prefix length inspected

    Returns:
        bool: whether ``p`` is irreducible
    """
    running_max = 0
    for j, i in enumerate(p.images, start=1):
        running_max = max(running_max, i)
        if j >= p.n:
            break
        if j >= lower and running_max == j:
            return False
    return True


class LSubset(NamedTuple):
    """The ``k``-th L-subset: row ``k`` up to column ``k`` and column ``k`` up to row ``k``."""

    k: int
    cells: Tuple[Cell, ...]

    @property
    def corner(self):
        """The cell ``(k, k)`` where the two arms meet."""
        return (self.k, self.k)


def l_subset(n, k):
    """Returns the ``k``-th L-subset of an ``n`` by ``n`` matrix.

    Args:
        n (int): matrix size
        k (int): index, ``2 <= k <= n``

    Returns:
        LSubset: the :math:`2k-1` cells, row arm first
    """
    if not 2 <= k <= n:
        raise ValueError(f"L-subset index must satisfy 2 <= k <= n, got k={k}, n={n}.")
    row = tuple((k, j) for j in range(1, k + 1))
    col = tuple((i, k) for i in range(k - 1, 0, -1))
    return LSubset(k, row + col)


def is_unique_leaf_matrix(p):
    """Returns ``True`` if the permutation matrix is the leaf matrix of exactly one CNM.

    The criterion: no vertex on the main diagonal, exactly one vertex in each
    ``k``-th L-subset for ``2 <= k < n``, and two in the ``n``-th.

    Args:
        p (Permutation): the permutation

    Returns:
        bool: whether exactly one CNM has this leaf matrix
    """
    n = p.n
    if n < 2:
        return False

    cells = p.cells()
    if any(i == j for i, j in cells):
        return False

    # a cell (i, j) lies in the max(i, j)-th L-subset
    counts = [0] * (n + 1)
    for i, j in cells:
        counts[max(i, j)] += 1
    return all(counts[k] == 1 for k in range(2, n)) and counts[n] == 2
