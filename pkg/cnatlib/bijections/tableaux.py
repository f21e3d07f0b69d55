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
Tree-like tableaux.
"""
from itertools import combinations

MAX_ENUMERATION_SIZE = 6


class TableauFormatError(ValueError):
    """Raised when tableau text cannot be parsed."""


class InvalidTableauError(ValueError):
    """Raised when a shape and point set violate the tree-like tableau axioms."""


def _check(shape, pointed):
    """Returns a list of human-readable axiom failures."""
    problems = []
    if (1, 1) not in pointed:
        problems.append("top-left cell must be pointed")

    for i, j in sorted(pointed):
        if (i, j) == (1, 1):
            continue
        left = any((i, c) in pointed for c in range(1, j))
        above = any((r, j) in pointed for r in range(1, i))
        if left == above:
            problems.append(f"point {(i, j)} needs a point to its left or above, but not both")

    for i, length in enumerate(shape, start=1):
        if not any((i, j) in pointed for j in range(1, length + 1)):
            problems.append(f"row {i} has no point")
    for j in range(1, shape[0] + 1):
        height = sum(1 for length in shape if length >= j)
        if not any((i, j) in pointed for i in range(1, height + 1)):
            problems.append(f"column {j} has no point")
    return problems


class TreeLikeTableau:
    """A left-aligned diagram with pointed cells forming a tree.

    Args:
        shape (Sequence[int]): weakly decreasing positive row lengths, top row first
        pointed (Iterable[tuple[int, int]]): 1-based pointed cells inside the shape
    """

    __slots__ = ("shape", "pointed")

    def __init__(self, shape, pointed):
        shape = tuple(int(x) for x in shape)
        pointed = frozenset((int(i), int(j)) for i, j in pointed)

        if not shape or any(x < 1 for x in shape):
            raise InvalidTableauError("Rows must have positive length.")
        if any(a < b for a, b in zip(shape, shape[1:])):
            raise InvalidTableauError(f"Row lengths {shape} must be weakly decreasing.")
        outside = [c for c in pointed if not (1 <= c[0] <= len(shape) and 1 <= c[1] <= shape[c[0] - 1])]
        if outside:
            raise InvalidTableauError(f"Pointed cells {sorted(outside)} lie outside the shape.")

        problems = _check(shape, pointed)
        if problems:
            raise InvalidTableauError("; ".join(problems))

        self.shape = shape
        self.pointed = pointed

    @property
    def size(self):
        """Number of points, one less than the half-perimeter."""
        return len(self.pointed)

    @property
    def rows(self):
        return len(self.shape)

    @property
    def columns(self):
        return self.shape[0]

    def corners(self):
        """Cells with no cell below them and no cell to their right."""
        out = set()
        for i, length in enumerate(self.shape, start=1):
            below = self.shape[i] if i < len(self.shape) else 0
            if below < length:
                out.add((i, length))
        return out

    def __eq__(self, other):
        if not isinstance(other, TreeLikeTableau):
            return NotImplemented
        return (self.shape, self.pointed) == (other.shape, other.pointed)

    def __hash__(self):
        return hash((self.shape, self.pointed))

    def __repr__(self):
        return f"TreeLikeTableau(shape={list(self.shape)}, pointed={sorted(self.pointed)})"

    def __str__(self):
        return format_tableau(self)


def occupied_corners(t):
    """Returns the pointed corners of a tree-like tableau."""
    return {c for c in t.corners() if c in t.pointed}


def parse_tableau(text):
    """Parses the tableau text format: rows top to bottom, ``*`` pointed, ``.`` empty.

    Args:
        text (str): the tableau text

    Returns:
        TreeLikeTableau: the tableau
    """
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise TableauFormatError("Tableau text is empty.")

    pointed = []
    for i, line in enumerate(lines, start=1):
        if not line:
            raise TableauFormatError(f"Empty row at line {i}.")
        for j, ch in enumerate(line, start=1):
            if ch == "*":
                pointed.append((i, j))
            elif ch != ".":
                raise TableauFormatError(f"Illegal character {ch!r} at line {i}, column {j}.")
    return TreeLikeTableau([len(line) for line in lines], pointed)


def format_tableau(t):
    """Returns the tableau text format (newline-terminated)."""
    return "".join(
        "".join("*" if (i, j) in t.pointed else "." for j in range(1, length + 1)) + "\n"
        for i, length in enumerate(t.shape, start=1)
    )


def _shapes(rows, columns):
    """Weakly decreasing shapes with the given number of rows and first row length."""

    def extend(prefix):
        if len(prefix) == rows:
            yield tuple(prefix)
            return
        for x in range(prefix[-1], 0, -1):
            yield from extend(prefix + [x])

    yield from extend([columns])


def enumerate_tlts(n):
    """Returns every tree-like tableau of size ``n``; there are ``n!`` of them.

    A tableau of size ``n`` has ``r`` rows and ``c`` columns with ``r + c = n + 1``.

    Args:
        n (int): size, at most 6

    Returns:
        list[TreeLikeTableau]: the tableaux
    """
    if n < 1:
        raise ValueError(f"Size must be positive, got n={n}.")
    if n > MAX_ENUMERATION_SIZE:
        raise ValueError(f"Enumerating tree-like tableaux is limited to n <= {MAX_ENUMERATION_SIZE}.")

    out = []
    for rows in range(1, n + 1):
        for shape in _shapes(rows, n + 1 - rows):
            cells = [(i, j) for i, length in enumerate(shape, start=1) for j in range(2, length + 1)]
            cells += [(i, 1) for i in range(2, rows + 1)]
            for chosen in combinations(cells, n - 1):
                pointed = {(1, 1), *chosen}
                if not _check(shape, pointed):
                    out.append(TreeLikeTableau(shape, pointed))
    return out
