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
Fully-tiered trees and their encoding by permutations.
"""
from itertools import permutations
from typing import NamedTuple, Tuple

from .._matrices import InvariantError, Permutation


class InvalidTreeError(ValueError):
    """Raised for edge sets that are not trees or tierings that are not admissible."""


class FullyTieredTree:
    r"""A labelled tree on :math:`\{1,\dots,n\}` with a bijective tiering function.

    Adjacent vertices :math:`u<v` must satisfy :math:`t(u)<t(v)`.

    Args:
        n (int): number of vertices
        edges (Iterable[tuple[int, int]]): the ``n - 1`` edges
        tiering (Sequence[int]): ``tiering[v - 1]`` is the tier of vertex ``v``;
            defaults to the identity
    """

    __slots__ = ("n", "edges", "tiering")

    def __init__(self, n, edges, tiering=None):
        if n < 1:
            raise InvalidTreeError(f"A tree needs at least one vertex, got n={n}.")

        edges = frozenset(tuple(sorted((int(u), int(v)))) for u, v in edges)
        tiering = tuple(range(1, n + 1)) if tiering is None else tuple(int(x) for x in tiering)

        if len(edges) != n - 1:
            raise InvalidTreeError(f"A tree on {n} vertices has {n - 1} edges, got {len(edges)}.")
        if any(u == v or not (1 <= u <= n and 1 <= v <= n) for u, v in edges):
            raise InvalidTreeError("Edges must join two distinct vertices in 1..n.")
        if sorted(tiering) != list(range(1, n + 1)):
            raise InvalidTreeError(f"Tiering {tiering} is not a bijection onto 1..{n}.")

        self.n = n
        self.edges = edges
        self.tiering = tiering

        if len(self.component(1)) != n:
            raise InvalidTreeError("Edges do not connect all vertices.")
        for u, v in edges:
            if self.tier(u) >= self.tier(v):
                raise InvalidTreeError(f"Edge {(u, v)} has t({u}) >= t({v}).")

    def tier(self, v):
        """Tier of vertex ``v``."""
        return self.tiering[v - 1]

    def neighbours(self, v):
        """Sorted neighbours of ``v``."""
        return sorted({a if b == v else b for a, b in self.edges if v in (a, b)})

    def component(self, v, removed=()):
        """Vertices reachable from ``v`` without passing through ``removed``."""
        seen, stack = {v}, [v]
        while stack:
            u = stack.pop()
            for w in self.neighbours(u):
                if w not in seen and w not in removed:
                    seen.add(w)
                    stack.append(w)
        return seen

    def is_leaf(self, v):
        """Whether ``v`` has degree at most one."""
        return len(self.neighbours(v)) <= 1

    def __eq__(self, other):
        if not isinstance(other, FullyTieredTree):
            return NotImplemented
        return (self.n, self.edges, self.tiering) == (other.n, other.edges, other.tiering)

    def __hash__(self):
        return hash((self.n, self.edges, self.tiering))

    def __repr__(self):
        return f"FullyTieredTree(n={self.n}, edges={sorted(self.edges)}, tiering={list(self.tiering)})"


def parse_tree(text):
    """Parses the tree text format: ``n``, then the tiering line, then one ``u v`` edge per line.

    Args:
        text (str): the tree text

    Returns:
        FullyTieredTree: the tree
    """
    lines = [line.split() for line in text.splitlines() if line.strip()]
    if not lines or len(lines[0]) != 1:
        raise InvalidTreeError("First line must hold the number of vertices.")
    try:
        n = int(lines[0][0])
        tiering = [int(x) for x in lines[1]] if len(lines) > 1 else [1]
        edges = [(int(u), int(v)) for u, v in lines[2:]]
    except ValueError as e:
        raise InvalidTreeError(f"Malformed tree text: {e}") from e
    return FullyTieredTree(n, edges, tiering)


def format_tree(t):
    """Returns the tree text format of a tree, edges sorted."""
    lines = [str(t.n), " ".join(str(x) for x in t.tiering)]
    lines += [f"{u} {v}" for u, v in sorted(t.edges)]
    return "\n".join(lines) + "\n"


def _weight(t, vertices):
    if len(vertices) == 1:
        return 0
    v = min(vertices)
    total = 0
    rest = vertices - {v}
    while rest:
        start = next(iter(rest))
        part = t.component(start, removed=(v,)) & rest
        rest -= part
        u = next(w for w in t.neighbours(v) if w in part)
        total += sum(1 for w in part if t.tier(w) > t.tier(v) and w < u)
        total += _weight(t, part)
    return total


def ftt_weight(t):
    r"""Returns the weight of a fully-tiered tree.

    The minimal vertex :math:`v` is removed; each remaining component :math:`T_i`
    contributes the number of its vertices above :math:`v`'s tier with a smaller
    label than the vertex :math:`v` was attached to, plus its own weight.

    Args:
        t (FullyTieredTree): the tree

    Returns:
        int: the weight
    """
    return _weight(t, frozenset(range(1, t.n + 1)))


def is_ud_ftt(t):
    """Returns ``True`` for upper-diagonal FTTs: identity tiering and weight zero."""
    return t.tiering == tuple(range(1, t.n + 1)) and ftt_weight(t) == 0


def fully_tiered_trees(n):
    """Generates every fully-tiered tree on ``n`` vertices.

    Args:
        n (int): number of vertices

    Yields:
        FullyTieredTree: the trees, grouped by edge set
    """
    # local import: the reference module builds on this one
    from ..reference import labeled_trees

    for edges in labeled_trees(n):
        for tiering in permutations(range(1, n + 1)):
            if all(tiering[u - 1] < tiering[v - 1] for u, v in edges):
                yield FullyTieredTree(n, edges, tiering)


def remove_max_vertex(t):
    """Removes the maximal vertex of an upper-diagonal FTT, which is always a leaf.

    Args:
        t (FullyTieredTree): an upper-diagonal FTT with at least two vertices

    Returns:
        tuple[FullyTieredTree, int]: the smaller tree and the neighbour of the removed vertex
    """
    if t.n < 2:
        raise InvalidTreeError("Cannot remove a vertex from a single-vertex tree.")
    if not t.is_leaf(t.n):
        raise InvariantError(f"maximal vertex {t.n} is not a leaf")
    (attach,) = t.neighbours(t.n)
    edges = [e for e in t.edges if t.n not in e]
    return FullyTieredTree(t.n - 1, edges, t.tiering[:-1]), attach


def add_vertex(t, attach):
    """Adds vertex ``n + 1`` on tier ``n + 1`` as a leaf attached to ``attach``.

    Args:
        t (FullyTieredTree): the tree
        attach (int): an existing vertex

    Returns:
        FullyTieredTree: the tree on ``n + 1`` vertices
    """
    if not 1 <= attach <= t.n:
        raise InvalidTreeError(f"Attachment vertex must lie in 1..{t.n}, got {attach}.")
    return FullyTieredTree(t.n + 1, list(t.edges) + [(attach, t.n + 1)], t.tiering + (t.n + 1,))


class RemovalCode(NamedTuple):
    """The attachment labels ``a`` recorded while peeling maximal leaves, and their decoding ``b``.

    ``a[i - 1]`` is the neighbour of vertex ``n + 1 - i`` when it is removed, so
    ``1 <= a[i - 1] <= n - i``; ``b`` is the corresponding one-line permutation.
    """

    a: Tuple[int, ...]
    b: Tuple[int, ...]

    def __str__(self):
        return "a: " + ",".join(map(str, self.a)) + "\nb: " + ",".join(map(str, self.b))


def removal_code(t):
    """Returns the :class:`RemovalCode` of an upper-diagonal FTT.

    Args:
        t (FullyTieredTree): an upper-diagonal FTT with at least two vertices

    Returns:
        RemovalCode: the code
    """
    if not is_ud_ftt(t):
        raise InvalidTreeError("Tree is not an upper-diagonal FTT.")
    if t.n < 2:
        raise InvalidTreeError("Upper-diagonal FTTs need at least two vertices to encode.")

    a = []
    while t.n > 1:
        t, attach = remove_max_vertex(t)
        a.append(attach)

    pool = list(range(1, len(a) + 1))
    b = [pool.pop(x - 1) for x in a]
    return RemovalCode(tuple(a), tuple(b))


def udftt_to_permutation(t):
    r"""Encodes an upper-diagonal FTT on :math:`n` vertices as a permutation of :math:`n-1` letters.

    Args:
        t (FullyTieredTree): an upper-diagonal FTT, :math:`n\geq 2`

    Returns:
        Permutation: the permutation :math:`b`
    """
    return Permutation(removal_code(t).b)


def permutation_to_udftt(p):
    """Builds the upper-diagonal FTT on ``len(p) + 1`` vertices encoded by ``p``.

    Args:
        p (Permutation): a permutation of ``n - 1`` letters

    Returns:
        FullyTieredTree: the tree
    """
    pool = list(range(1, p.n + 1))
    a = []
    for x in p.images:
        position = pool.index(x)
        a.append(position + 1)
        pool.pop(position)

    t = FullyTieredTree(1, [])
    for attach in reversed(a):
        t = add_vertex(t, attach)
    return t
