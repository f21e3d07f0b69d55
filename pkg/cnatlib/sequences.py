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
Integer sequences
=================

.. currentmodule:: cnatlib.sequences

This submodule computes, with exact integers, the number :math:`f(n,k)` of
upper-diagonal CNMs of size :math:`n` whose second diagonal, read from the top
right, starts with exactly :math:`k` zeros followed by a one (:math:`k=n-1` means
the second diagonal is empty). It also provides the partial sums :math:`s(n,k)`,
the sequence :math:`a(n)=f(n+1,n)` counting tree-like tableaux of size :math:`n`
without occupied corners, and the binomial transform used on the columns of the
:math:`b(n,k)` table.

.. math::

    f(n,k) = \sum_{j=0}^{k} \binom{k-j}{j} (-1)^j (n-2-j)!, \qquad 0\leq k<n-1.

Recurrences and closed forms
----------------------------

.. autosummary::
    f_rec
    f_simple
    f_closed
    s_rec
    a
    f_table

Oracles and transforms
----------------------

.. autosummary::
    f_count_oracle
    binomial_transform
    b_column

Code details
------------
"""
from repoze.lru import lru_cache
from scipy.special import comb, factorial

from ._matrices import Permutation
from .bijections.upper_diagonal import leading_zero_run, second_diagonal
from .enumeration import cnats_with_leaf_matrix

MAX_ORACLE_SIZE = 7


def _check_range(n, k):
    if n < 2 or not -1 <= k <= n - 1:
        raise ValueError(f"f(n, k) is defined for n >= 2 and -1 <= k <= n - 1, got ({n}, {k}).")


def _fac(x):
    return int(factorial(x, exact=True))


def _comb(N, k):
    return int(comb(N, k, exact=True))


@lru_cache(maxsize=1000000)
def _f_rec(n, k):
    if k == -1:
        return 0
    if n == 2:
        return 1 if k == 0 else 0
    if k < n - 1:
        return sum(_f_rec(n - 1, j) for j in range(max(k - 1, -1), n - 1))
    return sum((n - 3 - j) * _f_rec(n - 1, j) for j in range(0, n - 3))


def f_rec(n, k):
    r"""Returns :math:`f(n,k)` from the three-case recursion in :math:`n`.

    .. math::

        f(n,k) = \begin{cases}
            \sum_{j=k-1}^{n-2} f(n-1,j) & 0 \leq k < n-1,\\
            \sum_{j=0}^{n-4} (n-3-j) f(n-1,j) & k = n-1,
        \end{cases}

    with :math:`f(n,-1)=0`, :math:`f(2,0)=1` and :math:`f(2,1)=0`.

    Args:
        n (int): size, at least 2
        k (int): length of the leading zero run, :math:`-1\leq k\leq n-1`

    Returns:
        int: :math:`f(n,k)`
    """
    _check_range(n, k)
    return _f_rec(n, k)


@lru_cache(maxsize=1000000)
def _f_simple(n, k):
    if k < 0:
        return 0
    if k == 0:
        return _fac(n - 2)
    if k < n - 1:
        return _f_simple(n, k - 1) - _f_simple(n - 1, k - 2)
    return _f_simple(n + 1, n - 1) - _f_simple(n, n - 2)


def f_simple(n, k):
    r"""Returns :math:`f(n,k)` from the simplified recursion in :math:`k`.

    Uses :math:`f(n,0)=(n-2)!`, :math:`f(n,k)=f(n,k-1)-f(n-1,k-2)` for
    :math:`0<k<n-1` and :math:`f(n,n-1)=f(n+1,n-1)-f(n,n-2)`.

    Args:
        n (int): size, at least 2
        k (int): length of the leading zero run

    Returns:
        int: :math:`f(n,k)`
    """
    _check_range(n, k)
    return _f_simple(n, k)


def f_closed(n, k):
    r"""Returns :math:`f(n,k)` from its alternating binomial-factorial sum.

    For :math:`k=n-1` the sum is
    :math:`\sum_{j=0}^{n-1}\binom{n-j}{j}(-1)^j(n-1-j)!`.

    Args:
        n (int): size, at least 2
        k (int): length of the leading zero run

    Returns:
        int: :math:`f(n,k)`
    """
    _check_range(n, k)
    if k == -1:
        return 0
    if k < n - 1:
        return sum(_comb(k - j, j) * (-1) ** j * _fac(n - 2 - j) for j in range(k + 1))
    return sum(_comb(n - j, j) * (-1) ** j * _fac(n - 1 - j) for j in range(n))


@lru_cache(maxsize=1000000)
def _s_rec(n, k):
    return sum(_f_rec(n, j) for j in range(0, k + 1))


def s_rec(n, k):
    r"""Returns :math:`s(n,k)=\sum_{j=0}^{k} f(n,j)`; in particular :math:`s(n,n-1)=(n-1)!`."""
    _check_range(n, k)
    return _s_rec(n, k)


def a(n):
    r"""Returns :math:`a(n)=\sum_{k=\lceil (n-1)/2\rceil}^{n}\binom{k+1}{n-k}(-1)^{n-k}k!`.

    This is the number of tree-like tableaux of size :math:`n` without an
    occupied corner, and equals :math:`f(n+1,n)`.

    Args:
        n (int): size, at least 1

    Returns:
        int: :math:`a(n)`
    """
    if n < 1:
        raise ValueError(f"a(n) is defined for n >= 1, got n={n}.")
    start = n // 2
    return sum(_comb(k + 1, n - k) * (-1) ** (n - k) * _fac(k) for k in range(start, n + 1))


def f_table(n_max, n_min=2):
    """Returns the rows ``(n, k, f)`` for ``n_min <= n <= n_max`` and ``0 <= k <= n - 1``."""
    return [(n, k, f_rec(n, k)) for n in range(n_min, n_max + 1) for k in range(n)]


@lru_cache(maxsize=32)
def _leading_runs(n):
    runs = [0] * n
    for c in cnats_with_leaf_matrix(Permutation.reversal(n)):
        runs[leading_zero_run(second_diagonal(c))] += 1
    return tuple(runs)


def f_count_oracle(n, k):
    """Counts :math:`f(n,k)` directly over the enumerated upper-diagonal CNMs of size ``n``.

    Args:
        n (int): size, ``2 <= n <= 7``
        k (int): length of the leading zero run

    Returns:
        int: the number of upper-diagonal CNMs with that run
    """
    _check_range(n, k)
    if n > MAX_ORACLE_SIZE:
        raise ValueError(f"The enumeration oracle is limited to n <= {MAX_ORACLE_SIZE}.")
    if k == -1:
        return 0
    return _leading_runs(n)[k]


def binomial_transform(seq, inverse=True):
    r"""Returns the binomial transform of an integer sequence.

    With ``inverse=True`` (the default) the result is
    :math:`c_m=\sum_{i=0}^{m}(-1)^{m-i}\binom{m}{i}s_i`, which sends
    ``0, 1, 4, 12, 32, 80`` to ``0, 1, 2, 3, 4, 5``. With ``inverse=False`` the signs
    are dropped; the two transforms undo each other.

    Args:
        seq (Sequence[int]): the sequence, usually with a zero prepended
        inverse (bool): whether to use the signed transform

    Returns:
        list[int]: the transformed sequence, of the same length
    """
    seq = [int(x) for x in seq]
    if not seq:
        raise ValueError("Cannot transform an empty sequence.")
    sign = -1 if inverse else 1
    return [
        sum(sign ** (m - i) * _comb(m, i) * seq[i] for i in range(m + 1)) for m in range(len(seq))
    ]


def b_column(tables, k):
    """Returns the ``k``-th column of a :math:`b(n,k)` table, from its first non-zero entry, with a zero prepended.

    Args:
        tables (Iterable[CountTable]): tables for consecutive sizes
        k (int): the column

    Returns:
        list[int]: the padded column
    """
    values = [t.b(k) for t in sorted(tables, key=lambda t: t.n)]
    while values and values[0] == 0:
        values.pop(0)
    return [0] + values
