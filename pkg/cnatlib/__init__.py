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
Python library
==============

.. currentmodule:: cnatlib

This is the top level module of cnatlib, containing the complete non-ambiguous
matrices (CNMs) themselves: their validation, leaf matrices, determinants and the
irreducibility and uniqueness criteria on permutations.

Terminology
-----------

Complete non-ambiguous matrix
    A square 0/1 matrix with a 1 in the top-left cell, no empty row or column, in
    which every other 1 has a 1 to its left or above it, but not both. Reading the
    nearest such 1 as the parent makes the 1s a binary tree, and the matrix is
    complete when every vertex has zero or two children. An :math:`n\times n` CNM
    has :math:`n` leaves and :math:`n-1` internal vertices.

Leaf matrix
    The CNM with its internal vertices set to zero. It is a permutation matrix; the
    associated permutation sends column :math:`j` to the row of its leaf.

Irreducible permutation
    A permutation of :math:`n` letters mapping no prefix :math:`\{1,\dots,j\}`,
    :math:`1\leq j<n`, to itself. These are exactly the leaf matrices of CNMs.

Upper-diagonal CNM
    A CNM whose leaf matrix is anti-diagonal.

Matrices and permutations
-------------------------

.. autosummary::
    parse_matrix
    format_matrix
    check_axioms
    validate_cnm
    is_cnm
    Cnm
    Permutation
    leaf_matrix
    associated_permutation
    determinant_sign
    clear_to_leaf_matrix
    is_upper_diagonal

Irreducibility and uniqueness
-----------------------------

.. autosummary::
    is_irreducible
    l_subset
    is_unique_leaf_matrix

Errors
------

.. autosummary::
    MatrixFormatError
    InvalidCnmError
    AxiomViolation
    InvariantError

Utility functions
-----------------

.. autosummary::
    version
"""
import cnatlib.bijections

from ._matrices import (
    COMPLETENESS,
    MINIMALITY,
    NON_AMBIGUITY,
    ROOT,
    AxiomViolation,
    Cnm,
    InvalidCnmError,
    InvariantError,
    LSubset,
    MatrixFormatError,
    Permutation,
    all_permutations,
    associated_permutation,
    binary_matrix,
    check_axioms,
    clear_to_leaf_matrix,
    determinant_sign,
    format_matrix,
    is_cnm,
    is_irreducible,
    is_unique_leaf_matrix,
    is_upper_diagonal,
    l_subset,
    leaf_matrix,
    matrix_key,
    parse_matrix,
    validate_cnm,
)
from ._version import __version__

__all__ = [
    "AxiomViolation",
    "Cnm",
    "InvalidCnmError",
    "InvariantError",
    "LSubset",
    "MatrixFormatError",
    "Permutation",
    "associated_permutation",
    "check_axioms",
    "clear_to_leaf_matrix",
    "determinant_sign",
    "format_matrix",
    "is_cnm",
    "is_irreducible",
    "is_unique_leaf_matrix",
    "is_upper_diagonal",
    "l_subset",
    "leaf_matrix",
    "parse_matrix",
    "validate_cnm",
    "version",
]


def version():
    r"""
    Get version number of cnatlib

    Returns:
      str: The package version number
    """
    return __version__
