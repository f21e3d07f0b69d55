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
Bijections
==========

.. currentmodule:: cnatlib.bijections

This submodule relates upper-diagonal CNMs, whose leaf matrix is anti-diagonal, to
other objects counted by :math:`(n-1)!`: upper-diagonal fully-tiered trees (FTTs),
permutations of :math:`n-1` letters and tree-like tableaux (TLTs) of size :math:`n-1`.

Fully-tiered trees
^^^^^^^^^^^^^^^^^^

.. autosummary::

    FullyTieredTree
    ftt_weight
    is_ud_ftt
    fully_tiered_trees
    add_vertex
    remove_max_vertex
    parse_tree
    format_tree

Permutations
^^^^^^^^^^^^

.. autosummary::

    RemovalCode
    removal_code
    udftt_to_permutation
    permutation_to_udftt

Tree-like tableaux
^^^^^^^^^^^^^^^^^^

.. autosummary::

    TreeLikeTableau
    occupied_corners
    enumerate_tlts
    parse_tableau
    format_tableau
    udcnm_to_tlt
    tlt_to_udcnm
    corner_correspondence
    second_diagonal
    leading_zero_run

Code details
^^^^^^^^^^^^
"""
from .tableaux import (
    InvalidTableauError,
    TableauFormatError,
    TreeLikeTableau,
    enumerate_tlts,
    format_tableau,
    occupied_corners,
    parse_tableau,
)
from .tiered_trees import (
    FullyTieredTree,
    InvalidTreeError,
    RemovalCode,
    add_vertex,
    format_tree,
    ftt_weight,
    fully_tiered_trees,
    is_ud_ftt,
    parse_tree,
    permutation_to_udftt,
    remove_max_vertex,
    removal_code,
    udftt_to_permutation,
)
from .upper_diagonal import (
    corner_correspondence,
    count_occupied_corners,
    leading_zero_run,
    second_diagonal,
    tlt_to_udcnm,
    udcnm_to_tlt,
)

__all__ = [
    "FullyTieredTree",
    "InvalidTableauError",
    "InvalidTreeError",
    "RemovalCode",
    "TableauFormatError",
    "TreeLikeTableau",
    "add_vertex",
    "corner_correspondence",
    "count_occupied_corners",
    "enumerate_tlts",
    "format_tableau",
    "format_tree",
    "ftt_weight",
    "fully_tiered_trees",
    "is_ud_ftt",
    "leading_zero_run",
    "occupied_corners",
    "parse_tableau",
    "parse_tree",
    "permutation_to_udftt",
    "remove_max_vertex",
    "removal_code",
    "second_diagonal",
    "tlt_to_udcnm",
    "udcnm_to_tlt",
    "udftt_to_permutation",
]
