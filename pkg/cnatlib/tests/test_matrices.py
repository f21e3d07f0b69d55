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
"""Tests for the matrix and permutation functions"""
# pylint: disable=no-self-use
from math import factorial

import numpy as np
import pytest
import sympy

from cnatlib import (
    COMPLETENESS,
    MINIMALITY,
    NON_AMBIGUITY,
    ROOT,
    InvalidCnmError,
    MatrixFormatError,
    Permutation,
    all_permutations,
    associated_permutation,
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
    parse_matrix,
    validate_cnm,
)
from cnatlib.enumeration import all_cnms, count_cnats_with_leaf_matrix, enumerate_cnats_with_leaf_matrix


class TestParsing:
    """Tests for the matrix text format"""

    def test_round_trip(self):
        """Formatting a parsed matrix gives back the text"""
        text = "11100\n10010\n10000\n01001\n01000\n"
        assert format_matrix(parse_matrix(text)) == text

    def test_trailing_newline_optional(self):
        """A missing trailing newline is accepted"""
        assert np.array_equal(parse_matrix("11\n10"), parse_matrix("11\n10\n"))

    def test_read_only(self):
        """Parsed matrices cannot be written to"""
        M = parse_matrix("11\n10\n")
        with pytest.raises(ValueError):
            M[0, 0] = 0

    def test_illegal_character(self):
        """Illegal characters are reported with their position"""
        with pytest.raises(MatrixFormatError) as e:
            parse_matrix("11\n1x\n")
        assert (e.value.line, e.value.column) == (2, 2)

    def test_ragged(self):
        """Lines of different length are rejected"""
        with pytest.raises(MatrixFormatError):
            parse_matrix("111\n10\n100\n")

    def test_not_square(self):
        """A rectangular matrix is rejected"""
        with pytest.raises(MatrixFormatError):
            parse_matrix("110\n100\n")

    def test_empty(self):
        """Empty input is rejected"""
        with pytest.raises(MatrixFormatError):
            parse_matrix("\n")


class TestAxioms:
    """Tests for the four axioms"""

    def test_valid(self, size5_cnm):
        """A valid CNM has no violations and the expected structure"""
        assert not check_axioms(size5_cnm.cells)
        assert len(size5_cnm.leaves) == 5
        assert len(size5_cnm.vertices) == 9
        assert len(size5_cnm.internal) == 4

    def test_size_one(self):
        """The single vertex is a CNM"""
        c = validate_cnm([[1]])
        assert c.leaves == ((1, 1),)
        assert c.parents == {}

    def test_root(self):
        """A matrix without the root violates the root axiom"""
        codes = {v.code for v in check_axioms([[0, 1], [1, 1]])}
        assert ROOT in codes

    def test_two_precursors(self):
        """A vertex with a vertex to its left and above is ambiguous"""
        violations = check_axioms([[1, 1], [1, 1]])
        ambiguous = [v for v in violations if v.code == NON_AMBIGUITY]
        assert ambiguous
        assert (2, 2) in ambiguous[0].cells

    def test_no_precursor(self):
        """An isolated vertex is ambiguous"""
        violations = check_axioms([[1, 0, 0], [0, 0, 0], [0, 0, 1]])
        assert any(v.code == NON_AMBIGUITY and (3, 3) in v.cells for v in violations)

    def test_minimality(self):
        """Empty lines are reported with zero-padded witness cells"""
        violations = check_axioms([[1, 0], [0, 0]])
        minimal = [v for v in violations if v.code == MINIMALITY]
        assert minimal
        assert set(minimal[0].cells) == {(2, 0), (0, 2)}

    def test_completeness(self):
        """A vertex with a single child violates completeness"""
        violations = check_axioms([[1, 1, 0], [0, 1, 0], [0, 0, 0]])
        assert any(v.code == COMPLETENESS and (1, 2) in v.cells for v in violations)

    def test_invalid_raises_with_all_violations(self):
        """validate_cnm collects every violation"""
        with pytest.raises(InvalidCnmError) as e:
            validate_cnm([[0, 0], [0, 0]])
        codes = {v.code for v in e.value.violations}
        assert {ROOT, MINIMALITY} <= codes

    def test_parents(self, size5_cnm):
        """Every non-root vertex has its nearest left or upper vertex as parent"""
        assert size5_cnm.parents[(1, 3)] == (1, 2)
        assert size5_cnm.parents[(4, 2)] == (1, 2)
        assert size5_cnm.parents[(4, 5)] == (4, 2)
        assert size5_cnm.children((1, 2)) == ((1, 3), (4, 2))

    def test_kind(self, size5_cnm):
        """Cells are classified as leaves, internal vertices or empty"""
        assert size5_cnm.kind((1, 1)) == "internal"
        assert size5_cnm.kind((3, 1)) == "leaf"
        assert size5_cnm.kind((5, 5)) is None

    def test_equality(self, size5_cnm):
        """CNMs compare by their matrices"""
        assert size5_cnm == validate_cnm(size5_cnm.cells.copy())
        assert len({size5_cnm, validate_cnm(size5_cnm.cells.copy())}) == 1

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_vertex_counts(self, n):
        """Every CNM of size n has n leaves and n - 1 internal vertices"""
        for c in all_cnms(n):
            assert len(c.leaves) == n
            assert len(c.internal) == n - 1
            assert is_cnm(c.cells)


class TestPermutation:
    """Tests for the permutation type"""

    def test_size5(self, size5_cnm):
        """The associated permutation reads the leaf matrix column by column"""
        p = associated_permutation(size5_cnm)
        assert p == Permutation([3, 5, 1, 2, 4])
        assert p.cycles() == "(13)(254)"
        assert p.sign() == -1

    def test_leaf_matrix(self, size5_cnm):
        """The leaf matrix is the permutation matrix"""
        P = leaf_matrix(size5_cnm)
        assert np.array_equal(P, associated_permutation(size5_cnm).matrix())
        assert Permutation.from_matrix(P) == associated_permutation(size5_cnm)

    def test_inverse(self):
        """The inverse composes to the identity"""
        p = Permutation([3, 5, 1, 2, 4])
        q = p.inverse()
        assert all(q(p(j)) == j for j in range(1, 6))

    def test_parse(self):
        """Space and comma separated one-line forms are accepted"""
        assert Permutation.parse("3, 5 1,2 4") == Permutation([3, 5, 1, 2, 4])

    def test_not_a_permutation(self):
        """Repeated images are rejected"""
        with pytest.raises(ValueError):
            Permutation([1, 1, 2])

    def test_identity_cycles(self):
        """The identity has no cycles"""
        assert Permutation.identity(3).cycles() == "()"

    @pytest.mark.parametrize("n, sign", [(2, -1), (3, -1), (4, 1), (5, 1), (6, -1)])
    def test_reversal_sign(self, n, sign):
        """The reversal has sign (-1)^(n(n-1)/2)"""
        assert Permutation.reversal(n).sign() == sign


class TestDeterminant:
    """Tests for the determinant of a CNM"""

    def test_size5(self, size5_cnm):
        """The determinant is the sign of the permutation"""
        assert determinant_sign(size5_cnm) == -1

    def test_clearing(self, size5_cnm):
        """Clearing leaves only the leaf matrix"""
        assert np.array_equal(clear_to_leaf_matrix(size5_cnm), leaf_matrix(size5_cnm))

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
    def test_against_numpy(self, n):
        """The determinant agrees with a floating-point determinant"""
        for c in all_cnms(n):
            assert determinant_sign(c) == int(round(np.linalg.det(c.cells.astype(float))))

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_against_sympy(self, n):
        """The determinant agrees with an exact integer determinant"""
        for c in all_cnms(n):
            assert determinant_sign(c) == int(sympy.Matrix(c.cells.tolist()).det())

    def test_size6_split(self):
        """The 9460 CNMs of size six split 4728 / 4732 by determinant"""
        signs = [determinant_sign(c) for c in all_cnms(6)]
        assert (signs.count(1), signs.count(-1)) == (4728, 4732)


class TestIrreducible:
    """Tests for irreducibility"""

    @pytest.mark.parametrize("n, expected", [(1, 1), (2, 1), (3, 3), (4, 13), (5, 71), (6, 461)])
    def test_counts(self, n, expected):
        """Irreducible permutations are counted by 1, 1, 3, 13, 71, 461"""
        assert sum(1 for p in all_permutations(n) if is_irreducible(p)) == expected

    def test_reducible(self):
        """A permutation fixing a prefix is reducible"""
        assert not is_irreducible(Permutation([2, 1, 3]))
        assert not is_irreducible(Permutation([1, 3, 2]))

    def test_lower(self):
        """Skipping the first prefix makes small sizes irreducible"""
        assert is_irreducible(Permutation([1, 2]), lower=2)
        assert not is_irreducible(Permutation([1, 2]))

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_matches_cnm_existence(self, n):
        """A permutation is irreducible exactly when it is the leaf matrix of a CNM"""
        leaf_perms = {associated_permutation(c) for c in all_cnms(n)}
        assert leaf_perms == {p for p in all_permutations(n) if is_irreducible(p)}

    def test_matches_nonempty_enumeration_6(self):
        """Irreducibility is checked permutation by permutation at size six"""
        for p in all_permutations(6):
            assert is_irreducible(p) == bool(enumerate_cnats_with_leaf_matrix(p))


class TestUniqueLeafMatrix:
    """Tests for the L-subset criterion"""

    def test_l_subset(self):
        """The k-th L-subset has 2k - 1 cells"""
        L = l_subset(4, 3)
        assert len(L.cells) == 5
        assert L.corner == (3, 3)
        assert set(L.cells) == {(3, 1), (3, 2), (3, 3), (1, 3), (2, 3)}

    def test_l_subset_range(self):
        """Indices outside 2..n are rejected"""
        with pytest.raises(ValueError):
            l_subset(4, 1)

    def test_reversal_2(self):
        """The 2x2 reversal has a unique CNM"""
        assert is_unique_leaf_matrix(Permutation([2, 1]))

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_count(self, n):
        """There are 2^(n-2) permutations with a unique CNM"""
        assert sum(1 for p in all_permutations(n) if is_unique_leaf_matrix(p)) == 2 ** (n - 2)

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_matches_enumeration(self, n):
        """The criterion holds exactly for leaf matrices of one CNM"""
        counts = {}
        for c in all_cnms(n):
            p = associated_permutation(c)
            counts[p] = counts.get(p, 0) + 1
        for p in all_permutations(n):
            assert is_unique_leaf_matrix(p) == (counts.get(p, 0) == 1)

    def test_matches_counts_6(self):
        """The criterion holds exactly for the size six permutations counted once"""
        for p in all_permutations(6):
            assert is_unique_leaf_matrix(p) == (count_cnats_with_leaf_matrix(p) == 1)

    def test_upper_diagonal(self):
        """Only the anti-diagonal leaf matrix is upper-diagonal"""
        c = validate_cnm([[1, 1], [1, 0]])
        assert is_upper_diagonal(c)

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_reversal_counts(self, n):
        """The reversal carries (n-1)! CNMs"""
        ud = [c for c in all_cnms(n) if is_upper_diagonal(c)]
        assert len(ud) == factorial(n - 1)
