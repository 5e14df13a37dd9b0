"""Fidelity of the exact representation oracle."""

import numpy as np
import pytest

from chromabraid.errors import StrandMismatchError
from chromabraid.lkrep import equal_via_representation, lk_matrix
from chromabraid.words import BraidWord, concat, inverse, power


class TestDefiningRelations:
    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_braid_relation(self, n):
        for i in range(1, n - 1):
            u = BraidWord(n, (i, i + 1, i))
            v = BraidWord(n, (i + 1, i, i + 1))
            assert equal_via_representation(u, v)

    @pytest.mark.parametrize("n", [4, 5, 6])
    def test_far_commutation(self, n):
        for i in range(1, n - 1):
            for j in range(i + 2, n):
                assert equal_via_representation(
                    BraidWord(n, (i, j)), BraidWord(n, (j, i))
                )

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_inverses(self, n):
        trivial = BraidWord(n)
        for i in range(1, n):
            assert equal_via_representation(BraidWord(n, (i, -i)), trivial)
            assert equal_via_representation(BraidWord(n, (-i, i)), trivial)


class TestSeparation:
    def test_distinguishes_generators(self):
        assert not equal_via_representation(BraidWord(4, (1,)), BraidWord(4, (2,)))

    def test_distinguishes_pure_words(self):
        assert not equal_via_representation(BraidWord(3, (1, 1)), BraidWord(3))
        assert not equal_via_representation(BraidWord(3, (1, 1)), BraidWord(3, (2, 2)))

    def test_b2_exponent_sum(self):
        assert equal_via_representation(
            BraidWord(2, (1, 1, -1)), BraidWord(2, (1,))
        )
        assert not equal_via_representation(BraidWord(2, (1, 1)), BraidWord(2, (1,)))


class TestWindows:
    def test_budget_validation(self):
        with pytest.raises(ValueError):
            lk_matrix(BraidWord(3, (1, 2, 1)), length_budget=2)

    def test_strand_mismatch(self):
        with pytest.raises(StrandMismatchError):
            equal_via_representation(BraidWord(3), BraidWord(4))

    def test_identity_matrix_shape(self):
        m = lk_matrix(BraidWord(4), length_budget=1)
        assert m.shape == (6, 6, 5, 3)
        assert m[0, 0, 2, 1] == 1

    def test_object_dtype_path_agrees(self):
        # past the int64 length threshold the object-dtype lane must give
        # identical verdicts; a 24-letter trivial word forces that lane
        w = power(BraidWord(3, (1, 2, -1, -2)), 6)
        assert len(w.letters) == 24
        assert lk_matrix(w).dtype == object
        assert not equal_via_representation(w, BraidWord(3))
        unwound = concat(w, inverse(w))
        assert equal_via_representation(unwound, BraidWord(3))

    def test_dtype_threshold(self):
        short = lk_matrix(BraidWord(3, (1,) * 22))
        assert short.dtype == np.int64
