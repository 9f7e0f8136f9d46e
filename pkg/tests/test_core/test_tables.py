"""Tests for carriers, operation tables and monoids."""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from polyadic_semigroups.core import (
    BinaryOpDesc,
    FiniteNaryOp,
    MonoidDesc,
    Universe,
    apply,
    flat_index,
    relabel,
    relabel_monoid,
    unflat_index,
)
from polyadic_semigroups.core.errors import (
    ArityMismatchError,
    CapExceededError,
    ElementRangeError,
    NotAssociativeError,
    NotNeutralError,
)


class TestUniverse:
    """Tests for Universe."""

    def test_check_accepts_valid_index(self) -> None:
        assert Universe(3).check(2) == 2

    def test_check_rejects_out_of_range(self) -> None:
        with pytest.raises(ElementRangeError):
            Universe(3).check(3)

    def test_extended_primes_clashing_names(self) -> None:
        """A fresh element named like an old one gets a prime."""
        u = Universe(2, ("a", "b")).extended("a", "e")
        assert u.names == ("a", "b", "a'", "e")

    def test_duplicate_names_rejected(self) -> None:
        with pytest.raises(ValueError, match="distinct"):
            Universe(2, ("x", "x"))

    def test_subset_reindexes_names(self) -> None:
        u = Universe(3, ("p", "q", "r")).subset([2, 0])
        assert u.names == ("r", "p")


class TestFiniteNaryOp:
    """Tests for FiniteNaryOp."""

    def test_apply_aff3(self, aff3: FiniteNaryOp) -> None:
        """Entries of x - y + z mod 3."""
        assert apply(aff3, (0, 0, 0)) == 0
        assert apply(aff3, (1, 2, 1)) == 0
        assert apply(aff3, (2, 0, 2)) == 1

    def test_apply_wrong_arity(self, aff3: FiniteNaryOp) -> None:
        with pytest.raises(ArityMismatchError):
            aff3.apply((0, 1))

    def test_apply_out_of_range(self, aff3: FiniteNaryOp) -> None:
        with pytest.raises(ElementRangeError):
            aff3.apply((0, 1, 3))

    def test_wrong_table_size(self) -> None:
        with pytest.raises(ValueError, match="needs 8 entries"):
            FiniteNaryOp(2, 3, [0] * 7)

    def test_entry_out_of_range(self) -> None:
        with pytest.raises(ElementRangeError):
            FiniteNaryOp(2, 2, [0, 1, 2, 0])

    def test_cell_cap(self) -> None:
        with pytest.raises(CapExceededError):
            FiniteNaryOp(3, 2, [0] * 9, cell_cap=8)

    def test_table_is_read_only(self, aff3: FiniteNaryOp) -> None:
        with pytest.raises(ValueError):
            aff3.table[0] = 1

    def test_equality_ignores_names(self) -> None:
        named = BinaryOpDesc(Universe(2, ("a", "b")), [0, 1, 1, 0])
        assert named == BinaryOpDesc(2, [0, 1, 1, 0])
        assert hash(named) == hash(BinaryOpDesc(2, [0, 1, 1, 0]))

    def test_binary_call_and_matrix(self, add3: BinaryOpDesc) -> None:
        assert add3(2, 2) == 1
        assert add3.matrix.shape == (3, 3)


@given(st.integers(1, 4), st.integers(2, 4), st.data())
def test_flat_index_inverts_unflat_index(order: int, arity: int, data: st.DataObject) -> None:
    index = data.draw(st.integers(0, order**arity - 1))
    args = unflat_index(order, arity, index)
    assert len(args) == arity
    assert flat_index(order, args) == index


class TestRelabel:
    """Tests for relabel and relabel_monoid."""

    def test_inverse_relabeling_restores(self, aff3: FiniteNaryOp) -> None:
        sigma = [2, 0, 1]
        inverse = list(np.argsort(sigma))
        assert relabel(relabel(aff3, sigma), inverse) == aff3

    def test_relabel_is_isomorphism(self, aff3: FiniteNaryOp) -> None:
        """sigma(F(x, y, z)) == F'(sigma x, sigma y, sigma z)."""
        sigma = [1, 2, 0]
        image = relabel(aff3, sigma)
        for x in range(3):
            for y in range(3):
                for z in range(3):
                    moved = (sigma[x], sigma[y], sigma[z])
                    assert image.apply(moved) == sigma[aff3.apply((x, y, z))]

    def test_relabel_keeps_binary_class(self, add3: BinaryOpDesc) -> None:
        assert isinstance(relabel(add3, [1, 0, 2]), BinaryOpDesc)

    def test_relabel_monoid_moves_neutral(self, add3: BinaryOpDesc) -> None:
        moved = relabel_monoid(MonoidDesc(add3, 0), [2, 0, 1])
        assert moved.neutral == 2

    def test_not_a_permutation(self, add3: BinaryOpDesc) -> None:
        with pytest.raises(ValueError, match="not a permutation"):
            relabel(add3, [0, 0, 1])


class TestMonoidDesc:
    """Tests for MonoidDesc validation."""

    def test_fold(self, add2: BinaryOpDesc) -> None:
        monoid = MonoidDesc(add2, 0)
        assert monoid.fold([1, 1, 1]) == 1
        assert monoid.fold([]) == 0

    def test_rejects_non_neutral(self, left_zero: BinaryOpDesc) -> None:
        with pytest.raises(NotNeutralError):
            MonoidDesc(left_zero, 0)

    def test_rejects_non_associative(self) -> None:
        """x o y = 1 iff x = y = 0 is not associative."""
        with pytest.raises(NotAssociativeError):
            MonoidDesc(BinaryOpDesc(2, [1, 0, 0, 0]), 0)
