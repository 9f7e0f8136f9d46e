"""Tests for n-ary extensions and restrictions."""

import pytest

from polyadic_semigroups.core import (
    BinaryOpDesc,
    FiniteNaryOp,
    NotClosed,
    is_reduction,
    nary_extension,
    restrict,
)
from polyadic_semigroups.core.errors import CapExceededError, UniverseMismatchError
from polyadic_semigroups.wmonoid import WMonoidWitness


class TestNaryExtension:
    """Tests for nary_extension."""

    def test_addition_mod_2_gives_extz2(self, add2: BinaryOpDesc, extz2: FiniteNaryOp) -> None:
        assert nary_extension(add2, 3) == extz2

    def test_left_zero_folds_to_first_argument(self, left_zero: BinaryOpDesc) -> None:
        op = nary_extension(left_zero, 4)
        assert op.arity == 4
        assert op.tolist() == [i // 8 for i in range(16)]

    def test_addition_mod_3(self, add3: BinaryOpDesc) -> None:
        op = nary_extension(add3, 3)
        for x in range(3):
            for y in range(3):
                for z in range(3):
                    assert op.apply((x, y, z)) == (x + y + z) % 3

    def test_arity_2_is_the_table_itself(self, add3: BinaryOpDesc) -> None:
        assert nary_extension(add3, 2).tolist() == add3.tolist()

    def test_cell_cap(self, add3: BinaryOpDesc) -> None:
        with pytest.raises(CapExceededError):
            nary_extension(add3, 5, cell_cap=100)


class TestIsReduction:
    """Tests for is_reduction."""

    def test_extz2_reduces_to_addition(self, extz2: FiniteNaryOp, add2: BinaryOpDesc) -> None:
        assert is_reduction(extz2, add2)

    def test_extz2_reduces_to_shifted_addition(self, extz2: FiniteNaryOp) -> None:
        """x o y = x + y + 1 folds to x + y + z + 2 = x + y + z mod 2."""
        assert is_reduction(extz2, BinaryOpDesc(2, [1, 0, 0, 1]))

    def test_aff3_does_not_reduce_to_addition(
        self, aff3: FiniteNaryOp, add3: BinaryOpDesc
    ) -> None:
        assert not is_reduction(aff3, add3)

    def test_universe_mismatch(self, aff3: FiniteNaryOp, add2: BinaryOpDesc) -> None:
        with pytest.raises(UniverseMismatchError):
            is_reduction(aff3, add2)


class TestRestrict:
    """Tests for restrict."""

    def test_single_point(self, extz2: FiniteNaryOp) -> None:
        op = restrict(extz2, [0])
        assert isinstance(op, FiniteNaryOp)
        assert op.order == 1 and op.arity == 3 and op.tolist() == [0]

    def test_ternary_ex46_without_e_is_closed(self, ex46: WMonoidWitness) -> None:
        op = restrict(nary_extension(ex46.monoid, 3), range(5))
        assert isinstance(op, FiniteNaryOp)
        assert op.order == 5

    def test_quaternary_ex46_without_e_escapes_at_aaaa(self, ex46: WMonoidWitness) -> None:
        """a * a * a * a = e, and every tuple touching S stays in S."""
        result = restrict(nary_extension(ex46.monoid, 4), range(5))
        assert result == NotClosed(witness=(4, 4, 4, 4), image=5)

    def test_binary_restriction_keeps_class(self, ex46: WMonoidWitness) -> None:
        assert isinstance(restrict(ex46.monoid.op, [0, 1, 2, 3]), BinaryOpDesc)

    def test_empty_subset(self, extz2: FiniteNaryOp) -> None:
        with pytest.raises(ValueError, match="non-empty"):
            restrict(extz2, [])
