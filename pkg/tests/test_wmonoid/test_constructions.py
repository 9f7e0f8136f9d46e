"""Tests for building W-monoids from involutions and bitranslations."""

import pytest

from polyadic_semigroups.core import BinaryOpDesc, FiniteNaryOp, MonoidDesc
from polyadic_semigroups.core.errors import (
    BitranslationError,
    EnumerationCapError,
    EvenArityError,
    NotInvolutionError,
)
from polyadic_semigroups.fixtures import load_fixture
from polyadic_semigroups.search import is_in_semigroup
from polyadic_semigroups.wmonoid import (
    Bitranslation,
    WMonoidFailure,
    WMonoidWitness,
    check_w_monoid,
    decompose,
    enumerate_bitranslations,
    ex46_bitranslation,
    from_bitranslation,
    from_involution,
    in_semigroup_from_w_monoid,
    inner_bitranslation,
    verify_bitranslation,
)

Z2 = MonoidDesc(BinaryOpDesc(2, [0, 1, 1, 0]), 0)


class TestFromInvolution:
    """Tests for from_involution."""

    def test_s3_transposition(self, s3: MonoidDesc) -> None:
        monoid = from_involution(s3, 1)
        assert monoid.order == 8
        assert monoid.neutral == 7
        result = check_w_monoid(monoid)
        assert isinstance(result, WMonoidWitness)
        assert result.a == 6

    def test_names_extend(self, s3: MonoidDesc) -> None:
        names = from_involution(s3, 1).op.universe.names
        assert names is not None
        assert names[-2:] == ("a", "e")

    def test_central_involution_fails_w3(self) -> None:
        result = check_w_monoid(from_involution(Z2, 1))
        assert isinstance(result, WMonoidFailure)
        assert result.condition == "W3"
        assert "too small" not in result.reason

    def test_three_cycle_is_not_an_involution(self, s3: MonoidDesc) -> None:
        with pytest.raises(NotInvolutionError):
            from_involution(s3, 3)

    def test_decomposes_to_inner_bitranslation(self, s3: MonoidDesc) -> None:
        witness = check_w_monoid(from_involution(s3, 1))
        assert isinstance(witness, WMonoidWitness)
        assert decompose(witness) == inner_bitranslation(s3, 1)


class TestVerifyBitranslation:
    """Tests for the three bitranslation laws."""

    def test_lz2_swap(self, left_zero: BinaryOpDesc) -> None:
        assert verify_bitranslation(Bitranslation(left_zero, (1, 0), (0, 1))) is None

    def test_lz2_right_must_be_identity(self, left_zero: BinaryOpDesc) -> None:
        violation = verify_bitranslation(Bitranslation(left_zero, (1, 0), (1, 0)))
        assert violation is not None
        assert violation.law == "right"
        assert violation.pair == (0, 0)

    def test_inner_bitranslations_always_hold(self, s3: MonoidDesc) -> None:
        for element in range(s3.order):
            assert verify_bitranslation(inner_bitranslation(s3, element)) is None

    def test_map_length(self, left_zero: BinaryOpDesc) -> None:
        with pytest.raises(ValueError, match="needs 2 values"):
            Bitranslation(left_zero, (0,), (0, 1))


class TestFromBitranslation:
    """Tests for from_bitranslation and decompose."""

    def test_lz2_gives_w4(self, w4: WMonoidWitness, left_zero: BinaryOpDesc) -> None:
        monoid = from_bitranslation(Bitranslation(left_zero, (1, 0), (0, 1)))
        assert monoid.op == w4.monoid.op
        assert monoid.neutral == w4.e

    def test_ex46_fixture(self, ex46: WMonoidWitness) -> None:
        doc = load_fixture("ex46-s")
        assert doc.left is not None and doc.right is not None
        bt = Bitranslation(doc.binary(), doc.left, doc.right)
        assert from_bitranslation(bt).op == ex46.monoid.op

    def test_ex46_family_matches_fixture(self) -> None:
        doc = load_fixture("ex46-s")
        bt = ex46_bitranslation(Z2, 1, 1)
        assert bt.carrier == doc.binary()
        assert (bt.left, bt.right) == (doc.left, doc.right)

    def test_ex46_family_rejects_neutral(self) -> None:
        with pytest.raises(NotInvolutionError):
            ex46_bitranslation(Z2, 0, 1)

    def test_equal_maps_rejected(self, left_zero: BinaryOpDesc) -> None:
        with pytest.raises(BitranslationError, match="L!=R"):
            from_bitranslation(Bitranslation(left_zero, (0, 1), (0, 1)))

    def test_non_involution_rejected(self) -> None:
        """Translation by 1 in Z3 has order 3."""
        z3 = BinaryOpDesc(3, [(x + y) % 3 for x in range(3) for y in range(3)])
        with pytest.raises(BitranslationError, match="L\\^2=id"):
            from_bitranslation(inner_bitranslation(z3, 1))

    @pytest.mark.parametrize("fixture", ["w4", "ex46"])
    def test_decompose_then_rebuild(self, fixture: str, request: pytest.FixtureRequest) -> None:
        witness: WMonoidWitness = request.getfixturevalue(fixture)
        assert from_bitranslation(decompose(witness)).op == witness.monoid.op


class TestEnumerateBitranslations:
    """Tests for enumerate_bitranslations."""

    def test_lz2_has_exactly_one(self, left_zero: BinaryOpDesc) -> None:
        found = enumerate_bitranslations(left_zero)
        assert [(bt.left, bt.right) for bt in found] == [((1, 0), (0, 1))]

    def test_every_result_builds_a_w_monoid(self) -> None:
        carrier = load_fixture("ex46-s").binary()
        found = enumerate_bitranslations(carrier)
        assert found
        for bt in found:
            assert isinstance(check_w_monoid(from_bitranslation(bt)), WMonoidWitness)

    def test_cap(self, left_zero: BinaryOpDesc) -> None:
        with pytest.raises(EnumerationCapError):
            enumerate_bitranslations(left_zero, max_order=1)


class TestInSemigroupFromWMonoid:
    """Tests for in_semigroup_from_w_monoid."""

    def test_w4_ternary(self, w4: WMonoidWitness) -> None:
        op = in_semigroup_from_w_monoid(w4, 3)
        assert (op.order, op.arity) == (3, 3)

    def test_ex46_quinary_is_in(self, ex46: WMonoidWitness) -> None:
        op = in_semigroup_from_w_monoid(ex46, 5)
        assert isinstance(op, FiniteNaryOp)
        assert (op.order, op.arity) == (5, 5)

    def test_ex46_ternary_is_in(self, ex46: WMonoidWitness) -> None:
        assert is_in_semigroup(in_semigroup_from_w_monoid(ex46, 3)).is_yes

    def test_even_arity(self, w4: WMonoidWitness) -> None:
        with pytest.raises(EvenArityError):
            in_semigroup_from_w_monoid(w4, 4)

    def test_arity_one(self, w4: WMonoidWitness) -> None:
        with pytest.raises(ValueError, match="at least 3"):
            in_semigroup_from_w_monoid(w4, 1)
