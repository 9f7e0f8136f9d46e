"""Tests for the n-ary associativity check."""

import numpy as np
import pytest

from polyadic_semigroups.core import (
    BinaryOpDesc,
    FiniteNaryOp,
    check_associativity,
    is_associative,
    is_associative_binary,
    nary_extension,
)
from polyadic_semigroups.core import associativity as associativity_module
from polyadic_semigroups.core.associativity import associative_mask
from polyadic_semigroups.core.errors import CapExceededError
from polyadic_semigroups.enumerate import enumerate_semigroups


class TestCheckAssociativity:
    """Tests for check_associativity."""

    def test_aff3_is_associative(self, aff3: FiniteNaryOp) -> None:
        assert check_associativity(aff3) is None

    def test_first_projection_is_associative(self) -> None:
        projection = FiniteNaryOp(2, 3, [x for x in range(2) for _ in range(4)])
        assert check_associativity(projection) is None

    def test_broken_aff3_reports_first_failure(self, aff3: FiniteNaryOp) -> None:
        """F(F(0,0,0),0,0) = F(1,0,0) = 1 but F(0,F(0,0,0),0) = F(0,1,0) = 2."""
        table = aff3.tolist()
        table[0] = 1
        broken = FiniteNaryOp(3, 3, table)
        found = check_associativity(broken)
        assert found is not None
        assert found.position == 1
        assert found.arguments == (0, 0, 0, 0, 0)
        assert (found.lhs, found.rhs) == (1, 2)
        assert found.reevaluate(broken) == (found.lhs, found.rhs)

    def test_identity_cap(self, aff3: FiniteNaryOp) -> None:
        with pytest.raises(CapExceededError):
            check_associativity(aff3, identity_cap=10)

    def test_is_associative_binary(self, add3: BinaryOpDesc) -> None:
        assert is_associative_binary(add3)
        assert not is_associative_binary(BinaryOpDesc(2, [1, 0, 0, 0]))

    def test_is_associative_dispatches_on_binary(self, add3: BinaryOpDesc) -> None:
        assert is_associative(add3)

    def test_chunked_scan_matches_single_pass(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """Small chunks find the same (position, tuple) as one pass over everything."""
        ops = [
            FiniteNaryOp(2, 3, [(code >> k) & 1 for k in range(8)]) for code in range(256)
        ]
        expected = [check_associativity(op) for op in ops]
        monkeypatch.setattr(associativity_module, "CHUNK_SIZE", 5)
        assert [check_associativity(op) for op in ops] == expected

    def test_one_tuple_per_chunk_agrees(
        self, aff3: FiniteNaryOp, monkeypatch: pytest.MonkeyPatch
    ) -> None:
        table = aff3.tolist()
        table[26] = 0
        broken = FiniteNaryOp(3, 3, table)
        expected = check_associativity(broken)
        monkeypatch.setattr(associativity_module, "CHUNK_SIZE", 1)
        found = check_associativity(broken)
        assert found == expected
        assert found is not None
        assert found.reevaluate(broken) == (found.lhs, found.rhs)

    def test_arity_12_completes_in_chunks(self) -> None:
        """2**23 argument tuples, walked without materialising every side at once."""
        constant = FiniteNaryOp(2, 12, [0] * 2**12)
        assert check_associativity(constant) is None


class TestAssociativeMask:
    """Tests for the batched, partially known check."""

    def test_unknown_table_is_consistent(self) -> None:
        tables = np.full((1, 8), -1, dtype=np.int64)
        assert associative_mask(tables, 2, 3)[0]

    def test_batch_matches_single_checks(self, aff3: FiniteNaryOp) -> None:
        broken = aff3.tolist()
        broken[0] = 1
        tables = np.array([aff3.tolist(), broken], dtype=np.int64)
        assert associative_mask(tables, 3, 3).tolist() == [True, False]

    def test_known_clash_is_caught_with_unknowns(self, aff3: FiniteNaryOp) -> None:
        """Only the cells the clash needs are filled in."""
        partial = np.full(27, -1, dtype=np.int64)
        partial[0] = 1  # F(0,0,0)
        partial[9] = 1  # F(1,0,0)
        partial[3] = 2  # F(0,1,0)
        assert not associative_mask(partial.reshape(1, -1), 3, 3)[0]


class TestExtensionSoundness:
    """Extensions of semigroups are associative."""

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_order_up_to_3(self, n: int) -> None:
        for order in range(1, 4):
            for b in enumerate_semigroups(order):
                assert check_associativity(nary_extension(b, n)) is None

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_order_4(self, n: int) -> None:
        for b in enumerate_semigroups(4):
            assert check_associativity(nary_extension(b, n)) is None
