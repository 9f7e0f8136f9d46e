"""Tests for the brute-force oracles."""

import numpy as np
import pytest

from polyadic_semigroups.config import AlgebraConfig
from polyadic_semigroups.core import BinaryOpDesc, FiniteNaryOp, nary_extension
from polyadic_semigroups.core.errors import OracleTooLargeError
from polyadic_semigroups.search import brute_force_reductions
from polyadic_semigroups.search.oracles import batched_folds, code_digits, iter_tables


class TestTableIteration:
    """Tests for the chunked table iterator."""

    def test_code_digits_most_significant_first(self) -> None:
        assert code_digits(np.array([5]), 2, 3).tolist() == [[1, 0, 1]]

    def test_iter_tables_covers_everything_once(self) -> None:
        chunks = list(iter_tables(2, 4, chunk=5))
        tables = np.concatenate(chunks)
        assert tables.shape == (16, 4)
        assert len({tuple(t) for t in tables.tolist()}) == 16

    def test_batched_folds_match_extension(self, add3: BinaryOpDesc) -> None:
        folds = batched_folds(np.array([add3.tolist()]), 3, 3, 4)
        assert folds[0].tolist() == nary_extension(add3, 4).tolist()


class TestOracleCap:
    """The oracles refuse carriers above oracle_max_order."""

    def test_order_above_cap(self) -> None:
        op = FiniteNaryOp(4, 3, [0] * 64)
        with pytest.raises(OracleTooLargeError):
            brute_force_reductions(op)

    def test_cap_comes_from_config(
        self, extz2: FiniteNaryOp, monkeypatch: pytest.MonkeyPatch
    ) -> None:
        from polyadic_semigroups.search import oracles

        monkeypatch.setattr(oracles, "get_config", lambda: AlgebraConfig(oracle_max_order=1))
        with pytest.raises(OracleTooLargeError, match="limited to order 1"):
            brute_force_reductions(extz2)
