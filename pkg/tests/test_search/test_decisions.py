"""Tests for the IN-semigroup decision."""

import pytest

from polyadic_semigroups.core import BinaryOpDesc, FiniteNaryOp
from polyadic_semigroups.search import SearchOutcome, is_in_semigroup
from polyadic_semigroups.search import decisions as decisions_module
from polyadic_semigroups.wmonoid import WMonoidWitness, in_semigroup_from_w_monoid


def _timed_out(*args: object, **kwargs: object) -> SearchOutcome[BinaryOpDesc]:
    return SearchOutcome(solutions=(), exhausted=False, nodes_visited=256)


class TestIsInSemigroup:
    """Tests for is_in_semigroup."""

    def test_aff3_has_no_adjunction(self, aff3: FiniteNaryOp) -> None:
        verdict = is_in_semigroup(aff3)
        assert verdict.status == "no"
        assert verdict.reason == "no adjunction"
        assert verdict.witness is None

    def test_extz2_is_reducible(self, extz2: FiniteNaryOp) -> None:
        verdict = is_in_semigroup(extz2)
        assert verdict.status == "no"
        assert verdict.reason == "reducible"
        assert verdict.adjunctions is None

    def test_w4_restriction_is_in(self, w4: WMonoidWitness) -> None:
        verdict = is_in_semigroup(in_semigroup_from_w_monoid(w4, 3))
        assert verdict.is_yes
        assert verdict.witness is not None
        assert verdict.witness.neutral == 3

    def test_empty_adjunctions_decide_despite_reduction_timeout(
        self, aff3: FiniteNaryOp, monkeypatch: pytest.MonkeyPatch
    ) -> None:
        monkeypatch.setattr(decisions_module, "find_reductions", _timed_out)
        verdict = is_in_semigroup(aff3)
        assert verdict.status == "no"
        assert verdict.reason == "no adjunction"

    def test_reduction_timeout_with_adjunction_is_undecided(
        self, w4: WMonoidWitness, monkeypatch: pytest.MonkeyPatch
    ) -> None:
        monkeypatch.setattr(decisions_module, "find_reductions", _timed_out)
        verdict = is_in_semigroup(in_semigroup_from_w_monoid(w4, 3))
        assert verdict.status == "undecided"
        assert verdict.reason == "reduction search timed out"
