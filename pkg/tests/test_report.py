"""Tests for command reports and the exit-code contract."""

import json
from datetime import timedelta

import pytest

from polyadic_semigroups.core import BinaryOpDesc
from polyadic_semigroups.report import CommandReport, search_data, search_verdict
from polyadic_semigroups.search import SearchOutcome


class TestCommandReport:
    """Tests for CommandReport."""

    @pytest.mark.parametrize(
        ("verdict", "code"), [("pass", 0), ("fail", 1), ("error", 2), ("undecided", 3)]
    )
    def test_exit_codes(self, verdict: str, code: int) -> None:
        report = CommandReport(command="x", verdict=verdict)  # type: ignore[arg-type]
        assert report.exit_code == code

    def test_json_block_leads_with_command_and_verdict(self) -> None:
        report = CommandReport(command="neutrals", verdict="pass", data={"neutrals": [0]})
        block = json.loads(report.json_block())
        assert list(block) == ["command", "verdict", "neutrals"]
        assert block["neutrals"] == [0]


class TestSearchVerdict:
    """Tests for search_verdict and search_data."""

    def _outcome(self, solutions: int, exhausted: bool) -> SearchOutcome[BinaryOpDesc]:
        found = tuple(BinaryOpDesc(2, [0, 1, 1, 0]) for _ in range(solutions))
        return SearchOutcome(
            found, exhausted, nodes_visited=10, elapsed=timedelta(seconds=0.5), limit=None
        )

    def test_found(self) -> None:
        assert search_verdict(self._outcome(1, True)) == "pass"
        assert search_verdict(self._outcome(1, False)) == "pass"

    def test_certified_empty(self) -> None:
        assert search_verdict(self._outcome(0, True)) == "fail"

    def test_timed_out(self) -> None:
        assert search_verdict(self._outcome(0, False)) == "undecided"

    def test_unwanted_solutions(self) -> None:
        assert search_verdict(self._outcome(1, True), want_solutions=False) == "fail"
        assert search_verdict(self._outcome(0, True), want_solutions=False) == "pass"

    def test_search_data(self) -> None:
        data = search_data(self._outcome(1, True))
        assert data == {
            "solutions": 1,
            "exhausted": True,
            "nodes_visited": 10,
            "elapsed_secs": 0.5,
            "limit": None,
            "tables": [[0, 1, 1, 0]],
        }
