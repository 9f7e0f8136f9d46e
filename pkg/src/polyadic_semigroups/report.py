"""Command results and the exit-code contract of the `alg` CLI."""

import json
from typing import Any, Literal

from pydantic import BaseModel, Field

from polyadic_semigroups.search.outcome import SearchOutcome

Verdict = Literal["pass", "fail", "undecided", "error"]

EXIT_CODES: dict[Verdict, int] = {
    "pass": 0,
    "fail": 1,
    "error": 2,
    "undecided": 3,
}


class CommandReport(BaseModel):
    """What one command found.

    `detail` is the human-readable text; `data` is emitted as JSON after a
    `---` separator and is what scripts should read.
    """

    command: str
    verdict: Verdict
    detail: list[str] = Field(default_factory=list)
    data: dict[str, Any] = Field(default_factory=dict)

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.verdict]

    def json_block(self) -> str:
        return json.dumps({"command": self.command, "verdict": self.verdict, **self.data}, indent=2)


def search_data(outcome: SearchOutcome[Any]) -> dict[str, Any]:
    """JSON fields common to every search command."""
    return {
        "solutions": len(outcome.solutions),
        "exhausted": outcome.exhausted,
        "nodes_visited": outcome.nodes_visited,
        "elapsed_secs": round(outcome.elapsed.total_seconds(), 4),
        "limit": outcome.limit,
        "tables": outcome.tables,
    }


def search_verdict(outcome: SearchOutcome[Any], *, want_solutions: bool = True) -> Verdict:
    """pass when the search produced what was asked for, undecided on a timeout."""
    if outcome.solutions:
        return "pass" if want_solutions else "fail"
    if not outcome.exhausted:
        return "undecided"
    return "fail" if want_solutions else "pass"
