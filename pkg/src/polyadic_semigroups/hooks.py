"""Hooks for progress output and observability."""

import time
from typing import TYPE_CHECKING

from rich.console import Console
from rich.markup import escape

if TYPE_CHECKING:
    from polyadic_semigroups.context import SearchContext

console = Console(stderr=True)


class SearchHooks:
    """Hooks for the lifecycle of one search run."""

    def __init__(self, verbose: bool = False):
        self.verbose = verbose

    def on_search_start(self, context: "SearchContext") -> None:
        """Called before the first node is visited."""
        if self.verbose:
            limit = "unlimited" if context.limit is None else str(context.limit)
            console.print(f"[dim]Starting {context.label} (limit {limit})[/dim]")

    def on_solution(self, context: "SearchContext") -> None:
        """Called for every solution, in discovery order."""
        if self.verbose:
            console.print(
                f"[dim]  {context.label}: solution {context.solutions} "
                f"after {context.nodes} nodes[/dim]"
            )

    def on_search_end(self, context: "SearchContext") -> None:
        """Called when the run completes, is truncated or times out."""
        if self.verbose:
            elapsed = context.elapsed().total_seconds()
            status = "timed out" if context.timed_out else "completed"
            console.print(
                f"[dim]{context.label} {status} in {elapsed:.2f}s: "
                f"{context.solutions} solutions, {context.nodes} nodes[/dim]"
            )


class StageHooks:
    """Hooks for the stages of a verification run."""

    def __init__(self, verbose: bool = False):
        self.verbose = verbose
        self._started: dict[str, float] = {}

    def on_stage_start(self, name: str) -> None:
        self._started[name] = time.time()
        if self.verbose:
            console.print(f"[cyan]Stage {escape(f'[{name}]')} starting...[/cyan]")

    def on_stage_end(self, name: str, verdict: str) -> None:
        start = self._started.pop(name, None)
        if self.verbose:
            elapsed = f" in {time.time() - start:.2f}s" if start is not None else ""
            console.print(f"[cyan]Stage {escape(f'[{name}]')} {verdict}{elapsed}[/cyan]")
