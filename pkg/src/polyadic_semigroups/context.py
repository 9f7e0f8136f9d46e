"""Context management for passing state through a search run."""

import time
from dataclasses import dataclass, field
from datetime import timedelta
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from polyadic_semigroups.hooks import SearchHooks

# How many nodes to visit between clock reads
_CLOCK_STRIDE = 256


@dataclass
class SearchContext:
    """
    State shared between the search engine and its hooks.

    One context per decision; nothing in here outlives the run.
    """

    # Request parameters
    label: str = "search"
    limit: int | None = None
    timeout_secs: float | None = None

    # Observability
    hooks: "SearchHooks | None" = None

    # Run state (updated by the engine)
    nodes: int = 0
    solutions: int = 0
    timed_out: bool = False
    started: float = field(default_factory=time.monotonic)

    def tick(self) -> bool:
        """Count a node; True once the deadline has passed."""
        self.nodes += 1
        if self.timeout_secs is not None and self.nodes % _CLOCK_STRIDE == 0:
            if time.monotonic() - self.started > self.timeout_secs:
                self.timed_out = True
        return self.timed_out

    def found(self) -> bool:
        """Record a solution; True once the limit is reached."""
        self.solutions += 1
        if self.hooks:
            self.hooks.on_solution(self)
        return self.limit is not None and self.solutions >= self.limit

    def elapsed(self) -> timedelta:
        return timedelta(seconds=time.monotonic() - self.started)
