"""Result types shared by the decision procedures."""

from dataclasses import dataclass, field
from datetime import timedelta
from typing import Generic, Literal, TypeVar

from polyadic_semigroups.core.tables import BinaryOpDesc, MonoidDesc

T = TypeVar("T", BinaryOpDesc, MonoidDesc)


@dataclass(frozen=True)
class SearchOutcome(Generic[T]):
    """What a reduction or adjunction search found.

    `exhausted` is False only when the deadline cut the run short. A run that
    stops at its solution limit is still exhausted: the solutions it returns
    are complete up to that limit.
    """

    solutions: tuple[T, ...]
    exhausted: bool
    nodes_visited: int
    elapsed: timedelta = field(default_factory=timedelta)
    limit: int | None = None

    @property
    def certified_empty(self) -> bool:
        """True iff the search proves there is no solution at all."""
        return self.exhausted and not self.solutions

    @property
    def tables(self) -> list[list[int]]:
        return [
            (s.op if isinstance(s, MonoidDesc) else s).tolist() for s in self.solutions
        ]


Status = Literal["yes", "no", "undecided"]


@dataclass(frozen=True)
class InSemigroupVerdict:
    """Answer to "is F an IN-semigroup?".

    reason is "reducible" or "no adjunction" for a No, and names the
    sub-search that timed out for an Undecided.
    """

    status: Status
    witness: MonoidDesc | None = None
    reason: str | None = None
    reductions: SearchOutcome[BinaryOpDesc] | None = None
    adjunctions: SearchOutcome[MonoidDesc] | None = None

    @property
    def is_yes(self) -> bool:
        return self.status == "yes"
