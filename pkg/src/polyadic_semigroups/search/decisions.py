"""The IN-semigroup decision: irreducible, yet a neutral element can be adjoined."""

from polyadic_semigroups.core.tables import FiniteNaryOp
from polyadic_semigroups.hooks import SearchHooks
from polyadic_semigroups.search.adjunctions import find_adjunctions
from polyadic_semigroups.search.outcome import InSemigroupVerdict
from polyadic_semigroups.search.reductions import find_reductions


def is_in_semigroup(
    op: FiniteNaryOp,
    *,
    timeout_secs: float | None = None,
    jobs: int | None = None,
    hooks: SearchHooks | None = None,
) -> InSemigroupVerdict:
    """Decide whether `op` is an IN-semigroup.

    A found reduction answers No("reducible") outright, and an exhausted empty
    adjunction search answers No("no adjunction") even if the reduction search
    timed out. Yes needs both searches to finish.
    """
    reductions = find_reductions(op, 1, timeout_secs=timeout_secs, jobs=jobs, hooks=hooks)
    if reductions.solutions:
        return InSemigroupVerdict("no", reason="reducible", reductions=reductions)

    adjunctions = find_adjunctions(op, 1, timeout_secs=timeout_secs, jobs=jobs, hooks=hooks)
    if adjunctions.certified_empty:
        return InSemigroupVerdict(
            "no", reason="no adjunction", reductions=reductions, adjunctions=adjunctions
        )
    if not reductions.exhausted:
        return InSemigroupVerdict(
            "undecided",
            reason="reduction search timed out",
            reductions=reductions,
            adjunctions=adjunctions,
        )
    if not adjunctions.solutions:
        return InSemigroupVerdict(
            "undecided",
            reason="adjunction search timed out",
            reductions=reductions,
            adjunctions=adjunctions,
        )
    return InSemigroupVerdict(
        "yes",
        witness=adjunctions.solutions[0],
        reductions=reductions,
        adjunctions=adjunctions,
    )
