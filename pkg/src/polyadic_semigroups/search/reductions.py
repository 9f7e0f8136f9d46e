"""Deciding reducibility: is F the left fold of an associative binary table?"""

import numpy as np

from polyadic_semigroups.config import get_config
from polyadic_semigroups.context import SearchContext
from polyadic_semigroups.core.associativity import check_associativity
from polyadic_semigroups.core.errors import AlgebraError, NotAssociativeError, UndecidedError
from polyadic_semigroups.core.tables import BinaryOpDesc, FiniteNaryOp
from polyadic_semigroups.hooks import SearchHooks
from polyadic_semigroups.search.engine import UNKNOWN, CompletionProblem, solve
from polyadic_semigroups.search.outcome import SearchOutcome


def require_associative(op: FiniteNaryOp) -> None:
    counterexample = check_associativity(op)
    if counterexample is not None:
        raise NotAssociativeError(
            f"operation fails the identity at position {counterexample.position} "
            f"for arguments {counterexample.arguments}"
        )


def require_positive_limit(limit: int | None) -> None:
    """A limit below 1 would report an empty, exhausted search."""
    if limit is not None and limit < 1:
        raise AlgebraError(f"limit must be at least 1, got {limit}")


def find_reductions(
    op: FiniteNaryOp,
    limit: int | None = None,
    *,
    timeout_secs: float | None = None,
    first_fail: bool | None = None,
    jobs: int | None = None,
    hooks: SearchHooks | None = None,
) -> SearchOutcome[BinaryOpDesc]:
    """Every associative binary b whose arity-n extension is `op`.

    Args:
        op: An associative n-ary operation.
        limit: Stop after this many solutions (None for all).
        timeout_secs: Deadline for the search; falls back to the config.
        first_fail: Branch on the busiest row first instead of lexicographically.
        jobs: Worker processes for the root branching.
        hooks: Progress hooks.

    Returns:
        Solutions in lexicographic table order. exhausted is False iff the
        deadline was hit.
    """
    require_positive_limit(limit)
    require_associative(op)
    config = get_config()
    k = op.order
    context = SearchContext(
        label=f"reductions(order={k}, arity={op.arity})",
        limit=limit,
        timeout_secs=timeout_secs if timeout_secs is not None else config.timeout_secs,
        hooks=hooks,
    )
    problem = CompletionProblem.for_target(
        op, size=k, initial=np.full((k, k), UNKNOWN, dtype=np.int64)
    )
    tables = solve(
        problem,
        context,
        first_fail=config.first_fail if first_fail is None else first_fail,
        jobs=jobs if jobs is not None else config.jobs,
    )
    return SearchOutcome(
        solutions=tuple(BinaryOpDesc(op.universe, t.reshape(-1)) for t in tables),
        exhausted=not context.timed_out,
        nodes_visited=context.nodes,
        elapsed=context.elapsed(),
        limit=limit,
    )


def is_reducible(op: FiniteNaryOp, *, timeout_secs: float | None = None) -> bool:
    """Raises UndecidedError if the search times out before finding a reduction."""
    outcome = find_reductions(op, limit=1, timeout_secs=timeout_secs)
    if outcome.solutions:
        return True
    if not outcome.exhausted:
        raise UndecidedError(
            f"reduction search timed out after {outcome.nodes_visited} nodes"
        )
    return False


def is_irreducible(op: FiniteNaryOp, *, timeout_secs: float | None = None) -> bool:
    return not is_reducible(op, timeout_secs=timeout_secs)
