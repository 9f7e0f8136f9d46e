"""Deciding whether a neutral element can be adjoined to an n-ary semigroup.

Any valid extension F* to X + {e} with e neutral is the n-ary extension of
the monoid x * y = F*(x, e, ..., e, y), so the search space is the set of
monoid tables on X + {e} with e's row and column fixed to the identity.
"""

import numpy as np

from polyadic_semigroups.config import get_config
from polyadic_semigroups.context import SearchContext
from polyadic_semigroups.core.tables import BinaryOpDesc, FiniteNaryOp, IntArray, MonoidDesc
from polyadic_semigroups.hooks import SearchHooks
from polyadic_semigroups.search.engine import UNKNOWN, CompletionProblem, solve
from polyadic_semigroups.search.outcome import SearchOutcome
from polyadic_semigroups.search.reductions import require_associative, require_positive_limit


def adjunction_start(order: int) -> IntArray:
    """(order+1)^2 table with the new element's row and column filled in."""
    m = order + 1
    start = np.full((m, m), UNKNOWN, dtype=np.int64)
    start[order, :] = np.arange(m)
    start[:, order] = np.arange(m)
    return start


def find_adjunctions(
    op: FiniteNaryOp,
    limit: int | None = None,
    *,
    timeout_secs: float | None = None,
    first_fail: bool | None = None,
    jobs: int | None = None,
    hooks: SearchHooks | None = None,
) -> SearchOutcome[MonoidDesc]:
    """Monoids on order+1 elements whose n-ary extension restricts to `op`.

    The neutral element of every solution is the index `op.order`.
    """
    require_positive_limit(limit)
    require_associative(op)
    config = get_config()
    k = op.order
    context = SearchContext(
        label=f"adjunctions(order={k}, arity={op.arity})",
        limit=limit,
        timeout_secs=timeout_secs if timeout_secs is not None else config.timeout_secs,
        hooks=hooks,
    )
    problem = CompletionProblem.for_target(op, size=k + 1, initial=adjunction_start(k))
    tables = solve(
        problem,
        context,
        first_fail=config.first_fail if first_fail is None else first_fail,
        jobs=jobs if jobs is not None else config.jobs,
    )
    universe = op.universe.extended("e")
    return SearchOutcome(
        solutions=tuple(
            MonoidDesc(BinaryOpDesc(universe, t.reshape(-1)), k) for t in tables
        ),
        exhausted=not context.timed_out,
        nodes_visited=context.nodes,
        elapsed=context.elapsed(),
        limit=limit,
    )
