"""Propagating backtracking search over binary table completions.

Both decision procedures reduce to the same problem: complete an m x m binary
table b so that it is associative and its n-fold left fold, restricted to the
old carrier {0..k-1}, equals a given arity-n table F. Reductions use m = k;
adjunctions use m = k + 1 with the new element's row and column pre-filled.

Propagation ("row forcing"): whenever an (n-1)-prefix over the old carrier has
a known fold p, the whole old-carrier part of row p is determined, since
b[p][z] = F(prefix, z) for every z. Each assignment therefore tends to fix
entire rows.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from polyadic_semigroups.context import SearchContext
from polyadic_semigroups.core.associativity import associative_mask
from polyadic_semigroups.core.tables import FiniteNaryOp, IntArray

UNKNOWN = -1


@dataclass(frozen=True)
class CompletionProblem:
    """An m x m table to complete against an arity-n target on k elements."""

    size: int
    carrier: int
    arity: int
    target_rows: IntArray
    initial: IntArray

    @classmethod
    def for_target(cls, op: FiniteNaryOp, size: int, initial: IntArray) -> "CompletionProblem":
        k = op.order
        rows = op.table.reshape(k ** (op.arity - 1), k)
        return cls(size=size, carrier=k, arity=op.arity, target_rows=rows, initial=initial)

    def prefix_folds(self, b: IntArray, length: int) -> IntArray:
        """Folds of all old-carrier tuples of `length`; -1 where unknown."""
        k, m = self.carrier, self.size
        acc = np.arange(k, dtype=np.int64)
        column = np.arange(k, dtype=np.int64)
        for _ in range(length - 1):
            known = acc >= 0
            idx = np.where(known, acc, 0)[:, None] * m + column[None, :]
            acc = np.where(known[:, None], b.reshape(-1)[idx], UNKNOWN).reshape(-1)
        return acc

    def propagate(self, b: IntArray) -> bool:
        """Apply row forcing to a fixpoint in place; False on a conflict."""
        k = self.carrier
        while True:
            prefix = self.prefix_folds(b, self.arity - 1)
            known = prefix >= 0
            rows = prefix[known]
            wanted = self.target_rows[known]
            current = b[rows, :k]
            if np.any((current >= 0) & (current != wanted)):
                return False
            r_idx, z_idx = np.nonzero(current < 0)
            if r_idx.size == 0:
                return True
            # duplicates with different targets are caught on the next pass
            b[rows[r_idx], z_idx] = wanted[r_idx, z_idx]

    def consistent(self, b: IntArray) -> bool:
        """Propagate, then scan every fully known associativity triple."""
        if not self.propagate(b):
            return False
        return bool(associative_mask(b.reshape(1, -1), self.size, 2)[0])

    def satisfied(self, b: IntArray) -> bool:
        """Full check of a complete table."""
        folds = self.prefix_folds(b, self.arity)
        return bool(np.array_equal(folds, self.target_rows.reshape(-1))) and bool(
            associative_mask(b.reshape(1, -1), self.size, 2)[0]
        )

    def choose(self, b: IntArray, first_fail: bool) -> tuple[int, int] | None:
        """Next cell to branch on: lexicographic, or busiest row first."""
        free = np.argwhere(b < 0)
        if free.size == 0:
            return None
        if not first_fail:
            return int(free[0][0]), int(free[0][1])
        assigned = (b >= 0).sum(axis=1)
        row = int(max(np.unique(free[:, 0]), key=lambda r: (assigned[r], -r)))
        col = int(free[free[:, 0] == row][0][1])
        return row, col


def _dfs(
    problem: CompletionProblem,
    b: IntArray,
    context: SearchContext,
    first_fail: bool,
    out: list[IntArray],
) -> bool:
    """Depth-first completion; True means stop (limit reached or timed out)."""
    if context.tick():
        return True
    if not problem.consistent(b):
        return False
    cell = problem.choose(b, first_fail)
    if cell is None:
        assert problem.satisfied(b), "propagation accepted an invalid table"
        out.append(b.copy())
        return context.found()
    for value in range(problem.size):
        child = b.copy()
        child[cell] = value
        if _dfs(problem, child, context, first_fail, out):
            return True
    return False


def _run_branch(
    problem: CompletionProblem,
    start: IntArray,
    limit: int | None,
    timeout_secs: float | None,
    first_fail: bool,
) -> tuple[list[IntArray], int, bool]:
    context = SearchContext(label="branch", limit=limit, timeout_secs=timeout_secs)
    out: list[IntArray] = []
    _dfs(problem, start, context, first_fail, out)
    return out, context.nodes, context.timed_out


def solve(
    problem: CompletionProblem,
    context: SearchContext,
    *,
    first_fail: bool = False,
    jobs: int = 1,
) -> list[IntArray]:
    """All completions (up to context.limit), sorted lexicographically.

    With jobs > 1 the values of the first branching cell are searched in
    separate processes; results are merged into the same deterministic order.
    """
    if context.hooks:
        context.hooks.on_search_start(context)

    root = problem.initial.copy()
    out: list[IntArray] = []
    if jobs > 1 and problem.consistent(root) and (cell := problem.choose(root, first_fail)):
        context.nodes += 1
        starts = []
        for value in range(problem.size):
            child = root.copy()
            child[cell] = value
            starts.append(child)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [
                pool.submit(
                    _run_branch,
                    problem,
                    start,
                    context.limit,
                    context.timeout_secs,
                    first_fail,
                )
                for start in starts
            ]
            for future in futures:
                found, nodes, timed_out = future.result()
                out.extend(found)
                context.nodes += nodes
                context.timed_out |= timed_out
        context.solutions = len(out)
    else:
        _dfs(problem, root, context, first_fail, out)

    out.sort(key=lambda t: t.reshape(-1).tolist())
    if context.limit is not None:
        out = out[: context.limit]
    context.solutions = len(out)
    if context.hooks:
        context.hooks.on_search_end(context)
    return out
