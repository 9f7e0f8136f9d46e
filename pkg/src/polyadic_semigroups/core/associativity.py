"""The n-ary associativity identities, checked exhaustively.

For an arity-n operation F and every (2n-1)-tuple x1..x_{2n-1}, the identity at
position i (1 <= i <= n-1) compares

    F(x1..x_{i-1}, F(x_i..x_{i+n-1}), x_{i+n}..x_{2n-1})
    F(x1..x_i, F(x_{i+1}..x_{i+n}), x_{i+n+1}..x_{2n-1})

All positions are checked; nothing relies on a reduced identity set.
"""

from dataclasses import dataclass

import numpy as np

from polyadic_semigroups.core.errors import CapExceededError
from polyadic_semigroups.core.tables import (
    BinaryOpDesc,
    FiniteNaryOp,
    IntArray,
    binary_is_associative,
    unflat_index,
)


# Argument tuples evaluated per step of the exhaustive check
CHUNK_SIZE = 2**20


@dataclass(frozen=True)
class AssocCounterexample:
    """First failing instance of the identity system."""

    position: int
    arguments: tuple[int, ...]
    lhs: int
    rhs: int

    def reevaluate(self, op: FiniteNaryOp) -> tuple[int, int]:
        """Recompute both sides of the identity at (position, arguments)."""
        return (
            _nested(op, self.arguments, self.position - 1),
            _nested(op, self.arguments, self.position),
        )


def _nested(op: FiniteNaryOp, args: tuple[int, ...], j: int) -> int:
    n = op.arity
    inner = op.apply(args[j : j + n])
    return op.apply(args[:j] + (inner,) + args[j + n :])


def _default_identity_cap() -> int:
    from polyadic_semigroups.config import get_config

    return get_config().identity_cap


def side_values(
    tables: IntArray,
    order: int,
    arity: int,
    j: int,
    start: int = 0,
    stop: int | None = None,
) -> IntArray:
    """Evaluate the nested term with the inner operation at 0-based slot `j`.

    `tables` has shape (N, order**arity); entries equal to -1 are unknown and
    propagate as -1. Returns shape (N, stop - start), one column per argument
    tuple index in [start, stop), row-major order. `stop` defaults to
    order**(2*arity-1).
    """
    n = arity
    if stop is None:
        stop = order ** (2 * n - 1)
    t = np.arange(start, stop, dtype=np.int64)
    prefix = t // order ** (2 * n - 1 - j)
    inner_idx = (t // order ** (n - 1 - j)) % order**n
    suffix = t % order ** (n - 1 - j)
    base = prefix * order ** (n - j) + suffix
    weight = order ** (n - 1 - j)

    inner = tables[:, inner_idx]
    known = inner >= 0
    outer_idx = base[None, :] + np.where(known, inner, 0) * weight
    values = np.take_along_axis(tables, outer_idx, axis=1)
    return np.where(known, values, -1)


def associative_mask(tables: IntArray, order: int, arity: int) -> IntArray:
    """Per table: True unless some fully known identity instance fails.

    With no unknown (-1) entries this is exactly "the table is associative".
    """
    sides = [side_values(tables, order, arity, j) for j in range(arity)]
    ok = np.ones(tables.shape[0], dtype=bool)
    for left, right in zip(sides, sides[1:]):
        clash = (left >= 0) & (right >= 0) & (left != right)
        ok &= ~clash.any(axis=1)
    return ok


def check_associativity(
    op: FiniteNaryOp, *, identity_cap: int | None = None
) -> AssocCounterexample | None:
    """None if `op` is associative, else the lexicographically first failure."""
    n, order = op.arity, op.order
    instances = order ** (2 * n - 1)
    cap = identity_cap if identity_cap is not None else _default_identity_cap()
    if instances > cap:
        raise CapExceededError("the associativity check", instances, cap)

    tables = op.table.reshape(1, -1)
    # first failure per position; chunks run in tuple order, so the first hit is minimal
    found: dict[int, tuple[int, int, int]] = {}
    for start in range(0, instances, CHUNK_SIZE):
        stop = min(start + CHUNK_SIZE, instances)
        # positions at or above the earliest failing one can no longer win
        top = min(found, default=n)
        if top == 1:
            break
        sides = [side_values(tables, order, n, j, start, stop)[0] for j in range(top)]
        for i in range(1, top):
            diff = np.flatnonzero(sides[i - 1] != sides[i])
            if diff.size:
                k = int(diff[0])
                found[i] = (start + k, int(sides[i - 1][k]), int(sides[i][k]))
                break
    if not found:
        return None
    position = min(found)
    t, lhs, rhs = found[position]
    return AssocCounterexample(
        position=position,
        arguments=unflat_index(order, 2 * n - 1, t),
        lhs=lhs,
        rhs=rhs,
    )


def is_associative(op: FiniteNaryOp) -> bool:
    if isinstance(op, BinaryOpDesc):
        return binary_is_associative(op.matrix)
    return check_associativity(op) is None


def is_associative_binary(op: BinaryOpDesc) -> bool:
    return binary_is_associative(op.matrix)
