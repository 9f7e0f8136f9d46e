"""n-ary extensions of binary operations, reductions and restrictions."""

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from polyadic_semigroups.core.errors import (
    CapExceededError,
    ElementRangeError,
    UniverseMismatchError,
)
from polyadic_semigroups.core.tables import (
    BinaryOpDesc,
    FiniteNaryOp,
    IntArray,
    MonoidDesc,
)


def _default_cell_cap() -> int:
    from polyadic_semigroups.config import get_config

    return get_config().cell_cap


def fold_array(matrix: IntArray, length: int) -> IntArray:
    """Left folds of all `length`-tuples, shaped order x ... x order."""
    order = matrix.shape[0]
    column = np.arange(order)
    acc = column.copy()
    for _ in range(length - 1):
        acc = matrix[acc[..., None], column]
    return acc


def nary_extension(
    b: BinaryOpDesc | MonoidDesc, n: int, *, cell_cap: int | None = None
) -> FiniteNaryOp:
    """F(x1,...,xn) = (...((x1 o x2) o x3)...) o xn."""
    op = b.op if isinstance(b, MonoidDesc) else b
    if n < 2:
        raise ValueError(f"arity must be at least 2, got {n}")
    cells = op.order**n
    cap = cell_cap if cell_cap is not None else _default_cell_cap()
    if cells > cap:
        raise CapExceededError(f"the {n}-ary extension", cells, cap)
    return FiniteNaryOp(op.universe, n, fold_array(op.matrix, n).reshape(-1), cell_cap=cap)


def is_reduction(op: FiniteNaryOp, b: BinaryOpDesc) -> bool:
    """True iff the arity-n extension of `b` is exactly `op`."""
    if op.order != b.order:
        raise UniverseMismatchError(
            f"operation has order {op.order} but the binary table has order {b.order}"
        )
    return bool(np.array_equal(fold_array(b.matrix, op.arity).reshape(-1), op.table))


@dataclass(frozen=True)
class NotClosed:
    """A tuple of subset elements whose image leaves the subset."""

    witness: tuple[int, ...]
    image: int


def restrict(op: FiniteNaryOp, subset: Sequence[int]) -> FiniteNaryOp | NotClosed:
    """The operation on `subset`, re-indexed in the given order, if closed."""
    idx = [int(x) for x in subset]
    if not idx:
        raise ValueError("subset must be non-empty")
    if len(set(idx)) != len(idx):
        raise ValueError(f"subset has repeated elements: {idx}")
    for x in idx:
        if not 0 <= x < op.order:
            raise ElementRangeError(x, op.order)

    sub = op.cube[np.ix_(*([idx] * op.arity))]
    lookup = np.full(op.order, -1, dtype=np.int64)
    lookup[idx] = np.arange(len(idx))
    mapped = lookup[sub]
    escaped = np.argwhere(mapped < 0)
    if escaped.size:
        witness = tuple(idx[int(i)] for i in escaped[0])
        return NotClosed(witness=witness, image=op.apply(witness))

    universe = op.universe.subset(idx)
    if isinstance(op, BinaryOpDesc):
        return BinaryOpDesc(universe, mapped.reshape(-1))
    return FiniteNaryOp(universe, op.arity, mapped.reshape(-1))
