"""Neutral elements: detection, reduction through one, and adjunction of one."""

import numpy as np

from polyadic_semigroups.core.errors import NotAssociativeError, NotNeutralError
from polyadic_semigroups.core.extension import fold_array
from polyadic_semigroups.core.tables import (
    BinaryOpDesc,
    FiniteNaryOp,
    MonoidDesc,
    binary_is_associative,
)


def neutral_elements(op: FiniteNaryOp) -> frozenset[int]:
    """All e with F(e^{k-1}, x, e^{n-k}) = x for every x and every slot k."""
    ids = np.arange(op.order)
    cube = op.cube
    found = set()
    for e in range(op.order):
        slots = (
            cube[tuple([e] * k + [slice(None)] + [e] * (op.arity - k - 1))]
            for k in range(op.arity)
        )
        if all(np.array_equal(line, ids) for line in slots):
            found.add(e)
    return frozenset(found)


def kfold_law_holds(op: FiniteNaryOp, b: BinaryOpDesc, e: int) -> bool:
    """x1 o ... o xk == F(x1,...,xk, e^{n-k}) for every k = 1..n."""
    n = op.arity
    cube = op.cube
    for k in range(1, n + 1):
        padded = cube[tuple([slice(None)] * k + [e] * (n - k))]
        if not np.array_equal(fold_array(b.matrix, k), padded):
            return False
    return True


def reduce_via_neutral(op: FiniteNaryOp, e: int) -> MonoidDesc:
    """The unique reduction of `op` that has `e` as its neutral element.

    x o y = F(x, e^{n-2}, y).
    """
    op.universe.check(e)
    if e not in neutral_elements(op):
        raise NotNeutralError(e)
    ids = np.arange(op.order)
    matrix = op.cube[tuple([ids[:, None]] + [e] * (op.arity - 2) + [ids[None, :]])]
    b = BinaryOpDesc(op.universe, matrix.reshape(-1))
    monoid = MonoidDesc(b, e)
    assert kfold_law_holds(op, b, e), "k-fold law failed for a neutral reduction"
    return monoid


def adjoin_identity(b: BinaryOpDesc) -> MonoidDesc:
    """Adjoin a fresh neutral element (index `order`) to a semigroup."""
    if not binary_is_associative(b.matrix):
        raise NotAssociativeError("cannot adjoin an identity to a non-associative table")
    k = b.order
    table = np.empty((k + 1, k + 1), dtype=np.int64)
    table[:k, :k] = b.matrix
    table[k, :] = np.arange(k + 1)
    table[:, k] = np.arange(k + 1)
    return MonoidDesc(BinaryOpDesc(b.universe.extended("e"), table.reshape(-1)), k)
