"""Independent brute-force oracles for the backtracking searches.

Every candidate table is enumerated and checked directly, in batches. Only
feasible for tiny carriers; used to validate the propagating search.
"""

from collections.abc import Iterator

import numpy as np

from polyadic_semigroups.config import get_config
from polyadic_semigroups.core.associativity import associative_mask
from polyadic_semigroups.core.errors import OracleTooLargeError
from polyadic_semigroups.core.tables import BinaryOpDesc, FiniteNaryOp, IntArray, MonoidDesc

CHUNK = 1 << 15


def code_digits(codes: IntArray, base: int, width: int) -> IntArray:
    """Mixed-radix digits of each code, most significant first."""
    powers = base ** np.arange(width - 1, -1, -1, dtype=np.int64)
    return (codes[:, None] // powers[None, :]) % base


def iter_tables(base: int, width: int, chunk: int = CHUNK) -> Iterator[IntArray]:
    """All base**width digit strings in lexicographic order, `chunk` rows at a time."""
    total = base**width
    for start in range(0, total, chunk):
        codes = np.arange(start, min(start + chunk, total), dtype=np.int64)
        yield code_digits(codes, base, width)


def batched_folds(tables: IntArray, size: int, carrier: int, arity: int) -> IntArray:
    """Left folds over carrier**arity tuples for every size x size table in the batch."""
    count = tables.shape[0]
    column = np.arange(carrier, dtype=np.int64)
    acc = np.broadcast_to(column, (count, carrier))
    for _ in range(arity - 1):
        idx = (acc[:, :, None] * size + column[None, None, :]).reshape(count, -1)
        acc = np.take_along_axis(tables, idx, axis=1)
    return np.asarray(acc)


def _check_oracle_order(op: FiniteNaryOp) -> None:
    cap = get_config().oracle_max_order
    if op.order > cap:
        raise OracleTooLargeError(
            f"brute-force oracles are limited to order {cap}, got order {op.order}"
        )


def brute_force_reductions(op: FiniteNaryOp) -> list[BinaryOpDesc]:
    """All associative binary tables whose extension is `op`, by exhaustion."""
    _check_oracle_order(op)
    k = op.order
    found: list[BinaryOpDesc] = []
    for tables in iter_tables(k, k * k):
        ok = associative_mask(tables, k, 2)
        ok &= (batched_folds(tables, k, k, op.arity) == op.table[None, :]).all(axis=1)
        found.extend(BinaryOpDesc(op.universe, t) for t in tables[ok])
    return found


def brute_force_adjunctions(op: FiniteNaryOp) -> list[MonoidDesc]:
    """All monoids on order+1 elements with neutral `order` restricting to `op`."""
    _check_oracle_order(op)
    k = op.order
    m = k + 1
    block = np.arange(m * m).reshape(m, m)[:k, :k].reshape(-1)
    universe = op.universe.extended("e")
    found: list[MonoidDesc] = []
    for blocks in iter_tables(m, k * k):
        tables = np.empty((blocks.shape[0], m * m), dtype=np.int64)
        tables[:, k * m : (k + 1) * m] = np.arange(m)
        tables[:, k::m] = np.arange(m)
        tables[:, block] = blocks
        ok = associative_mask(tables, m, 2)
        ok &= (batched_folds(tables, m, k, op.arity) == op.table[None, :]).all(axis=1)
        found.extend(MonoidDesc(BinaryOpDesc(universe, t), k) for t in tables[ok])
    return found
