"""Canonical forms: the lexicographically smallest relabeling of a table."""

from collections.abc import Sequence
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

import numpy as np

from polyadic_semigroups.core.tables import (
    FiniteNaryOp,
    IntArray,
    MonoidDesc,
    relabel,
    relabel_monoid,
)
from polyadic_semigroups.search.oracles import code_digits


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Isomorphism-class key. Equal forms mean isomorphic operations."""

    order: int
    arity: int
    table: tuple[int, ...]

    def as_bytes(self) -> bytes:
        return bytes(self.table)


@lru_cache(maxsize=64)
def permutation_group(order: int, fixed: tuple[int, ...] = ()) -> IntArray:
    """All permutations of 0..order-1 that fix every point in `fixed`, in lex order."""
    moving = [x for x in range(order) if x not in fixed]
    rows = []
    for image in permutations(moving):
        sigma = list(range(order))
        for src, dst in zip(moving, image):
            sigma[src] = dst
        rows.append(sigma)
    perms = np.array(rows, dtype=np.int64).reshape(len(rows), order)
    perms.setflags(write=False)
    return perms


@lru_cache(maxsize=64)
def source_positions(order: int, arity: int, fixed: tuple[int, ...] = ()) -> IntArray:
    """src[p, y] = flat position that lands on y under relabeling by perm p."""
    perms = permutation_group(order, fixed)
    inverses = np.argsort(perms, axis=1)
    digits = code_digits(np.arange(order**arity, dtype=np.int64), order, arity)
    powers = order ** np.arange(arity - 1, -1, -1, dtype=np.int64)
    src = (inverses[:, digits] * powers).sum(axis=2)
    src.setflags(write=False)
    return src


def relabeled_images(
    table: IntArray, order: int, arity: int, fixed: tuple[int, ...] = ()
) -> IntArray:
    """Every relabeling of `table` under the group, one row per permutation."""
    perms = permutation_group(order, fixed)
    src = source_positions(order, arity, fixed)
    return np.take_along_axis(perms, np.asarray(table)[src], axis=1)


def _lexmin(images: IntArray) -> tuple[int, IntArray]:
    best = int(np.lexsort(images.T[::-1])[0])
    return best, images[best]


def canonical_form(obj: FiniteNaryOp | MonoidDesc) -> CanonicalForm:
    """Minimal relabeled table; a monoid's neutral element is pinned at order-1."""
    op, fixed = _pinned(obj)
    _, table = _lexmin(relabeled_images(op.table, op.order, op.arity, fixed))
    return CanonicalForm(op.order, op.arity, tuple(int(v) for v in table))


def canonical_op(obj: FiniteNaryOp | MonoidDesc) -> FiniteNaryOp | MonoidDesc:
    """The isomorphic copy whose table is the canonical form."""
    op, fixed = _pinned(obj)
    best, _ = _lexmin(relabeled_images(op.table, op.order, op.arity, fixed))
    sigma = permutation_group(op.order, fixed)[best].tolist()
    if isinstance(obj, MonoidDesc):
        pinned = relabel_monoid(obj, _to_last(obj.order, obj.neutral))
        return relabel_monoid(pinned, sigma)
    result: FiniteNaryOp = relabel(op, sigma)
    return result


def automorphism_count(op: FiniteNaryOp, fixed: Sequence[int] = ()) -> int:
    images = relabeled_images(op.table, op.order, op.arity, tuple(fixed))
    return int((images == op.table[None, :]).all(axis=1).sum())


def _to_last(order: int, element: int) -> list[int]:
    """Transposition swapping `element` with order-1."""
    sigma = list(range(order))
    sigma[element], sigma[order - 1] = order - 1, element
    return sigma


def _pinned(obj: FiniteNaryOp | MonoidDesc) -> tuple[FiniteNaryOp, tuple[int, ...]]:
    if isinstance(obj, MonoidDesc):
        moved = relabel_monoid(obj, _to_last(obj.order, obj.neutral))
        return moved.op, (obj.order - 1,)
    return obj, ()
