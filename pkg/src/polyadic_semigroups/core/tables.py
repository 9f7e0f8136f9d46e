"""Finite operation tables: carriers, n-ary and binary operations, monoids.

Elements are dense indices 0..order-1; names are presentation-only. Tables are
stored flat in row-major order with x1 the most significant coordinate, so the
entry for (x1,...,xn) sits at ((x1*order + x2)*order + ...)*order + xn.
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import Any

import numpy as np
import numpy.typing as npt

from polyadic_semigroups.core.errors import (
    ArityMismatchError,
    CapExceededError,
    ElementRangeError,
    NotAssociativeError,
    NotNeutralError,
)

IntArray = npt.NDArray[np.int64]


@dataclass(frozen=True)
class Universe:
    """The carrier {0,...,order-1}, optionally with display names."""

    order: int
    names: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if self.order < 1:
            raise ValueError(f"order must be at least 1, got {self.order}")
        if self.names is None:
            return
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if len(names) != self.order:
            raise ValueError(f"expected {self.order} names, got {len(names)}")
        if len(set(names)) != len(names):
            raise ValueError("element names must be pairwise distinct")
        for name in names:
            if not name or any(ch.isspace() for ch in name):
                raise ValueError(f"invalid element name {name!r}")

    def name(self, index: int) -> str:
        """Display name of an element."""
        self.check(index)
        return self.names[index] if self.names else str(index)

    def check(self, index: int) -> int:
        """Return `index` if it is a valid element, else raise."""
        if not 0 <= index < self.order:
            raise ElementRangeError(index, self.order)
        return index

    def extended(self, *extra: str) -> "Universe":
        """Append fresh elements; names get a prime until they are unique."""
        if self.names is None:
            return Universe(self.order + len(extra))
        names = list(self.names)
        for base in extra:
            candidate = base
            while candidate in names:
                candidate += "'"
            names.append(candidate)
        return Universe(len(names), tuple(names))

    def subset(self, indices: Sequence[int]) -> "Universe":
        """Carrier of the listed elements, re-indexed in the given order."""
        if self.names is None:
            return Universe(len(indices))
        return Universe(len(indices), tuple(self.names[i] for i in indices))

    def permuted(self, sigma: Sequence[int]) -> "Universe":
        """Carrier after relabeling element x as sigma[x]."""
        if self.names is None:
            return self
        names = [""] * self.order
        for old, new in enumerate(sigma):
            names[new] = self.names[old]
        return Universe(self.order, tuple(names))


def flat_index(order: int, args: Sequence[int]) -> int:
    """Row-major position of an argument tuple."""
    index = 0
    for x in args:
        if not 0 <= x < order:
            raise ElementRangeError(x, order)
        index = index * order + x
    return index


def unflat_index(order: int, arity: int, index: int) -> tuple[int, ...]:
    """Inverse of `flat_index`."""
    if not 0 <= index < order**arity:
        raise ValueError(f"flat index {index} out of range for {order}^{arity}")
    args = [0] * arity
    for pos in range(arity - 1, -1, -1):
        index, args[pos] = divmod(index, order)
    return tuple(args)


def _default_cell_cap() -> int:
    from polyadic_semigroups.config import get_config

    return get_config().cell_cap


class FiniteNaryOp:
    """An arity-n operation table on a finite carrier. Immutable."""

    __slots__ = ("_universe", "_arity", "_table")

    def __init__(
        self,
        universe: Universe | int,
        arity: int,
        table: Iterable[int] | IntArray,
        *,
        cell_cap: int | None = None,
    ):
        if isinstance(universe, int):
            universe = Universe(universe)
        if arity < 2:
            raise ValueError(f"arity must be at least 2, got {arity}")
        cells = universe.order**arity
        cap = cell_cap if cell_cap is not None else _default_cell_cap()
        if cells > cap:
            raise CapExceededError(f"a {arity}-ary table on {universe.order} elements", cells, cap)
        values = table if isinstance(table, np.ndarray) else list(table)
        arr = np.array(values, dtype=np.int64).reshape(-1)
        if arr.size != cells:
            raise ValueError(f"table needs {cells} entries, got {arr.size}")
        if arr.size and (arr.min() < 0 or arr.max() >= universe.order):
            bad = int(arr[(arr < 0) | (arr >= universe.order)][0])
            raise ElementRangeError(bad, universe.order)
        arr.setflags(write=False)
        self._universe = universe
        self._arity = arity
        self._table: IntArray = arr

    @property
    def universe(self) -> Universe:
        return self._universe

    @property
    def order(self) -> int:
        return self._universe.order

    @property
    def arity(self) -> int:
        return self._arity

    @property
    def table(self) -> IntArray:
        """Flat read-only table, row-major."""
        return self._table

    @property
    def cube(self) -> IntArray:
        """The table viewed as an order x ... x order array."""
        return self._table.reshape((self.order,) * self.arity)

    def apply(self, args: Sequence[int]) -> int:
        """Evaluate the operation on an argument tuple."""
        if len(args) != self.arity:
            raise ArityMismatchError(self.arity, len(args))
        return int(self._table[flat_index(self.order, args)])

    def tolist(self) -> list[int]:
        return [int(v) for v in self._table]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteNaryOp):
            return NotImplemented
        return (
            self.order == other.order
            and self.arity == other.arity
            and bool(np.array_equal(self._table, other._table))
        )

    def __hash__(self) -> int:
        return hash((self.order, self.arity, self._table.tobytes()))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(order={self.order}, arity={self.arity})"


class BinaryOpDesc(FiniteNaryOp):
    """A binary operation table."""

    __slots__ = ()

    def __init__(
        self,
        universe: Universe | int,
        table: Iterable[int] | IntArray,
        *,
        cell_cap: int | None = None,
    ):
        super().__init__(universe, 2, table, cell_cap=cell_cap)

    @property
    def matrix(self) -> IntArray:
        return self.cube

    def __call__(self, x: int, y: int) -> int:
        return int(self._table[x * self.order + y])

    def __repr__(self) -> str:
        return f"BinaryOpDesc(order={self.order}, table={self.tolist()})"


def binary_is_associative(matrix: IntArray) -> bool:
    """(x.y).z == x.(y.z) for every triple of a square table."""
    return bool(np.array_equal(matrix[matrix, :], matrix[:, matrix]))


def binary_neutrals(matrix: IntArray) -> list[int]:
    """Two-sided identities of a square table."""
    ids = np.arange(matrix.shape[0])
    return [
        e
        for e in range(matrix.shape[0])
        if np.array_equal(matrix[e], ids) and np.array_equal(matrix[:, e], ids)
    ]


@dataclass(frozen=True)
class MonoidDesc:
    """An associative binary operation with a certified neutral element."""

    op: BinaryOpDesc
    neutral: int

    def __post_init__(self) -> None:
        self.op.universe.check(self.neutral)
        if not binary_is_associative(self.op.matrix):
            raise NotAssociativeError("monoid operation is not associative")
        if self.neutral not in binary_neutrals(self.op.matrix):
            raise NotNeutralError(self.neutral)

    @property
    def order(self) -> int:
        return self.op.order

    @property
    def universe(self) -> Universe:
        return self.op.universe

    def __call__(self, x: int, y: int) -> int:
        return self.op(x, y)

    def fold(self, args: Sequence[int]) -> int:
        """Left fold x1*...*xk; the empty product is the neutral element."""
        acc = self.neutral
        for x in args:
            acc = self.op(acc, x)
        return acc


def apply(op: FiniteNaryOp, args: Sequence[int]) -> int:
    """Evaluate `op` at `args`."""
    return op.apply(args)


def _permutation(sigma: Sequence[int], order: int) -> IntArray:
    perm = np.asarray(sigma, dtype=np.int64)
    if perm.shape != (order,) or sorted(perm.tolist()) != list(range(order)):
        raise ValueError(f"not a permutation of {order} elements: {list(sigma)}")
    return perm


def relabel(op: FiniteNaryOp, sigma: Sequence[int]) -> Any:
    """Isomorphic copy of `op` in which element x is renamed sigma[x].

    Returns the same operation class as the input.
    """
    perm = _permutation(sigma, op.order)
    inv = np.argsort(perm)
    image = perm[op.cube[np.ix_(*([inv] * op.arity))]]
    universe = op.universe.permuted(perm.tolist())
    if isinstance(op, BinaryOpDesc):
        return BinaryOpDesc(universe, image.reshape(-1))
    return FiniteNaryOp(universe, op.arity, image.reshape(-1))


def relabel_monoid(monoid: MonoidDesc, sigma: Sequence[int]) -> MonoidDesc:
    """Isomorphic copy of a monoid under the relabeling x -> sigma[x]."""
    op: BinaryOpDesc = relabel(monoid.op, sigma)
    return MonoidDesc(op, int(sigma[monoid.neutral]))
