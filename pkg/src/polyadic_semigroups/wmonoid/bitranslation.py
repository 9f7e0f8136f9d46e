"""Bitranslations and the W-monoids they construct.

A bitranslation of a semigroup (S, o) is a pair of self-maps (L, R) with
  left:     L(x o y) = L(x) o y
  right:    R(x o y) = x o R(y)
  linking:  x o L(y) = R(x) o y
When moreover L^2 = R^2 = id, LR = RL and L != R, adjoining a and e with
a * y = L(y), x * a = R(x) and a * a = e gives a W-monoid, and every
W-monoid arises this way.
"""

from dataclasses import dataclass
from typing import Literal

import numpy as np

from polyadic_semigroups.config import get_config
from polyadic_semigroups.core.errors import (
    AlgebraError,
    BitranslationError,
    ElementRangeError,
    EnumerationCapError,
    NotInvolutionError,
)
from polyadic_semigroups.core.extension import NotClosed, restrict
from polyadic_semigroups.core.tables import BinaryOpDesc, IntArray, MonoidDesc
from polyadic_semigroups.search.oracles import iter_tables
from polyadic_semigroups.wmonoid.witness import WMonoidWitness

Law = Literal["left", "right", "linking"]


@dataclass(frozen=True)
class Bitranslation:
    """A pair of self-maps (left, right) on the carrier of a semigroup."""

    carrier: BinaryOpDesc
    left: tuple[int, ...]
    right: tuple[int, ...]

    def __post_init__(self) -> None:
        order = self.carrier.order
        for name in ("left", "right"):
            values = tuple(int(v) for v in getattr(self, name))
            object.__setattr__(self, name, values)
            if len(values) != order:
                raise AlgebraError(f"{name} map needs {order} values, got {len(values)}")
            for v in values:
                if not 0 <= v < order:
                    raise ElementRangeError(v, order)


@dataclass(frozen=True)
class BitranslationViolation:
    law: Law
    pair: tuple[int, int]


def _first_mismatch(lhs: IntArray, rhs: IntArray) -> tuple[int, int] | None:
    bad = np.argwhere(lhs != rhs)
    if bad.size:
        return int(bad[0][0]), int(bad[0][1])
    return None


def verify_bitranslation(bt: Bitranslation) -> BitranslationViolation | None:
    """None when all three laws hold, else the first broken law and pair (x, y)."""
    t = bt.carrier.matrix
    left = np.asarray(bt.left, dtype=np.int64)
    right = np.asarray(bt.right, dtype=np.int64)
    laws: list[tuple[Law, IntArray, IntArray]] = [
        ("left", left[t], t[left, :]),
        ("right", right[t], t[:, right]),
        ("linking", t[:, left], t[right, :]),
    ]
    for law, lhs, rhs in laws:
        pair = _first_mismatch(lhs, rhs)
        if pair is not None:
            return BitranslationViolation(law, pair)
    return None


def check_construction_laws(bt: Bitranslation) -> None:
    """Raise BitranslationError naming the first law the construction needs but lacks."""
    violation = verify_bitranslation(bt)
    if violation is not None:
        x, y = violation.pair
        raise BitranslationError(violation.law, f"fails at ({x}, {y})")
    ids = tuple(range(bt.carrier.order))
    left, right = bt.left, bt.right
    if tuple(left[v] for v in left) != ids:
        raise BitranslationError("L^2=id")
    if tuple(right[v] for v in right) != ids:
        raise BitranslationError("R^2=id")
    if tuple(left[v] for v in right) != tuple(right[v] for v in left):
        raise BitranslationError("LR=RL")
    if left == right:
        raise BitranslationError("L!=R", "left and right maps coincide")


def from_bitranslation(bt: Bitranslation) -> MonoidDesc:
    """The W-monoid on S + {a, e} with a = |S| and e = |S| + 1."""
    check_construction_laws(bt)
    k = bt.carrier.order
    a, e = k, k + 1
    m = np.empty((k + 2, k + 2), dtype=np.int64)
    m[:k, :k] = bt.carrier.matrix
    m[a, :k] = bt.left
    m[:k, a] = bt.right
    m[a, a] = e
    m[e, :] = np.arange(k + 2)
    m[:, e] = np.arange(k + 2)
    universe = bt.carrier.universe.extended("a", "e")
    return MonoidDesc(BinaryOpDesc(universe, m.reshape(-1)), e)


def decompose(witness: WMonoidWitness) -> Bitranslation:
    """S = M - {a, e} with L(y) = a * y and R(x) = x * a restricted to S."""
    core = witness.core_elements()
    sub = restrict(witness.monoid.op, core)
    assert not isinstance(sub, NotClosed), f"core of a W-monoid is not closed: {sub}"
    assert isinstance(sub, BinaryOpDesc)
    position = {old: new for new, old in enumerate(core)}
    m = witness.monoid.op.matrix
    left = tuple(position[int(m[witness.a, x])] for x in core)
    right = tuple(position[int(m[x, witness.a])] for x in core)
    return Bitranslation(carrier=sub, left=left, right=right)


def inner_bitranslation(s: BinaryOpDesc | MonoidDesc, element: int) -> Bitranslation:
    """(y -> A o y, x -> x o A); a bitranslation for any A by associativity."""
    op = s.op if isinstance(s, MonoidDesc) else s
    op.universe.check(element)
    t = op.matrix
    return Bitranslation(carrier=op, left=tuple(t[element, :]), right=tuple(t[:, element]))


def ex46_bitranslation(x: MonoidDesc, i: int, j: int) -> Bitranslation:
    """The family built on S = X x X with (x, y) o (x', y') = (x <> x', y').

    L(x, y) = (i <> x, y) and R(x, y) = (x <> i, y <> j), for involutions
    i, j of X other than its neutral element. (x, y) is encoded as x*|X| + y.
    """
    t = x.op.matrix
    n = x.order
    for name, v in (("i", i), ("j", j)):
        x.universe.check(v)
        if v == x.neutral or t[v, v] != x.neutral:
            raise NotInvolutionError(f"{name}={v} must be an involution other than the neutral")

    first = np.repeat(np.arange(n), n)
    second = np.tile(np.arange(n), n)
    product = t[first[:, None], first[None, :]] * n + second[None, :]
    carrier = BinaryOpDesc(n * n, product.reshape(-1))
    left = t[i, first] * n + second
    right = t[first, i] * n + t[second, j]
    return Bitranslation(carrier=carrier, left=tuple(left), right=tuple(right))


def _involutions(maps: IntArray) -> IntArray:
    ids = np.arange(maps.shape[1])
    return maps[(np.take_along_axis(maps, maps, axis=1) == ids).all(axis=1)]


def enumerate_bitranslations(
    s: BinaryOpDesc, *, max_order: int | None = None
) -> list[Bitranslation]:
    """Every (L, R) satisfying the W-monoid construction laws, in lexicographic order.

    Involutive left translations and involutive right translations are
    filtered separately before any pairing.
    """
    cap = max_order if max_order is not None else get_config().bitranslation_max_order
    k = s.order
    if k > cap:
        raise EnumerationCapError("bitranslation enumeration", k, cap)

    t = s.matrix
    flat = t.reshape(-1)
    column = np.arange(k)
    lefts_list: list[IntArray] = []
    rights_list: list[IntArray] = []
    for maps in iter_tables(k, k):
        maps = _involutions(maps)
        count = maps.shape[0]
        image = maps[:, flat]
        # L(x o y) = L(x) o y
        left_rhs = flat[(maps[:, :, None] * k + column[None, None, :]).reshape(count, -1)]
        lefts_list.append(maps[(image == left_rhs).all(axis=1)])
        # R(x o y) = x o R(y)
        right_rhs = flat[(column[None, :, None] * k + maps[:, None, :]).reshape(count, -1)]
        rights_list.append(maps[(image == right_rhs).all(axis=1)])
    lefts = np.concatenate(lefts_list)
    rights = np.concatenate(rights_list)

    found: list[Bitranslation] = []
    for left in lefts:
        # x o L(y) = R(x) o y
        linking = (t[:, left][None, :, :] == t[rights, :]).all(axis=(1, 2))
        commuting = (left[rights] == rights[:, left]).all(axis=1)
        distinct = (rights != left[None, :]).any(axis=1)
        for right in rights[linking & commuting & distinct]:
            found.append(Bitranslation(carrier=s, left=tuple(left), right=tuple(right)))
    return found
